#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hermsum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

TEST(Cli, FieldInfo) {
  const auto r = run({"field-info", "-d", "35"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(trimmed(r.out),
            R"j({"d":35,"omega":"(1+sqrt(-d))/2","class_number":2,"classes":[)j"
            R"j({"class_index":1,"k":1,"s":0,"t":0,"h":"1/1","condition":{"k":1,"kind":"branch3","rows":[[0,0],[0,0]],"simplified":"none"}},)j"
            R"j({"class_index":2,"k":5,"s":2,"t":1,"h":"1/5","condition":{"k":5,"kind":"branch3","rows":[[2,-9],[1,3]],"simplified":"5|(a+3b)"}}]})j");

  const auto bad = run({"field-info", "-d", "4"});
  EXPECT_EQ(bad.code, hermsum::cli::kBadInput);
  EXPECT_NE(bad.err.find("NotSquarefree"), std::string::npos);

  const auto j23 = nlohmann::json::parse(run({"field-info", "-d", "23"}).out);
  const auto& classes = j23.at("classes");
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[1].at("k"), 2);
  EXPECT_EQ(classes[2].at("k"), 2);
  EXPECT_NE(classes[1].at("s"), classes[2].at("s"));

  EXPECT_EQ(run({"field-info", "-d", "21"}).code, hermsum::cli::kUnsupportedField);
  EXPECT_EQ(run({"field-info", "-d", "0"}).code, hermsum::cli::kBadInput);
}

TEST(Cli, MinTermsAndCertificate) {
  const auto m = run({"min-terms", "-d", "51", "--class", "2", "-r", "6"});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(trimmed(m.out), R"j({"outcome":"representable","m":2})j");

  const auto none = run({"min-terms", "-d", "10", "--class", "2", "-r", "3"});
  EXPECT_EQ(trimmed(none.out), R"j({"outcome":"unrepresentable"})j");

  const auto nf = run({"certificate", "-d", "5", "--class", "2", "-r", "1", "-m", "4"});
  EXPECT_EQ(nf.code, 0);
  EXPECT_EQ(trimmed(nf.out), R"j({"outcome":"unrepresentable"})j");

  const auto c = run({"certificate", "-d", "51", "--class", "2", "-r", "6", "-m", "2"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(trimmed(c.out),
            R"j({"outcome":"representable","d":51,"class_index":2,"k":5,"r":6,"m":2,"gammas":[[2,-1],[2,-1]],"check":30})j");
  // deterministic across runs
  EXPECT_EQ(run({"certificate", "-d", "907", "--class", "2", "-r", "81", "-m", "5"}).out,
            run({"certificate", "-d", "907", "--class", "2", "-r", "81", "-m", "5"}).out);

  EXPECT_EQ(run({"min-terms", "-d", "51", "--class", "3", "-r", "6"}).code, hermsum::cli::kBadInput);
  EXPECT_EQ(run({"min-terms", "-d", "907", "--class", "2", "-r", "1000", "--dp-cap", "100"}).code,
            hermsum::cli::kBadInput);
}

TEST(Cli, ExceptionalGAndMd) {
  const auto e = nlohmann::json::parse(run({"exceptional", "-d", "13", "--class", "2", "--r-max", "40"}).out);
  EXPECT_EQ(e.at("exceptions"), nlohmann::json::parse("[1,3,5]"));

  const auto g = nlohmann::json::parse(run({"g", "-d", "907"}).out);
  EXPECT_EQ(g.at("g"), 5);
  EXPECT_EQ(g.at("witness").at("r"), 81);

  const auto md = nlohmann::json::parse(run({"m-d", "-d", "5"}).out);
  EXPECT_EQ(md.at("m_d"), 3);
}

TEST(Cli, Verify) {
  const auto v3 = run({"verify", "--class-number", "3", "--r-max", "300"});
  EXPECT_EQ(v3.code, 0) << v3.err;
  const auto j = nlohmann::json::parse(v3.out);
  EXPECT_EQ(j.at("fields_matched"), 16);
  EXPECT_EQ(j.at("fields").size(), 16u);

  const auto table = run({"verify", "--class-number", "2", "--format", "table"});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("18/18 match"), std::string::npos);

  EXPECT_EQ(run({"verify", "--class-number", "2", "--r-max", "50"}).code, hermsum::cli::kBadInput);
}

TEST(Cli, TablesAndMisc) {
  const auto csv = run({"tables", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("d,class_index,k,s,t\n", 0), 0u);

  const auto l2 = run({"lemma2"});
  EXPECT_EQ(l2.code, 0);
  EXPECT_EQ(nlohmann::json::parse(l2.out).size(), 16u);

  const auto u = nlohmann::json::parse(run({"universal", "--mixed", "T2,S1,S1", "--limit", "1000"}).out);
  EXPECT_EQ(u.at("universal"), true);
  const auto u3 = nlohmann::json::parse(run({"universal", "--diagonal", "1,1,1", "--limit", "100"}).out);
  EXPECT_EQ(u3.at("first_gap"), 7);

  EXPECT_EQ(run({"g", "-d", "5", "--format", "xml"}).code, hermsum::cli::kBadInput);
  EXPECT_EQ(run({"no-such-command"}).code, hermsum::cli::kBadInput);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
