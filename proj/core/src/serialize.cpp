#include "hermsum/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "hermsum/certificate_check.hpp"

namespace hermsum {

Json to_json(const FieldParams& f) {
  return Json{{"d", f.d}, {"omega", std::string(to_string(f.branch))}, {"class_number", f.class_number}};
}

Json to_json(const IdealClassRep& rep) {
  return Json{{"class_index", rep.class_index},
              {"k", rep.k},
              {"s", rep.s},
              {"t", rep.t},
              {"h", "1/" + std::to_string(rep.k)}};
}

Json to_json(const CongruenceCondition& c) {
  Json out{{"k", c.k},
           {"kind", c.kind == CongruenceKind::Branch12 ? "branch12" : "branch3"},
           {"rows", Json::array({Json::array({c.row1[0], c.row1[1]}),
                                 Json::array({c.row2[0], c.row2[1]})})}};
  if (const auto lin = simplify(c)) out["simplified"] = lin->to_string();
  return out;
}

Json to_json(const RepCertificate& cert) {
  Json gammas = Json::array();
  for (const auto& g : cert.gammas) gammas.push_back(Json::array({g.a, g.b}));
  return Json{{"d", cert.query.field.d},
              {"class_index", cert.query.class_index},
              {"k", cert.k},
              {"r", cert.query.r},
              {"m", cert.m()},
              {"gammas", gammas},
              {"check", check_certificate(cert).sum_of_norms}};
}

Json to_json(const FieldReport& rep) {
  Json classes = Json::array();
  for (const auto& c : rep.classes) {
    classes.push_back(Json{{"class_index", c.class_index},
                           {"exceptions", c.computed_exceptions},
                           {"missing", c.missing},
                           {"unexpected", c.unexpected}});
  }
  return Json{{"d", rep.d},
              {"class_number", rep.class_number},
              {"status", rep.match() ? "match" : "mismatch"},
              {"g_expected", rep.g_expected},
              {"g_computed", rep.g_computed},
              {"g_witness", Json{{"class_index", rep.g_witness.class_index}, {"r", rep.g_witness.r}}},
              {"stable", rep.stable},
              {"exceptions_match", rep.exceptions_match},
              {"lemma4_agree", rep.lemma4_agree},
              {"classes", classes},
              {"mismatches", rep.mismatches}};
}

Json to_json(const DiffReport& report) {
  Json fields = Json::array();
  for (const auto& f : report.fields) fields.push_back(to_json(f));
  return Json{{"class_number", report.class_number},
              {"r_max", report.r_max},
              {"fields_total", report.fields.size()},
              {"fields_matched", report.matched()},
              {"all_stable", report.all_stable()},
              {"runtime_seconds", report.runtime_seconds},
              {"fields", fields}};
}

std::string to_table(const DiffReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "d" << std::setw(7) << "class" << std::setw(12) << "g_expected"
     << std::setw(12) << "g_computed" << std::setw(18) << "exceptions_match" << "stable\n";
  for (const auto& f : report.fields) {
    os << std::left << std::setw(6) << f.d << std::setw(7) << f.class_number << std::setw(12)
       << f.g_expected << std::setw(12) << f.g_computed << std::setw(18)
       << (f.exceptions_match ? "yes" : "no") << (f.stable ? "yes" : "no") << '\n';
  }
  os << report.matched() << '/' << report.fields.size() << " match, r_max=" << report.r_max << ", "
     << std::fixed << std::setprecision(3) << report.runtime_seconds << " s\n";
  return os.str();
}

Json class_tables_json() {
  Json out = Json::array();
  for (int c = 1; c <= 3; ++c) {
    for (const Int d : supported_fields(c)) {
      for (const auto& rep : class_reps(make_field(d))) {
        out.push_back(Json{{"d", d}, {"class_index", rep.class_index}, {"k", rep.k}, {"s", rep.s}, {"t", rep.t}});
      }
    }
  }
  return out;
}

std::string class_tables_csv() {
  std::string out = "d,class_index,k,s,t\n";
  for (const auto& row : class_tables_json()) {
    out += std::to_string(row["d"].get<Int>()) + ',' + std::to_string(row["class_index"].get<int>()) +
           ',' + std::to_string(row["k"].get<Int>()) + ',' + std::to_string(row["s"].get<Int>()) + ',' +
           std::to_string(row["t"].get<Int>()) + '\n';
  }
  return out;
}

}  // namespace hermsum
