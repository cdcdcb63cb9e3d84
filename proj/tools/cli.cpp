#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <sstream>

#include "hermsum/classdata.hpp"
#include "hermsum/errors.hpp"
#include "hermsum/quadfield.hpp"
#include "hermsum/repsearch.hpp"
#include "hermsum/serialize.hpp"
#include "hermsum/universality.hpp"
#include "hermsum/verify.hpp"

namespace hermsum::cli {
namespace {

enum class Format { Json, Csv, Table };

const std::map<std::string, Format> kFormats = {
    {"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};

struct Options {
  Int d = 0;
  int class_index = 2;
  Int r = 1;
  int m = 1;
  Int r_max = 300;
  int class_number = 2;
  Int dp_cap = 10'000'000;
  unsigned jobs = 0;
  Format format = Format::Json;
  Int limit = 10'000;
  std::string diagonal;
  std::string mixed;
};

class UnsupportedFormat : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

void require_json(const Options& o, const char* command) {
  if (o.format != Format::Json) {
    throw UnsupportedFormat(std::string(command) + " only supports --format json");
  }
}

std::string join(const std::vector<Int>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<Int> parse_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidArgument("empty entry in list '" + text + "'");
    std::size_t used = 0;
    const Int v = std::stoll(item, &used);
    if (used != item.size()) throw InvalidArgument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "T2,S1,S1" -> 2T_x + y^2 + z^2
MixedSum parse_mixed(const std::string& text) {
  MixedSum sum;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() < 2 || (item[0] != 'S' && item[0] != 'T')) {
      throw InvalidArgument("mixed term must look like S<w> or T<w>, got '" + item + "'");
    }
    const auto weights = parse_list(item.substr(1));
    sum.terms.push_back({item[0] == 'S' ? TermKind::Square : TermKind::Triangular, weights.at(0)});
  }
  return sum;
}

void field_info(const Options& o, std::ostream& out) {
  const FieldParams f = make_field(o.d);
  const auto reps = class_reps(f);
  if (o.format == Format::Table) {
    out << "d=" << f.d << " omega=" << to_string(f.branch) << " class_number=" << f.class_number
        << '\n';
    for (const auto& rep : reps) {
      const auto lin = simplify(congruence_for(f, rep));
      out << "class " << rep.class_index << ": k=" << rep.k << " s=" << rep.s << " t=" << rep.t
          << " condition " << (lin ? lin->to_string() : "(two congruences)") << '\n';
    }
    return;
  }
  require_json(o, "field-info");
  Json classes = Json::array();
  for (const auto& rep : reps) {
    Json entry = to_json(rep);
    entry["condition"] = to_json(congruence_for(f, rep));
    classes.push_back(entry);
  }
  Json doc = to_json(f);
  doc["classes"] = classes;
  out << doc.dump() << '\n';
}

void min_terms_cmd(const Options& o, std::ostream& out) {
  require_json(o, "min-terms");
  const LatticeQuery q{make_field(o.d), o.class_index, o.r};
  const auto res = min_terms(q, SearchOptions{o.dp_cap});
  Json doc{{"outcome", res.representable() ? "representable" : "unrepresentable"}};
  if (res.m) doc["m"] = *res.m;
  out << doc.dump() << '\n';
}

void certificate_cmd(const Options& o, std::ostream& out) {
  require_json(o, "certificate");
  const LatticeQuery q{make_field(o.d), o.class_index, o.r};
  const auto cert = find_certificate(q, o.m, SearchOptions{o.dp_cap});
  if (!cert) {
    out << Json{{"outcome", "unrepresentable"}}.dump() << '\n';
    return;
  }
  Json doc{{"outcome", "representable"}};
  doc.update(to_json(*cert));
  out << doc.dump() << '\n';
}

void exceptional_cmd(const Options& o, std::ostream& out) {
  const FieldParams f = make_field(o.d);
  const auto exc = exceptional_set(f, o.class_index, o.r_max, SearchOptions{o.dp_cap});
  switch (o.format) {
    case Format::Json:
      out << Json{{"d", f.d}, {"class_index", o.class_index}, {"r_max", o.r_max}, {"exceptions", exc}}
                 .dump()
          << '\n';
      break;
    case Format::Csv:
      out << "r\n";
      for (const Int r : exc) out << r << '\n';
      break;
    case Format::Table:
      out << "d=" << f.d << " class " << o.class_index << " r<=" << o.r_max << ": "
          << (exc.empty() ? "(none)" : join(exc, ",")) << '\n';
      break;
  }
}

void g_cmd(const Options& o, std::ostream& out) {
  require_json(o, "g");
  const FieldParams f = make_field(o.d);
  const auto g = g_invariant(f, o.r_max, SearchOptions{o.dp_cap});
  out << Json{{"d", f.d},
              {"r_max", o.r_max},
              {"g", g.g},
              {"witness", Json{{"class_index", g.witness.class_index}, {"r", g.witness.r}}},
              {"stable", g.stable}}
             .dump()
      << '\n';
}

void m_d_cmd(const Options& o, std::ostream& out) {
  require_json(o, "m-d");
  const FieldParams f = make_field(o.d);
  const int m = m_d(f);
  const auto check = cross_check_m_d(f);
  out << Json{{"d", f.d}, {"m_d", m}, {"cover_limit", 10'000}, {"first_miss_with_m_minus_1", *check.first_miss}}
             .dump()
      << '\n';
}

int verify_cmd(const Options& o, std::ostream& out) {
  const auto report = verify_all(o.class_number, o.r_max, o.jobs, SearchOptions{o.dp_cap});
  switch (o.format) {
    case Format::Json:
      out << to_json(report).dump() << '\n';
      break;
    case Format::Table:
      out << to_table(report);
      break;
    case Format::Csv:
      out << "d,class,g_expected,g_computed,exceptions_match,stable\n";
      for (const auto& f : report.fields) {
        out << f.d << ',' << f.class_number << ',' << f.g_expected << ',' << f.g_computed << ','
            << (f.exceptions_match ? "true" : "false") << ',' << (f.stable ? "true" : "false") << '\n';
      }
      break;
  }
  return report.all_match() ? kOk : kMismatch;
}

void tables_cmd(const Options& o, std::ostream& out) {
  if (o.format == Format::Csv) {
    out << class_tables_csv();
    return;
  }
  require_json(o, "tables");
  out << class_tables_json().dump() << '\n';
}

void lemma2_cmd(const Options& o, std::ostream& out) {
  require_json(o, "lemma2");
  Json rows = Json::array();
  for (const auto& id : lemma2_witness_table()) {
    rows.push_back(Json{{"d", id.d}, {"args", id.args}, {"expected", id.expected},
                        {"computed", id.computed}, {"pass", id.pass()}});
  }
  out << rows.dump() << '\n';
}

void universal_cmd(const Options& o, std::ostream& out) {
  require_json(o, "universal");
  if (o.diagonal.empty() == o.mixed.empty()) {
    throw InvalidArgument("give exactly one of --diagonal or --mixed");
  }
  Form form = o.diagonal.empty() ? Form{parse_mixed(o.mixed)} : Form{DiagonalForm{parse_list(o.diagonal)}};
  const auto res = universal_up_to(form, o.limit);
  Json doc{{"limit", o.limit}, {"universal", res.universal}};
  if (res.first_gap) doc["first_gap"] = *res.first_gap;
  if (!o.diagonal.empty()) {
    doc["fifteen"] = check_criterion(form, criterion_set(CriterionName::Fifteen));
  }
  doc["two_ninety"] = check_criterion(form, criterion_set(CriterionName::TwoNinety));
  out << doc.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of norms over imaginary quadratic fields of class number 1, 2 or 3"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or table")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  const auto add_field = [&](CLI::App* sub) {
    sub->add_option("-d", o.d, "squarefree d of Q(sqrt(-d))")->required();
  };
  const auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--dp-cap", o.dp_cap, "largest DP target r*k")->capture_default_str();
  };

  std::function<int()> action;
  const auto on = [&](CLI::App* sub, std::function<void()> fn) {
    sub->callback([&action, fn] { action = [fn] { fn(); return kOk; }; });
  };

  auto* info = app.add_subcommand("field-info", "field parameters, class reps and congruences");
  add_field(info);
  add_format(info);
  on(info, [&] { field_info(o, out); });

  auto* mt = app.add_subcommand("min-terms", "fewest norms representing L^r");
  add_field(mt);
  mt->add_option("--class", o.class_index, "ideal class index (1 = principal)")->required();
  mt->add_option("-r", o.r, "h(v^r) = r/k")->required();
  add_cap(mt);
  add_format(mt);
  on(mt, [&] { min_terms_cmd(o, out); });

  auto* cert = app.add_subcommand("certificate", "least certificate with exactly m norms");
  add_field(cert);
  cert->add_option("--class", o.class_index, "ideal class index")->required();
  cert->add_option("-r", o.r, "h(v^r) = r/k")->required();
  cert->add_option("-m", o.m, "number of summands")->required();
  add_cap(cert);
  add_format(cert);
  on(cert, [&] { certificate_cmd(o, out); });

  auto* exc = app.add_subcommand("exceptional", "unrepresentable r up to --r-max");
  add_field(exc);
  exc->add_option("--class", o.class_index, "ideal class index")->required();
  exc->add_option("--r-max", o.r_max)->capture_default_str();
  add_cap(exc);
  add_format(exc);
  on(exc, [&] { exceptional_cmd(o, out); });

  auto* g = app.add_subcommand("g", "uniform bound over all classes, r <= --r-max");
  add_field(g);
  g->add_option("--r-max", o.r_max)->capture_default_str();
  add_cap(g);
  add_format(g);
  on(g, [&] { g_cmd(o, out); });

  auto* md = app.add_subcommand("m-d", "fewest norms summing to every positive integer");
  add_field(md);
  add_format(md);
  on(md, [&] { m_d_cmd(o, out); });

  auto* ver = app.add_subcommand("verify", "recompute and diff every field of a class number");
  ver->add_option("--class-number", o.class_number, "2 or 3")->required();
  ver->add_option("--r-max", o.r_max)->capture_default_str();
  ver->add_option("--jobs", o.jobs, "worker threads, 0 = all processors")->capture_default_str();
  add_cap(ver);
  add_format(ver);
  ver->callback([&] { action = [&] { return verify_cmd(o, out); }; });

  auto* tab = app.add_subcommand("tables", "export the ideal class representative tables");
  add_format(tab);
  on(tab, [&] { tables_cmd(o, out); });

  auto* l2 = app.add_subcommand("lemma2", "evaluate the three-norm witness identities");
  add_format(l2);
  on(l2, [&] { lemma2_cmd(o, out); });

  auto* uni = app.add_subcommand("universal", "bounded universality of a diagonal form or mixed sum");
  uni->add_option("--diagonal", o.diagonal, "coefficients, e.g. 1,1,1,5");
  uni->add_option("--mixed", o.mixed, "terms, e.g. T2,S1,S1 for 2T_x+y^2+z^2");
  uni->add_option("--limit", o.limit)->capture_default_str();
  add_format(uni);
  on(uni, [&] { universal_cmd(o, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    return action ? action() : kBadInput;
  } catch (const UnsupportedField& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedField;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Overflow& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << '\n';
    return kBadInput;
  } catch (const CrossCheckFailed& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hermsum::cli
