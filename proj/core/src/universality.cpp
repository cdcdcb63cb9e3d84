#include "hermsum/universality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "hermsum/errors.hpp"

namespace hermsum {
namespace {

constexpr std::array<Int, 9> kFifteen = {1, 2, 3, 5, 6, 7, 10, 14, 15};
constexpr std::array<Int, 29> kTwoNinety = {1,  2,  3,  5,  6,  7,  10, 13,  14,  15,
                                            17, 19, 21, 22, 23, 26, 29, 30,  31,  34,
                                            35, 37, 42, 58, 93, 110, 145, 203, 290};

enum class ValueKind { Square, Triangular, Pronic };

// Distinct values of one variable's term up to a limit, with an argument
// producing each.
struct TermTable {
  std::vector<Int> values;
  std::vector<Int> args;
};

TermTable term_table(ValueKind kind, Int weight, Int limit) {
  if (weight < 1) throw InvalidArgument("term weights must be positive");
  std::vector<std::pair<Int, Int>> hits;
  const auto value_of = [&](Int x) -> Int {
    switch (kind) {
      case ValueKind::Square:
        return weight * x * x;
      case ValueKind::Triangular:
        return weight * (x * (x + 1) / 2);
      case ValueKind::Pronic:
        return weight * x * x + x;  // weight plays the role of c in c x^2 + x
    }
    return 0;
  };
  for (Int x = 0;; ++x) {
    const Int v = value_of(x);
    if (v > limit) break;
    hits.emplace_back(v, x);
  }
  if (kind == ValueKind::Pronic) {
    for (Int x = -1;; --x) {
      const Int v = value_of(x);
      if (v > limit) break;
      hits.emplace_back(v, x);
    }
  }
  std::sort(hits.begin(), hits.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first < q.first;
    return std::abs(p.second) < std::abs(q.second) ||
           (std::abs(p.second) == std::abs(q.second) && p.second > q.second);
  });
  TermTable t;
  for (const auto& [v, x] : hits) {
    if (!t.values.empty() && t.values.back() == v) continue;
    t.values.push_back(v);
    t.args.push_back(x);
  }
  return t;
}

std::vector<TermTable> tables_for(const Form& form, Int limit) {
  std::vector<TermTable> out;
  if (const auto* diag = std::get_if<DiagonalForm>(&form)) {
    for (const Int c : diag->coefficients) out.push_back(term_table(ValueKind::Square, c, limit));
  } else {
    for (const auto& term : std::get<MixedSum>(form).terms) {
      const auto kind = term.kind == TermKind::Square ? ValueKind::Square : ValueKind::Triangular;
      out.push_back(term_table(kind, term.weight, limit));
    }
  }
  return out;
}

std::vector<char> sumset(const std::vector<char>& reach, std::span<const Int> values) {
  const std::size_t width = reach.size();
  std::vector<char> out(width, 0);
  for (std::size_t u = 0; u < width; ++u) {
    if (!reach[u]) continue;
    for (const Int v : values) {
      const std::size_t w = u + static_cast<std::size_t>(v);
      if (w >= width) break;
      out[w] = 1;
    }
  }
  return out;
}

std::vector<char> coverage(const std::vector<TermTable>& tables, Int limit) {
  std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
  reach[0] = 1;
  for (const auto& t : tables) reach = sumset(reach, t.values);
  return reach;
}

Representation represent(const std::vector<TermTable>& tables, Int n) {
  if (n < 0) return {};
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  // suffix[i]: sums of terms i..end
  std::vector<std::vector<char>> suffix(tables.size() + 1);
  suffix[tables.size()].assign(width, 0);
  suffix[tables.size()][0] = 1;
  for (std::size_t i = tables.size(); i-- > 0;) suffix[i] = sumset(suffix[i + 1], tables[i].values);
  if (!suffix[0][static_cast<std::size_t>(n)]) return {};

  Representation rep{true, {}};
  Int remaining = n;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto& t = tables[i];
    for (std::size_t j = 0; j < t.values.size() && t.values[j] <= remaining; ++j) {
      if (suffix[i + 1][static_cast<std::size_t>(remaining - t.values[j])]) {
        rep.witness.push_back(t.args[j]);
        remaining -= t.values[j];
        break;
      }
    }
  }
  return rep;
}

UniversalityResult scan(const std::vector<char>& reach) {
  for (std::size_t n = 1; n < reach.size(); ++n) {
    if (!reach[n]) return {false, static_cast<Int>(n)};
  }
  return {true, std::nullopt};
}

std::vector<TermTable> sun_tables(Int limit) {
  return {term_table(ValueKind::Pronic, 2, limit), term_table(ValueKind::Pronic, 3, limit),
          term_table(ValueKind::Pronic, 3, limit)};
}

}  // namespace

Representation represents_bounded(const Form& form, Int n) {
  if (n < 0) return {};
  return represent(tables_for(form, n), n);
}

CriterionSet criterion_set(CriterionName name) {
  if (name == CriterionName::Fifteen) return {name, kFifteen};
  return {name, kTwoNinety};
}

std::string_view to_string(CriterionName name) {
  return name == CriterionName::Fifteen ? "fifteen" : "290";
}

bool check_criterion(const Form& form, const CriterionSet& set) {
  if (set.numbers.empty()) return true;
  const Int top = *std::max_element(set.numbers.begin(), set.numbers.end());
  const auto reach = coverage(tables_for(form, top), top);
  return std::all_of(set.numbers.begin(), set.numbers.end(),
                     [&](Int n) { return reach[static_cast<std::size_t>(n)] != 0; });
}

bool is_sum_of_three_squares(Int n) {
  if (n < 0) return false;
  if (n == 0) return true;
  while (n % 4 == 0) n /= 4;
  return n % 8 != 7;
}

UniversalityResult universal_up_to(const Form& form, Int limit) {
  if (limit < 1) throw InvalidArgument("limit must be positive");
  return scan(coverage(tables_for(form, limit), limit));
}

UniversalityResult sun_polynomial_universal(Int limit) {
  if (limit < 1) throw InvalidArgument("limit must be positive");
  return scan(coverage(sun_tables(limit), limit));
}

Representation sun_polynomial_represents(Int n) {
  if (n < 0) return {};
  return represent(sun_tables(n), n);
}

std::vector<char> norm_sum_coverage(const FieldParams& f, int copies, Int limit) {
  if (limit < 0 || copies < 0) throw InvalidArgument("limit and copies must be non-negative");
  std::vector<Int> norms;
  const auto root = static_cast<Int>(std::sqrt(static_cast<double>(limit))) + 2;
  // |b| <= 2 sqrt(limit/d) and |a| <= sqrt(limit) + |b|/2 on either branch.
  for (Int b = -2 * root; b <= 2 * root; ++b) {
    for (Int a = -2 * root; a <= 2 * root; ++a) {
      const Int n = norm(f, {a, b});
      if (n <= limit) norms.push_back(n);
    }
  }
  std::sort(norms.begin(), norms.end());
  norms.erase(std::unique(norms.begin(), norms.end()), norms.end());

  std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
  reach[0] = 1;
  for (int i = 0; i < copies; ++i) reach = sumset(reach, norms);
  return reach;
}

int m_d_table_value(const FieldParams& f) {
  switch (f.d) {
    case 1:
    case 2:
    case 3:
    case 7:
    case 11:
      return 2;
    default:
      break;
  }
  if (!f.half_integral()) return (f.d >= 5 && f.d <= 7) ? 3 : 4;
  return (f.d >= 15 && f.d <= 27) ? 3 : 4;
}

MdCrossCheck cross_check_m_d(const FieldParams& f, Int cover_limit, Int miss_limit) {
  MdCrossCheck out;
  out.m = m_d_table_value(f);
  out.first_gap = scan(norm_sum_coverage(f, out.m, cover_limit)).first_gap;
  out.first_miss = scan(norm_sum_coverage(f, out.m - 1, miss_limit)).first_gap;
  return out;
}

int m_d(const FieldParams& f) {
  const MdCrossCheck check = cross_check_m_d(f);
  if (check.first_gap) {
    throw CrossCheckFailed("d=" + std::to_string(f.d) + ": " + std::to_string(check.m) +
                           " norms miss " + std::to_string(*check.first_gap));
  }
  if (!check.first_miss) {
    throw CrossCheckFailed("d=" + std::to_string(f.d) + ": " + std::to_string(check.m - 1) +
                           " norms already cover [1, 100]");
  }
  return check.m;
}

std::vector<NormSumIdentity> lemma2_witness_table() {
  std::vector<NormSumIdentity> rows = {
      {15, {1, 1, 1, 0, 0, 0}, 7},  {15, {2, 1, 1, 0, 2, 0}, 15},
      {15, {1, 1, 1, 0, 4, 0}, 23}, {15, {1, 1, 5, 0, 0, 0}, 31},
      {19, {1, 1, 0, 0, 0, 0}, 7},  {19, {1, 1, 2, 0, 2, 0}, 15},
      {19, {1, 1, 4, 0, 0, 0}, 23}, {19, {5, 0, 1, 0, 0, 1}, 31},
      {23, {1, 0, 0, 1, 0, 0}, 7},  {23, {1, 0, 0, 1, 1, 1}, 15},
      {23, {1, 0, 0, 1, 4, 0}, 23}, {23, {5, 0, 0, 1, 0, 0}, 31},
      {27, {0, 1, 0, 0, 0, 0}, 7},  {27, {0, 1, 2, 0, 2, 0}, 15},
      {27, {0, 1, 4, 0, 0, 0}, 23}, {27, {2, 1, 3, 0, 3, 0}, 31},
  };
  // d = 27 is not squarefree, so evaluate the form directly rather than
  // through FieldParams.
  for (auto& row : rows) {
    const Int c = (1 + row.d) / 4;
    row.computed = 0;
    for (std::size_t l = 0; l < 3; ++l) {
      const Int a = row.args[2 * l];
      const Int b = row.args[2 * l + 1];
      row.computed += a * a + a * b + c * b * b;
    }
  }
  return rows;
}

}  // namespace hermsum
