#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "hermsum/errors.hpp"
#include "hermsum/universality.hpp"
#include "oracles.hpp"

namespace hermsum {
namespace {

DiagonalForm diag(std::vector<Int> c) { return {std::move(c)}; }

MixedSum mixed(std::initializer_list<std::pair<TermKind, Int>> ts) {
  MixedSum m;
  for (const auto& [kind, w] : ts) m.terms.push_back({kind, w});
  return m;
}

constexpr auto T = TermKind::Triangular;
constexpr auto S = TermKind::Square;

Int evaluate(const Form& form, const std::vector<Int>& x) {
  Int total = 0;
  if (const auto* d = std::get_if<DiagonalForm>(&form)) {
    for (std::size_t i = 0; i < x.size(); ++i) total += d->coefficients[i] * x[i] * x[i];
  } else {
    const auto& m = std::get<MixedSum>(form);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Int v = m.terms[i].kind == S ? x[i] * x[i] : x[i] * (x[i] + 1) / 2;
      total += m.terms[i].weight * v;
    }
  }
  return total;
}

TEST(RepresentsBounded, Examples) {
  EXPECT_FALSE(represents_bounded(diag({1, 1, 1}), 7).represented);
  const Form f = mixed({{T, 2}, {S, 1}, {S, 1}});
  const auto r5 = represents_bounded(f, 5);
  ASSERT_TRUE(r5.represented);
  EXPECT_EQ(evaluate(f, r5.witness), 5);
  const auto r0 = represents_bounded(diag({1, 1, 1}), 0);
  EXPECT_TRUE(r0.represented);
  EXPECT_EQ(r0.witness, (std::vector<Int>{0, 0, 0}));
}

TEST(RepresentsBounded, WitnessesEvaluateCorrectly) {
  const std::vector<Form> forms{diag({1, 2, 3}), diag({1, 1, 1, 5}), mixed({{T, 1}, {T, 2}, {S, 3}})};
  for (const auto& f : forms) {
    for (Int n = 0; n <= 500; ++n) {
      const auto r = represents_bounded(f, n);
      if (r.represented) ASSERT_EQ(evaluate(f, r.witness), n);
    }
  }
}

TEST(Criterion, Constants) {
  const auto fifteen = criterion_set(CriterionName::Fifteen);
  EXPECT_EQ(std::vector<Int>(fifteen.numbers.begin(), fifteen.numbers.end()),
            (std::vector<Int>{1, 2, 3, 5, 6, 7, 10, 14, 15}));
  const auto big = criterion_set(CriterionName::TwoNinety);
  EXPECT_EQ(std::vector<Int>(big.numbers.begin(), big.numbers.end()),
            (std::vector<Int>{1,  2,  3,  5,  6,  7,  10, 13,  14,  15,  17,  19,  21,  22, 23,
                              26, 29, 30, 31, 34, 35, 37, 42, 58, 93, 110, 145, 203, 290}));
  EXPECT_EQ(to_string(CriterionName::Fifteen), "fifteen");
  EXPECT_EQ(to_string(CriterionName::TwoNinety), "290");
}

TEST(Criterion, Fifteen) {
  const auto set = criterion_set(CriterionName::Fifteen);
  EXPECT_TRUE(check_criterion(diag({1, 1, 1, 1}), set));
  EXPECT_TRUE(check_criterion(diag({1, 1, 1, 5}), set));
  EXPECT_TRUE(check_criterion(diag({1, 1, 1, 6, 6}), set));
  EXPECT_FALSE(check_criterion(diag({1, 1, 1}), set));
  EXPECT_FALSE(check_criterion(diag({1, 2, 5, 5}), set));
  // <1,1,1,d> passes for d in 1..7 only
  for (Int d = 1; d <= 10; ++d) {
    EXPECT_EQ(check_criterion(diag({1, 1, 1, d}), set), d <= 7) << d;
  }
  EXPECT_TRUE(check_criterion(mixed({{T, 2}, {S, 1}, {S, 1}}), criterion_set(CriterionName::TwoNinety)));
}

TEST(ThreeSquares, AgreesWithBruteForce) {
  const Int limit = 10'000;
  std::vector<char> hit(limit + 1, 0);
  for (Int x = 0; x * x <= limit; ++x) {
    for (Int y = x; x * x + y * y <= limit; ++y) {
      for (Int z = y; x * x + y * y + z * z <= limit; ++z) hit[x * x + y * y + z * z] = 1;
    }
  }
  for (Int n = 0; n <= limit; ++n) ASSERT_EQ(is_sum_of_three_squares(n), hit[n] != 0) << n;
}

TEST(UniversalUpTo, Examples) {
  EXPECT_TRUE(universal_up_to(mixed({{T, 2}, {S, 1}, {S, 1}}), 10'000).universal);
  EXPECT_TRUE(universal_up_to(mixed({{T, 2}, {T, 2}, {S, 1}}), 10'000).universal);
  const auto two = universal_up_to(diag({1, 1}), 100);
  EXPECT_FALSE(two.universal);
  EXPECT_EQ(two.first_gap, 3);
  EXPECT_EQ(universal_up_to(diag({1, 1, 1}), 100).first_gap, 7);
  EXPECT_FALSE(universal_up_to(diag({1, 1, 1, 1}), 1000).first_gap.has_value());
}

// 2 T_x = x^2 + x, so x^2 + x + y^2 + z^2 hits exactly what 2T + y^2 + z^2 does.
TEST(UniversalUpTo, TriangularIdentity) {
  for (Int x = -1000; x <= 1000; ++x) ASSERT_EQ(2 * (x * (x + 1) / 2), x * x + x);
  const Form f = mixed({{T, 2}, {S, 1}, {S, 1}});
  for (Int n = 0; n <= 2000; ++n) {
    bool brute = false;
    for (Int x = 0; x * x + x <= n && !brute; ++x) {
      for (Int y = 0; x * x + x + y * y <= n && !brute; ++y) {
        const Int rest = n - x * x - x - y * y;
        Int z = 0;
        while (z * z < rest) ++z;
        brute = z * z == rest;
      }
    }
    ASSERT_EQ(represents_bounded(f, n).represented, brute) << n;
  }
}

TEST(SunPolynomial, UniversalAndWitnesses) {
  EXPECT_TRUE(sun_polynomial_universal(10'000).universal);
  for (Int n = 0; n <= 300; ++n) {
    const auto r = sun_polynomial_represents(n);
    ASSERT_TRUE(r.represented) << n;
    ASSERT_EQ(r.witness.size(), 3u);
    const Int a = r.witness[0], b = r.witness[1], c = r.witness[2];
    ASSERT_EQ(2 * a * a + a + 3 * b * b + b + 3 * c * c + c, n);
  }
}

TEST(Md, Values) {
  EXPECT_EQ(m_d(make_field(5)), 3);
  EXPECT_EQ(m_d(make_field(11)), 2);
  EXPECT_EQ(m_d(make_field(31)), 4);
  EXPECT_EQ(m_d(make_field(1)), 2);
  EXPECT_EQ(m_d(make_field(19)), 3);
}

TEST(Md, CrossCheckEveryField) {
  for (const int cn : {1, 2, 3}) {
    for (const Int d : supported_fields(cn)) {
      const auto f = make_field(d);
      const auto x = cross_check_m_d(f);
      EXPECT_TRUE(x.ok()) << "d=" << d << " m=" << x.m;
      EXPECT_EQ(x.m, m_d_table_value(f));
    }
  }
}

// Coverage against a direct sumset over the oracle's norm values.
TEST(Md, CoverageMatchesOracleNorms) {
  for (const Int d : {2, 5, 7, 15, 23, 427}) {
    const auto f = make_field(d);
    const Int limit = 300;
    const auto norms = oracle::summand_norms(d, 1, 0, 0, limit);
    std::vector<char> reach(limit + 1, 0);
    reach[0] = 1;
    for (int copy = 0; copy < 3; ++copy) {
      std::vector<char> next = reach;  // zero summands are allowed
      for (Int t = 0; t <= limit; ++t) {
        if (!reach[t]) continue;
        for (const Int v : norms) {
          if (t + v > limit) break;
          next[t + v] = 1;
        }
      }
      reach = std::move(next);
    }
    EXPECT_EQ(norm_sum_coverage(f, 3, limit), reach) << d;
  }
}

TEST(Lemma2, IdentitiesHold) {
  const auto find = [](const std::vector<NormSumIdentity>& rows, Int d, std::array<Int, 6> args) {
    return std::find_if(rows.begin(), rows.end(),
                        [&](const NormSumIdentity& r) { return r.d == d && r.args == args; });
  };
  const auto rows = lemma2_witness_table();
  EXPECT_EQ(rows.size(), 16u);
  const auto a = find(rows, 15, {1, 1, 1, 0, 0, 0});
  ASSERT_NE(a, rows.end());
  EXPECT_EQ(a->computed, 7);
  const auto b = find(rows, 27, {0, 1, 0, 0, 0, 0});
  ASSERT_NE(b, rows.end());
  EXPECT_EQ(b->computed, 7);
  const auto c = find(rows, 19, {5, 0, 1, 0, 0, 1});
  ASSERT_NE(c, rows.end());
  EXPECT_EQ(c->computed, 31);
  const auto e = find(rows, 27, {2, 1, 3, 0, 3, 0});
  ASSERT_NE(e, rows.end());
  EXPECT_EQ(e->computed, 31);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.pass()) << "d=" << r.d << " expected " << r.expected << " got " << r.computed;
    const Int half = (1 + r.d) / 4;
    Int direct = 0;
    for (int i = 0; i < 3; ++i) {
      const Int a = r.args[2 * i], b = r.args[2 * i + 1];
      direct += a * a + a * b + half * b * b;
    }
    EXPECT_EQ(direct, r.expected);
  }
}

}  // namespace
}  // namespace hermsum
