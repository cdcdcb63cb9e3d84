#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hermsum/classdata.hpp"
#include "hermsum/errors.hpp"
#include "hermsum/serialize.hpp"
#include "oracles.hpp"

namespace hermsum {
namespace {

std::vector<FieldParams> all_fields(int class_number) {
  std::vector<FieldParams> out;
  for (const Int d : supported_fields(class_number)) out.push_back(make_field(d));
  return out;
}

TEST(ClassReps, Examples) {
  const auto r35 = class_reps(make_field(35));
  ASSERT_EQ(r35.size(), 2u);
  EXPECT_EQ(r35[0], (IdealClassRep{1, 1, 0, 0}));
  EXPECT_EQ(r35[1], (IdealClassRep{2, 5, 2, 1}));
  EXPECT_EQ(r35[1].h_scale(), (Rational{1, 5}));

  const auto r23 = class_reps(make_field(23));
  ASSERT_EQ(r23.size(), 3u);
  EXPECT_EQ(r23[1], (IdealClassRep{2, 2, 0, 1}));
  EXPECT_EQ(r23[2], (IdealClassRep{3, 2, -1, 1}));

  const auto r1 = class_reps(make_field(1));
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_EQ(r1[0], (IdealClassRep{1, 1, 0, 0}));

  EXPECT_THROW((void)class_rep(make_field(5), 3), InvalidArgument);
  EXPECT_THROW((void)class_rep(make_field(5), 0), InvalidArgument);
}

TEST(ClassReps, MatchGoldenTranscription) {
  std::ifstream in(std::string(HERMSUM_GOLDEN_DIR) + "/class_tables.csv");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(class_tables_csv(), golden.str());
}

TEST(ClassReps, ValidateTablesIsClean) {
  const auto violations = validate_tables();
  for (const auto& v : violations) ADD_FAILURE() << v.d << "/" << v.class_index << ": " << v.message;
  EXPECT_TRUE(violations.empty());
}

TEST(ClassReps, NormDivisibility) {
  // d=35: N(2+w) = 4+2+9 = 15, divisible by 5
  EXPECT_EQ(norm(make_field(35), {2, 1}), 15);
  const auto f = make_field(907);
  EXPECT_EQ(class_rep(f, 2).s + class_rep(f, 3).s, -1);
  EXPECT_EQ(class3_n(f), 9);
  EXPECT_EQ(class3_n(make_field(23)), 1);
  EXPECT_THROW((void)class3_n(make_field(5)), InvalidArgument);
}

bool same_predicate(const CongruenceCondition& c, const LinearCongruence& lin, Int span) {
  for (Int a = -span; a <= span; ++a) {
    for (Int b = -span; b <= span; ++b) {
      if (predicate_holds(c, a, b) != lin.holds(a, b)) return false;
    }
  }
  return true;
}

TEST(Congruence, PaperReductions) {
  const auto f5 = make_field(5);
  const auto c5 = congruence_for(f5, class_rep(f5, 2));
  EXPECT_EQ(c5.kind, CongruenceKind::Branch12);
  EXPECT_EQ(c5.row1[0], 1);
  EXPECT_EQ(c5.row1[1], -5);
  EXPECT_TRUE(same_predicate(c5, {2, 1}, 30));  // 2 | (a+b)

  const auto f15 = make_field(15);
  const auto c15 = congruence_for(f15, class_rep(f15, 2));
  EXPECT_EQ(c15.kind, CongruenceKind::Branch3);
  EXPECT_TRUE(same_predicate(c15, {2, 0}, 30));  // 2 | a

  const auto f91 = make_field(91);
  EXPECT_TRUE(same_predicate(congruence_for(f91, class_rep(f91, 2)), {7, 4}, 40));  // 7 | (a+4b)

  const auto f35 = make_field(35);
  const auto lin35 = simplify(congruence_for(f35, class_rep(f35, 2)));
  ASSERT_TRUE(lin35);
  EXPECT_EQ(lin35->to_string(), "5|(a+3b)");
  EXPECT_EQ(simplify(congruence_for(f15, class_rep(f15, 2)))->to_string(), "2|a");
  EXPECT_EQ(simplify(congruence_for(f5, class_rep(f5, 2)))->to_string(), "2|(a+b)");
}

TEST(Congruence, PredicateExamples) {
  const auto f5 = make_field(5);
  const auto c = congruence_for(f5, class_rep(f5, 2));
  EXPECT_TRUE(predicate_holds(c, 1, 1));
  EXPECT_FALSE(predicate_holds(c, 1, 0));
  for (const int cn : {2, 3}) {
    for (const auto& f : all_fields(cn)) {
      for (const auto& rep : class_reps(f)) {
        EXPECT_TRUE(predicate_holds(congruence_for(f, rep), rep.k, 0)) << f.d;
      }
    }
  }
  // principal class: no constraint
  const auto p = congruence_for(f5, class_rep(f5, 1));
  EXPECT_TRUE(predicate_holds(p, 1, 0));
  EXPECT_TRUE(predicate_holds(p, 3, 7));
}

// The closed-form rows agree with membership of (s+tw)(a+bw)/k in O computed
// by plain ring multiplication; both rows stay in the stored condition.
TEST(Congruence, MatchesRingMultiplication) {
  for (const int cn : {2, 3}) {
    for (const auto& f : all_fields(cn)) {
      for (const auto& rep : class_reps(f)) {
        const auto c = congruence_for(f, rep);
        const auto lin = simplify(c);
        ASSERT_TRUE(lin) << f.d;
        for (Int a = -30; a <= 30; ++a) {
          for (Int b = -30; b <= 30; ++b) {
            const bool want = oracle::in_ideal_dual(f.d, rep.k, rep.s, rep.t, a, b);
            ASSERT_EQ(predicate_holds(c, a, b), want) << f.d << " " << a << " " << b;
            ASSERT_EQ(lin->holds(a, b), want);
          }
        }
      }
    }
  }
}

TEST(Congruence, ClosedUnderNegationAndScaling) {
  for (const int cn : {2, 3}) {
    for (const auto& f : all_fields(cn)) {
      for (const auto& rep : class_reps(f)) {
        const auto c = congruence_for(f, rep);
        for (Int a = -25; a <= 25; ++a) {
          for (Int b = -25; b <= 25; ++b) {
            ASSERT_EQ(predicate_holds(c, a, b), predicate_holds(c, -a, -b));
          }
        }
        for (Int x = -6; x <= 6; ++x) {
          for (Int y = -6; y <= 6; ++y) ASSERT_TRUE(predicate_holds(c, rep.k * x, rep.k * y));
        }
      }
    }
  }
}

TEST(Congruence, ClassThreeBijectionAndImpliedCondition) {
  for (const auto& f : all_fields(3)) {
    const auto r2 = class_rep(f, 2);
    const auto r3 = class_rep(f, 3);
    const auto c2 = congruence_for(f, r2);
    const auto c3 = congruence_for(f, r3);
    const Int k = r2.k;
    const Int n = class3_n(f);
    const Int half = f.half_coeff();
    for (Int a = -200; a <= 200; ++a) {
      for (Int b = -200; b <= 200; ++b) {
        ASSERT_EQ(predicate_holds(c2, a, b), predicate_holds(c3, a + b, -b)) << f.d;
        if ((a + (n + 1) / 2 * b) % k == 0) {
          ASSERT_EQ(((n - 1) / 2 * a - half * b) % k, 0) << f.d << " " << a << " " << b;
        }
      }
    }
  }
}

}  // namespace
}  // namespace hermsum
