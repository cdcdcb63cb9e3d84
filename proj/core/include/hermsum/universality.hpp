#pragma once

// Bounded universality checks for diagonal forms, weighted mixed sums of
// squares and triangular numbers, and sums of norms.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hermsum/quadfield.hpp"

namespace hermsum {

// sum c_i x_i^2
struct DiagonalForm {
  std::vector<Int> coefficients;
};

enum class TermKind { Square, Triangular };

struct MixedTerm {
  TermKind kind = TermKind::Square;
  Int weight = 1;
};

// sum w_i x_i^2 or w_i T_{x_i}, T_x = x(x+1)/2
struct MixedSum {
  std::vector<MixedTerm> terms;
};

using Form = std::variant<DiagonalForm, MixedSum>;

struct Representation {
  bool represented = false;
  std::vector<Int> witness;  // one value per variable, all >= 0
};

// Exact: variables range over x >= 0 (x^2 and T_x are even in the right
// sense, so negatives add nothing).
[[nodiscard]] Representation represents_bounded(const Form& form, Int n);

enum class CriterionName { Fifteen, TwoNinety };

struct CriterionSet {
  CriterionName name = CriterionName::Fifteen;
  std::span<const Int> numbers;
};

[[nodiscard]] CriterionSet criterion_set(CriterionName name);
[[nodiscard]] std::string_view to_string(CriterionName name);

// Caller guarantees eligibility: integral Gram matrix for Fifteen,
// integer-valued form for TwoNinety.
[[nodiscard]] bool check_criterion(const Form& form, const CriterionSet& set);

[[nodiscard]] bool is_sum_of_three_squares(Int n);

struct UniversalityResult {
  bool universal = false;
  std::optional<Int> first_gap;
};

[[nodiscard]] UniversalityResult universal_up_to(const Form& form, Int limit);

// 2a^2 + a + 3b^2 + b + 3c^2 + c over all integers a, b, c.
[[nodiscard]] UniversalityResult sun_polynomial_universal(Int limit);
[[nodiscard]] Representation sun_polynomial_represents(Int n);  // witness may be negative

// Integers in [0, limit] that are sums of `copies` norms of elements of O.
[[nodiscard]] std::vector<char> norm_sum_coverage(const FieldParams& f, int copies, Int limit);

// Smallest m such that sums of m norms give every positive integer, from the
// closed-form case split of the field.
[[nodiscard]] int m_d_table_value(const FieldParams& f);

struct MdCrossCheck {
  int m = 0;
  std::optional<Int> first_gap;   // of m norms within [1, cover_limit]
  std::optional<Int> first_miss;  // of m-1 norms within [1, miss_limit]

  [[nodiscard]] bool ok() const { return !first_gap && first_miss; }
};

[[nodiscard]] MdCrossCheck cross_check_m_d(const FieldParams& f, Int cover_limit = 10'000,
                                           Int miss_limit = 100);

// m_d_table_value after cross_check_m_d; throws CrossCheckFailed.
[[nodiscard]] int m_d(const FieldParams& f);

struct NormSumIdentity {
  Int d = 0;
  std::array<Int, 6> args{};  // a1, b1, a2, b2, a3, b3
  Int expected = 0;
  Int computed = 0;

  [[nodiscard]] bool pass() const { return expected == computed; }
};

// f_d(a1,...,b3) = sum of three norms with omega = (1+sqrt(-d))/2 for
// d = 15, 19, 23, 27: witnesses that 7, 15, 23 and 31 are sums of three norms.
[[nodiscard]] std::vector<NormSumIdentity> lemma2_witness_table();

}  // namespace hermsum
