#pragma once

// Arithmetic in the ring of integers O = Z + Z*omega of Q(sqrt(-d)).

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>

namespace hermsum {

using Int = std::int64_t;

enum class OmegaBranch {
  SqrtMinusD,             // omega = sqrt(-d),        d = 1, 2 (mod 4)
  HalfOnePlusSqrtMinusD,  // omega = (1+sqrt(-d))/2,  d = 3 (mod 4)
};

std::string_view to_string(OmegaBranch branch);

struct FieldParams {
  Int d = 1;
  OmegaBranch branch = OmegaBranch::SqrtMinusD;
  int class_number = 1;

  // (1+d)/4, the coefficient of b^2 in the norm on the half-integral branch.
  [[nodiscard]] Int half_coeff() const { return (1 + d) / 4; }
  [[nodiscard]] bool half_integral() const {
    return branch == OmegaBranch::HalfOnePlusSqrtMinusD;
  }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

// a + b*omega
struct RingElement {
  Int a = 0;
  Int b = 0;

  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

// Exact rational with positive denominator. Not kept reduced; use reduced().
struct Rational {
  Int num = 0;
  Int den = 1;

  [[nodiscard]] Rational reduced() const;
  friend bool operator==(const Rational& x, const Rational& y);
};

[[nodiscard]] bool is_squarefree(Int n);

// Supported discriminant parameters, ascending, for class number 1, 2 or 3.
[[nodiscard]] std::span<const Int> supported_fields(int class_number);

// Throws InvalidArgument (d < 1), NotSquarefree, UnsupportedField.
[[nodiscard]] FieldParams make_field(Int d);

// N(a + b*omega). Throws Overflow if the value leaves int64.
[[nodiscard]] Int norm(const FieldParams& f, RingElement e);

// N(e) / k^2, the scaled form P_d(a, b) attached to an ideal with norm k.
[[nodiscard]] Rational scaled_form_value(const FieldParams& f, Int k, RingElement e);

namespace checked {

[[nodiscard]] Int add(Int x, Int y);
[[nodiscard]] Int mul(Int x, Int y);

}  // namespace checked

}  // namespace hermsum
