#include "hermsum/quadfield.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "hermsum/errors.hpp"

namespace hermsum {
namespace {

constexpr std::array<Int, 9> kClassNumberOne = {1, 2, 3, 7, 11, 19, 43, 67, 163};
constexpr std::array<Int, 18> kClassNumberTwo = {5,  6,   10,  13,  15,  22,  35,  37,  51,
                                                 58, 91,  115, 123, 187, 235, 267, 403, 427};
constexpr std::array<Int, 16> kClassNumberThree = {23,  31,  59,  83,  107, 139, 211, 283,
                                                   307, 331, 379, 499, 547, 643, 883, 907};

}  // namespace

std::string_view to_string(OmegaBranch branch) {
  switch (branch) {
    case OmegaBranch::SqrtMinusD:
      return "sqrt(-d)";
    case OmegaBranch::HalfOnePlusSqrtMinusD:
      return "(1+sqrt(-d))/2";
  }
  return "?";
}

Rational Rational::reduced() const {
  const Int g = std::gcd(num, den);
  if (g <= 1) return *this;
  return {num / g, den / g};
}

bool operator==(const Rational& x, const Rational& y) {
  return static_cast<__int128>(x.num) * y.den == static_cast<__int128>(y.num) * x.den;
}

namespace checked {

Int add(Int x, Int y) {
  Int out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw Overflow("64-bit addition overflow");
  return out;
}

Int mul(Int x, Int y) {
  Int out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw Overflow("64-bit multiplication overflow");
  return out;
}

}  // namespace checked

bool is_squarefree(Int n) {
  if (n < 1) return false;
  for (Int p = 2; p <= n / p; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::span<const Int> supported_fields(int class_number) {
  switch (class_number) {
    case 1:
      return kClassNumberOne;
    case 2:
      return kClassNumberTwo;
    case 3:
      return kClassNumberThree;
    default:
      throw InvalidArgument("class number must be 1, 2 or 3, got " + std::to_string(class_number));
  }
}

FieldParams make_field(Int d) {
  if (d < 1) throw InvalidArgument("d must be a positive integer, got " + std::to_string(d));
  if (!is_squarefree(d)) throw NotSquarefree("NotSquarefree: d=" + std::to_string(d));

  FieldParams f;
  f.d = d;
  f.branch = (d % 4 == 3) ? OmegaBranch::HalfOnePlusSqrtMinusD : OmegaBranch::SqrtMinusD;
  for (int c = 1; c <= 3; ++c) {
    const auto list = supported_fields(c);
    if (std::find(list.begin(), list.end(), d) != list.end()) {
      f.class_number = c;
      return f;
    }
  }
  throw UnsupportedField("UnsupportedField: class number of Q(sqrt(-" + std::to_string(d) +
                         ")) is not 1, 2 or 3");
}

Int norm(const FieldParams& f, RingElement e) {
  using checked::add;
  using checked::mul;
  const Int a2 = mul(e.a, e.a);
  const Int b2 = mul(e.b, e.b);
  if (!f.half_integral()) return add(a2, mul(f.d, b2));
  return add(add(a2, mul(e.a, e.b)), mul(f.half_coeff(), b2));
}

Rational scaled_form_value(const FieldParams& f, Int k, RingElement e) {
  if (k < 1) throw InvalidArgument("k must be positive");
  return {norm(f, e), checked::mul(k, k)};
}

}  // namespace hermsum
