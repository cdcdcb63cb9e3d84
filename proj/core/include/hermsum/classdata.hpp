#pragma once

// Ideal class representatives U = kO + (s + t*omega)O for the supported
// fields and the congruence conditions they impose on summands.

#include <optional>
#include <string>
#include <vector>

#include "hermsum/quadfield.hpp"

namespace hermsum {

struct IdealClassRep {
  int class_index = 1;  // 1 is the principal class
  Int k = 1;            // U * conj(U) = kO
  Int s = 0;
  Int t = 0;

  // h(v) of the unimodular lattice U v.
  [[nodiscard]] Rational h_scale() const { return {1, k}; }

  friend bool operator==(const IdealClassRep&, const IdealClassRep&) = default;
};

enum class CongruenceKind { Branch12, Branch3 };

// k | (row1[0]*a + row1[1]*b)  and  k | (row2[0]*a + row2[1]*b).
//
// Branch12: rows (s, -d*t) and (t, s).
// Branch3:  rows (s, -((1+d)/4)*t) and (t, s+t).
struct CongruenceCondition {
  Int k = 1;
  CongruenceKind kind = CongruenceKind::Branch12;
  Int row1[2] = {0, 0};
  Int row2[2] = {0, 0};
};

// Single congruence k | (a + c*b), or k | a when c == 0.
struct LinearCongruence {
  Int k = 1;
  Int c = 0;

  [[nodiscard]] bool holds(Int a, Int b) const;
  [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] std::vector<IdealClassRep> class_reps(const FieldParams& f);
[[nodiscard]] IdealClassRep class_rep(const FieldParams& f, int class_index);

[[nodiscard]] CongruenceCondition congruence_for(const FieldParams& f, const IdealClassRep& rep);
[[nodiscard]] bool predicate_holds(const CongruenceCondition& c, Int a, Int b);

// The equivalent one-line congruence when it exists. The predicate is periodic
// mod k in both a and b, so equivalence is decided exactly over the k^2
// residues; returns nullopt if no k | (a + c*b) matches.
[[nodiscard]] std::optional<LinearCongruence> simplify(const CongruenceCondition& c);

// Lemma-4 parameter n of a class-number-3 field: U_2 = (k, (n-1)/2 + omega).
[[nodiscard]] Int class3_n(const FieldParams& f);

struct TableViolation {
  Int d = 0;
  int class_index = 0;
  std::string message;
};

// Consistency of the encoded tables: k | N(s + t*omega) for every rep, and
// s_2 + s_3 = -1, t_2 = t_3 = 1 on class-number-3 fields.
[[nodiscard]] std::vector<TableViolation> validate_tables();

}  // namespace hermsum
