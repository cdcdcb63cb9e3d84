#pragma once

// Representability of L^r = U v^r (h(v^r) = r/k) by I_m.
//
// L^r -> I_m iff r*k = N(g_1) + ... + N(g_m) with every g_l = a_l + b_l*omega
// nonzero and satisfying the class congruence. All searches below work on the
// integer target r*k.

#include <cstdint>
#include <optional>
#include <vector>

#include "hermsum/classdata.hpp"
#include "hermsum/quadfield.hpp"

namespace hermsum {

struct LatticeQuery {
  FieldParams field;
  int class_index = 1;
  Int r = 1;

  friend bool operator==(const LatticeQuery&, const LatticeQuery&) = default;
};

// Throws InvalidArgument unless 1 <= class_index <= class_number and r >= 1.
void validate(const LatticeQuery& q);

struct SearchOptions {
  Int dp_cap = 10'000'000;  // largest admissible DP target r*k
};

// Distinct achievable summand norms in (0, bound], ascending, with one
// canonical witness each: smallest |b|, then smallest |a|, then a >= 0, then
// b >= 0.
struct NormValueSet {
  Int k = 1;
  Int bound = 0;
  std::vector<Int> values;
  std::vector<RingElement> witnesses;

  [[nodiscard]] std::optional<RingElement> witness_for(Int value) const;
};

[[nodiscard]] NormValueSet enumerate_norm_values(const FieldParams& f, const IdealClassRep& rep,
                                                 Int bound);

struct MinTermsResult {
  std::optional<int> m;  // nullopt: unrepresentable by any I_m

  [[nodiscard]] bool representable() const { return m.has_value(); }
  friend bool operator==(const MinTermsResult&, const MinTermsResult&) = default;
};

// Minimum summand counts for every r in [1, r_max] of one class, from a single
// unbounded-knapsack pass over targets 0..r_max*k.
class MinTermsTable {
 public:
  MinTermsTable(const FieldParams& f, int class_index, Int r_max, const SearchOptions& opts = {});

  [[nodiscard]] MinTermsResult at(Int r) const;
  [[nodiscard]] Int r_max() const { return r_max_; }
  [[nodiscard]] const IdealClassRep& rep() const { return rep_; }
  [[nodiscard]] const NormValueSet& values() const { return values_; }

 private:
  static constexpr std::uint16_t kUnreachable = 0xFFFF;

  IdealClassRep rep_;
  Int r_max_;
  NormValueSet values_;
  std::vector<std::uint16_t> best_;  // indexed by target t = r*k
};

[[nodiscard]] MinTermsResult min_terms(const LatticeQuery& q, const SearchOptions& opts = {});

struct RepCertificate {
  LatticeQuery query;
  Int k = 1;
  std::vector<RingElement> gammas;  // ascending by (norm, a, b)

  [[nodiscard]] int m() const { return static_cast<int>(gammas.size()); }
};

// Lexicographically least certificate with exactly m summands, or nullopt.
[[nodiscard]] std::optional<RepCertificate> find_certificate(const LatticeQuery& q, int m,
                                                             const SearchOptions& opts = {});

// All r in [1, r_max] for which L^r is represented by no I_m.
[[nodiscard]] std::vector<Int> exceptional_set(const FieldParams& f, int class_index, Int r_max,
                                               const SearchOptions& opts = {});

struct GInvariant {
  int g = 0;
  LatticeQuery witness;
  // Max over r <= r_max/2 already equals g; a finite-window heuristic.
  bool stable = false;
};

// max of min_terms over all classes and representable r <= r_max.
[[nodiscard]] GInvariant g_invariant(const FieldParams& f, Int r_max,
                                     const SearchOptions& opts = {});

// (a, b) -> (a + b, -b). Norm-preserving involution on the half-integral
// branch; carries class-2 summands to class-3 summands on class-number-3
// fields.
[[nodiscard]] RingElement lemma4_transform(const FieldParams& f, RingElement e);
[[nodiscard]] RepCertificate lemma4_transform(const RepCertificate& cert);

}  // namespace hermsum
