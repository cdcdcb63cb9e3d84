#include "hermsum/repsearch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "hermsum/errors.hpp"

namespace hermsum {
namespace {

Int isqrt(Int n) {
  if (n <= 0) return 0;
  auto x = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (x > 0 && x > n / x) --x;
  while ((x + 1) <= n / (x + 1)) ++x;
  return x;
}

auto witness_key(RingElement e) {
  return std::make_tuple(e.b < 0 ? -e.b : e.b, e.a < 0 ? -e.a : e.a, e.a < 0, e.b < 0);
}

Int checked_target(const LatticeQuery& q, Int k, const SearchOptions& opts) {
  const Int target = checked::mul(q.r, k);
  if (target > opts.dp_cap) {
    throw Overflow("DP target r*k=" + std::to_string(target) + " exceeds cap " +
                   std::to_string(opts.dp_cap));
  }
  return target;
}

}  // namespace

void validate(const LatticeQuery& q) {
  if (q.class_index < 1 || q.class_index > q.field.class_number) {
    throw InvalidArgument("class index " + std::to_string(q.class_index) + " out of range for d=" +
                          std::to_string(q.field.d));
  }
  if (q.r < 1) throw InvalidArgument("r must be positive");
}

std::optional<RingElement> NormValueSet::witness_for(Int value) const {
  const auto it = std::lower_bound(values.begin(), values.end(), value);
  if (it == values.end() || *it != value) return std::nullopt;
  return witnesses[static_cast<std::size_t>(it - values.begin())];
}

NormValueSet enumerate_norm_values(const FieldParams& f, const IdealClassRep& rep, Int bound) {
  if (bound < 1) throw InvalidArgument("bound must be positive");
  const CongruenceCondition cond = congruence_for(f, rep);
  const auto lin = simplify(cond);
  const auto accepts = [&](Int a, Int b) {
    return lin ? lin->holds(a, b) : predicate_holds(cond, a, b);
  };

  struct Hit {
    Int value;
    RingElement e;
  };
  std::vector<Hit> hits;
  const auto consider = [&](Int a, Int b) {
    if (a == 0 && b == 0) return;
    const Int n = norm(f, {a, b});
    if (n > bound || !accepts(a, b)) return;
    hits.push_back({n, {a, b}});
  };

  const Int root = isqrt(bound);
  if (!f.half_integral()) {
    const Int b_max = isqrt(bound / f.d);
    for (Int b = -b_max; b <= b_max; ++b) {
      for (Int a = -root; a <= root; ++a) consider(a, b);
    }
  } else {
    // 4N = (2a+b)^2 + d b^2
    const Int b_max = isqrt(checked::mul(4, bound) / f.d);
    for (Int b = -b_max; b <= b_max; ++b) {
      const Int lo = (-2 * root - b) / 2 - 1;
      const Int hi = (2 * root - b) / 2 + 1;
      for (Int a = lo; a <= hi; ++a) consider(a, b);
    }
  }

  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    if (x.value != y.value) return x.value < y.value;
    return witness_key(x.e) < witness_key(y.e);
  });

  NormValueSet out;
  out.k = rep.k;
  out.bound = bound;
  for (const Hit& h : hits) {
    if (!out.values.empty() && out.values.back() == h.value) continue;
    out.values.push_back(h.value);
    out.witnesses.push_back(h.e);
  }
  return out;
}

MinTermsTable::MinTermsTable(const FieldParams& f, int class_index, Int r_max,
                             const SearchOptions& opts)
    : r_max_(r_max) {
  validate(LatticeQuery{f, class_index, r_max});
  rep_ = class_rep(f, class_index);
  const Int target = checked_target(LatticeQuery{f, class_index, r_max}, rep_.k, opts);
  values_ = enumerate_norm_values(f, rep_, target);

  best_.assign(static_cast<std::size_t>(target) + 1, kUnreachable);
  best_[0] = 0;
  for (Int t = 1; t <= target; ++t) {
    std::uint16_t best = kUnreachable;
    for (const Int v : values_.values) {
      if (v > t) break;
      const std::uint16_t prev = best_[static_cast<std::size_t>(t - v)];
      if (prev != kUnreachable && prev + 1 < best) best = static_cast<std::uint16_t>(prev + 1);
    }
    best_[static_cast<std::size_t>(t)] = best;
  }
}

MinTermsResult MinTermsTable::at(Int r) const {
  if (r < 1 || r > r_max_) throw InvalidArgument("r outside table range");
  const std::uint16_t m = best_[static_cast<std::size_t>(r * rep_.k)];
  if (m == kUnreachable) return {};
  return {static_cast<int>(m)};
}

MinTermsResult min_terms(const LatticeQuery& q, const SearchOptions& opts) {
  validate(q);
  return MinTermsTable(q.field, q.class_index, q.r, opts).at(q.r);
}

std::optional<RepCertificate> find_certificate(const LatticeQuery& q, int m,
                                               const SearchOptions& opts) {
  validate(q);
  if (m < 1) throw InvalidArgument("m must be positive");
  const IdealClassRep rep = class_rep(q.field, q.class_index);
  const Int target = checked_target(q, rep.k, opts);
  const NormValueSet vs = enumerate_norm_values(q.field, rep, target);
  if (vs.values.empty() || checked::mul(m, vs.values.front()) > target) return std::nullopt;

  // exact[j][t]: t is a sum of exactly j values.
  const auto width = static_cast<std::size_t>(target) + 1;
  if ((static_cast<std::size_t>(m) + 1) * width > (std::size_t{1} << 28)) {
    throw Overflow("certificate table (m+1)*(r*k+1) exceeds 2^28 cells");
  }
  std::vector<std::vector<char>> exact(static_cast<std::size_t>(m) + 1, std::vector<char>(width, 0));
  exact[0][0] = 1;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(m); ++j) {
    for (std::size_t t = 0; t < width; ++t) {
      if (!exact[j - 1][t]) continue;
      for (const Int v : vs.values) {
        const std::size_t u = t + static_cast<std::size_t>(v);
        if (u >= width) break;
        exact[j][u] = 1;
      }
    }
  }
  if (!exact[static_cast<std::size_t>(m)][width - 1]) return std::nullopt;

  // Greedy: the smallest feasible leading value is automatically >= the
  // previous one, so the picks come out ascending.
  RepCertificate cert{q, rep.k, {}};
  Int remaining = target;
  Int floor = 0;
  for (int left = m; left > 0; --left) {
    const auto& row = exact[static_cast<std::size_t>(left - 1)];
    for (std::size_t i = 0; i < vs.values.size(); ++i) {
      const Int v = vs.values[i];
      if (v > remaining) break;
      if (v < floor || !row[static_cast<std::size_t>(remaining - v)]) continue;
      cert.gammas.push_back(vs.witnesses[i]);
      remaining -= v;
      floor = v;
      break;
    }
  }
  return cert;
}

std::vector<Int> exceptional_set(const FieldParams& f, int class_index, Int r_max,
                                 const SearchOptions& opts) {
  if (r_max < 1) throw InvalidArgument("r_max must be positive");
  const MinTermsTable table(f, class_index, r_max, opts);
  std::vector<Int> out;
  for (Int r = 1; r <= r_max; ++r) {
    if (!table.at(r).representable()) out.push_back(r);
  }
  return out;
}

GInvariant g_invariant(const FieldParams& f, Int r_max, const SearchOptions& opts) {
  if (r_max < 2) throw InvalidArgument("r_max must be at least 2");
  GInvariant out;
  int lower_half_max = 0;
  for (int c = 1; c <= f.class_number; ++c) {
    const MinTermsTable table(f, c, r_max, opts);
    for (Int r = 1; r <= r_max; ++r) {
      const auto res = table.at(r);
      if (!res.representable()) continue;
      if (*res.m > out.g) {
        out.g = *res.m;
        out.witness = {f, c, r};
      }
      if (2 * r <= r_max) lower_half_max = std::max(lower_half_max, *res.m);
    }
  }
  out.stable = lower_half_max == out.g;
  return out;
}

RingElement lemma4_transform(const FieldParams& f, RingElement e) {
  if (!f.half_integral()) {
    throw InvalidArgument("the (a,b) -> (a+b,-b) map needs omega = (1+sqrt(-d))/2");
  }
  return {checked::add(e.a, e.b), -e.b};
}

RepCertificate lemma4_transform(const RepCertificate& cert) {
  const FieldParams& f = cert.query.field;
  if (f.class_number != 3 || (cert.query.class_index != 2 && cert.query.class_index != 3)) {
    throw InvalidArgument("certificate transfer needs a non-principal class of a class-3 field");
  }
  RepCertificate out = cert;
  out.query.class_index = 5 - cert.query.class_index;
  for (auto& g : out.gammas) g = lemma4_transform(f, g);
  return out;
}

}  // namespace hermsum
