#include "hermsum/classdata.hpp"

#include <algorithm>
#include <array>

#include "hermsum/errors.hpp"

namespace hermsum {
namespace {

struct TableRow {
  Int d;
  Int k;
  Int s;  // second generator s + omega; t = 1 throughout both tables
};

// Class number 2: U_2 = (k, s + w).
constexpr std::array<TableRow, 18> kTableTwo = {{
    {5, 2, 1},    {6, 2, 0},    {10, 2, 0},   {13, 2, 1},   {15, 2, 1},  {22, 2, 0},
    {35, 5, 2},   {37, 2, 1},   {51, 5, 1},   {58, 2, 0},   {91, 7, 3},  {115, 5, -3},
    {123, 3, 1},  {187, 7, -2}, {235, 5, 2},  {267, 3, 1},  {403, 11, 6}, {427, 7, 3},
}};

// Class number 3: U_2 = (k, s2 + w), U_3 = (k, s3 + w).
struct TableRow3 {
  Int d;
  Int k;
  Int s2;
  Int s3;
};

constexpr std::array<TableRow3, 16> kTableThree = {{
    {23, 2, 0, -1},   {31, 2, 0, -1},   {59, 3, 0, -1},   {83, 3, 0, -1},
    {107, 3, 0, -1},  {139, 5, 0, -1},  {211, 5, 1, -2},  {283, 7, 2, -3},
    {307, 7, 0, -1},  {331, 5, 1, -2},  {379, 5, 0, -1},  {499, 5, 0, -1},
    {547, 11, 2, -3}, {643, 7, 0, -1},  {883, 13, 0, -1}, {907, 13, 4, -5},
}};

Int mod_floor(__int128 x, Int k) {
  auto r = static_cast<Int>(x % k);
  return r < 0 ? r + k : r;
}

}  // namespace

bool LinearCongruence::holds(Int a, Int b) const {
  return mod_floor(static_cast<__int128>(a) + static_cast<__int128>(c) * b, k) == 0;
}

std::string LinearCongruence::to_string() const {
  if (k == 1) return "none";
  const std::string ks = std::to_string(k);
  if (c == 0) return ks + "|a";
  if (c == 1) return ks + "|(a+b)";
  return ks + "|(a+" + std::to_string(c) + "b)";
}

std::vector<IdealClassRep> class_reps(const FieldParams& f) {
  std::vector<IdealClassRep> reps{{1, 1, 0, 0}};
  if (f.class_number == 2) {
    const auto* row = std::find_if(kTableTwo.begin(), kTableTwo.end(),
                                   [&](const TableRow& r) { return r.d == f.d; });
    if (row == kTableTwo.end()) throw UnsupportedField("no class-number-2 table row");
    reps.push_back({2, row->k, row->s, 1});
  } else if (f.class_number == 3) {
    const auto* row = std::find_if(kTableThree.begin(), kTableThree.end(),
                                   [&](const TableRow3& r) { return r.d == f.d; });
    if (row == kTableThree.end()) throw UnsupportedField("no class-number-3 table row");
    reps.push_back({2, row->k, row->s2, 1});
    reps.push_back({3, row->k, row->s3, 1});
  }
  return reps;
}

IdealClassRep class_rep(const FieldParams& f, int class_index) {
  if (class_index < 1 || class_index > f.class_number) {
    throw InvalidArgument("class index " + std::to_string(class_index) + " out of range 1.." +
                          std::to_string(f.class_number) + " for d=" + std::to_string(f.d));
  }
  return class_reps(f)[static_cast<std::size_t>(class_index - 1)];
}

CongruenceCondition congruence_for(const FieldParams& f, const IdealClassRep& rep) {
  CongruenceCondition c;
  c.k = rep.k;
  if (f.half_integral()) {
    c.kind = CongruenceKind::Branch3;
    c.row1[0] = rep.s;
    c.row1[1] = checked::mul(-f.half_coeff(), rep.t);
    c.row2[0] = rep.t;
    c.row2[1] = checked::add(rep.s, rep.t);
  } else {
    c.kind = CongruenceKind::Branch12;
    c.row1[0] = rep.s;
    c.row1[1] = checked::mul(-f.d, rep.t);
    c.row2[0] = rep.t;
    c.row2[1] = rep.s;
  }
  return c;
}

bool predicate_holds(const CongruenceCondition& c, Int a, Int b) {
  if (c.k == 1) return true;
  const __int128 x = static_cast<__int128>(c.row1[0]) * a + static_cast<__int128>(c.row1[1]) * b;
  const __int128 y = static_cast<__int128>(c.row2[0]) * a + static_cast<__int128>(c.row2[1]) * b;
  return mod_floor(x, c.k) == 0 && mod_floor(y, c.k) == 0;
}

std::optional<LinearCongruence> simplify(const CongruenceCondition& c) {
  for (Int coeff = 0; coeff < c.k; ++coeff) {
    const LinearCongruence lin{c.k, coeff};
    bool same = true;
    for (Int a = 0; a < c.k && same; ++a) {
      for (Int b = 0; b < c.k && same; ++b) {
        same = predicate_holds(c, a, b) == lin.holds(a, b);
      }
    }
    if (same) return lin;
  }
  return std::nullopt;
}

Int class3_n(const FieldParams& f) {
  if (f.class_number != 3) throw InvalidArgument("n is defined for class-number-3 fields only");
  return 2 * class_rep(f, 2).s + 1;
}

std::vector<TableViolation> validate_tables() {
  std::vector<TableViolation> out;
  for (int c = 2; c <= 3; ++c) {
    for (const Int d : supported_fields(c)) {
      const FieldParams f = make_field(d);
      const auto reps = class_reps(f);
      if (static_cast<int>(reps.size()) != f.class_number) {
        out.push_back({d, 0, "wrong number of class representatives"});
      }
      for (const auto& rep : reps) {
        if (rep.class_index == 1) continue;
        const Int n = norm(f, {rep.s, rep.t});
        if (n % rep.k != 0) {
          out.push_back({d, rep.class_index,
                         "k=" + std::to_string(rep.k) + " does not divide N(s+tw)=" +
                             std::to_string(n)});
        }
      }
      if (c == 3) {
        const auto& r2 = reps[1];
        const auto& r3 = reps[2];
        if (r2.s + r3.s != -1 || r2.t != 1 || r3.t != 1 || r2.k != r3.k) {
          out.push_back({d, 3, "class-3 pair does not follow (k,(n-1)/2+w), (k,-(n+1)/2+w)"});
        }
        // n is the smallest positive odd integer with -d = n^2 (mod k).
        const Int n = class3_n(f);
        Int smallest = -1;
        for (Int m = 1; m <= 2 * r2.k + 1; m += 2) {
          if (((m * m + d) % r2.k) == 0) {
            smallest = m;
            break;
          }
        }
        if (smallest != n) {
          out.push_back({d, 2, "n=" + std::to_string(n) + " is not the smallest odd root of -d mod k"});
        }
      }
    }
  }
  return out;
}

}  // namespace hermsum
