#include "hermsum/certificate_check.hpp"

#include <string>

namespace hermsum {
namespace {

using Wide = __int128;

struct Elem {
  Wide x;  // rational coordinate
  Wide y;  // omega coordinate
};

class Ring {
 public:
  explicit Ring(Int d) : d_(d), half_(d % 4 == 3) {}

  [[nodiscard]] Elem mul(Elem u, Elem v) const {
    const Wide yy = u.y * v.y;
    Elem out{u.x * v.x, u.x * v.y + u.y * v.x};
    if (half_) {
      // omega^2 = omega - (1+d)/4
      out.x -= yy * ((1 + d_) / 4);
      out.y += yy;
    } else {
      out.x -= yy * d_;
    }
    return out;
  }

  [[nodiscard]] Elem conj(Elem u) const {
    // conj(omega) = -omega, or 1 - omega
    if (half_) return {u.x + u.y, -u.y};
    return {u.x, -u.y};
  }

 private:
  Int d_;
  bool half_;
};

std::string show(Int a, Int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

CertificateCheck check_certificate(Int d, Int k, Int s, Int t, Int r,
                                   std::span<const std::pair<Int, Int>> gammas) {
  CertificateCheck out;
  if (d < 1 || k < 1 || r < 1) {
    out.problems.push_back("d, k and r must be positive");
    return out;
  }
  const Ring ring(d);
  Wide total = 0;
  for (const auto& [a, b] : gammas) {
    if (a == 0 && b == 0) {
      out.problems.push_back("zero summand");
      continue;
    }
    const Elem g{a, b};
    const Elem nrm = ring.mul(g, ring.conj(g));
    if (nrm.y != 0 || nrm.x <= 0) {
      out.problems.push_back("norm of " + show(a, b) + " is not a positive rational integer");
      continue;
    }
    total += nrm.x;
    const Elem prod = ring.mul(Elem{s, t}, g);
    if (prod.x % k != 0 || prod.y % k != 0) {
      out.problems.push_back("(s+tw)*" + show(a, b) + "/" + std::to_string(k) + " is not integral");
    }
  }
  out.sum_of_norms = static_cast<Int>(total);
  if (total != static_cast<Wide>(r) * k) {
    out.problems.push_back("norms sum to " + std::to_string(static_cast<Int>(total)) +
                           ", expected r*k=" + std::to_string(r * k));
  }
  if (gammas.empty()) out.problems.push_back("empty certificate");
  out.ok = out.problems.empty();
  return out;
}

CertificateCheck check_certificate(const RepCertificate& cert) {
  const IdealClassRep rep = class_rep(cert.query.field, cert.query.class_index);
  std::vector<std::pair<Int, Int>> raw;
  raw.reserve(cert.gammas.size());
  for (const auto& g : cert.gammas) raw.emplace_back(g.a, g.b);
  return check_certificate(cert.query.field.d, rep.k, rep.s, rep.t, cert.query.r, raw);
}

}  // namespace hermsum
