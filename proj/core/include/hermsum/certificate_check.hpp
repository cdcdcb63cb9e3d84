#pragma once

// Independent re-validation of representation certificates.
//
// Works from the raw ring multiplication in O (omega^2 = -d, or
// omega^2 = omega - (1+d)/4) instead of the closed-form norm and congruence
// formulas used by the search, so a bug in one is not mirrored in the other.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hermsum/repsearch.hpp"

namespace hermsum {

struct CertificateCheck {
  bool ok = false;
  Int sum_of_norms = 0;
  std::vector<std::string> problems;
};

// Checks that every gamma is nonzero, that (s + t*omega) * gamma / k lies in O,
// and that the norms of the gammas add up to r*k.
[[nodiscard]] CertificateCheck check_certificate(Int d, Int k, Int s, Int t, Int r,
                                                 std::span<const std::pair<Int, Int>> gammas);

// Same, resolving (k, s, t) from the encoded class tables.
[[nodiscard]] CertificateCheck check_certificate(const RepCertificate& cert);

}  // namespace hermsum
