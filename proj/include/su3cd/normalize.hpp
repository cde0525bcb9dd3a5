#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "su3cd/classify.hpp"
#include "su3cd/group.hpp"

namespace su3cd {

/// Legacy presentation of a type-C group, generated by E and
/// F(mu, alpha, beta).
struct LegacyC {
  std::uint64_t mu = 1;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
};

/// Legacy presentation of a type-D group, generated by E, F(mu, alpha, beta)
/// and R(nu, rho, sigma).
struct LegacyD {
  std::uint64_t mu = 1;
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t nu = 1;
  std::uint64_t rho = 0;
  std::uint64_t sigma = 0;
};

/// Display syntax "C(mu,alpha,beta)" / "D(mu,alpha,beta;nu,rho,sigma)".
std::string format_legacy(const LegacyC& c);
std::string format_legacy(const LegacyD& d);
std::optional<std::variant<LegacyC, LegacyD>> parse_legacy(std::string_view text);

struct NormalizeResult {
  GroupSpec spec;
  FiniteMatrixGroup group;  // full closure in the legacy basis
};

/// Canonical (m, n, k) of a group given by its full enumeration:
/// m is the highest order in the diagonal subgroup A, n = |A|/m, and k is
/// read off any element of A of the form diag(eps, eps^a, eps^(-a-1)) as
/// a mod r. The choice of witness does not matter; distinct witnesses differ
/// by powers of G, shifting a by multiples of r.
GroupSpec spec_from_full_group(const FiniteMatrixGroup& full, Kind kind);

/// Translates C(mu,alpha,beta) to its canonical spec. The canonical
/// generators close to exactly the same matrix set; this is verified and a
/// VerificationError is thrown on mismatch.
NormalizeResult normalize_c(const LegacyC& legacy, std::uint64_t cap = kDefaultClosureCap);

/// Translates D(mu,alpha,beta;nu,rho,sigma) to its canonical spec. The
/// canonical basis may differ from the legacy one, so acceptance is order
/// plus fingerprint equality (and an exhaustive isomorphism search for
/// orders <= 700) rather than set equality.
NormalizeResult normalize_d(const LegacyD& legacy, std::uint64_t cap = kDefaultClosureCap);

}  // namespace su3cd
