#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "su3cd/group.hpp"
#include "su3cd/monomial.hpp"

namespace su3cd {

enum class Kind : std::uint8_t { C, D };

/// Canonical label of a group: kind plus the triple (m, n, k) with n | m,
/// 0 <= k < r = m/n, 1 + k + k^2 = 0 (mod r), and for kind D additionally
/// 1 + 2k = 0 (mod r). Group order is 3mn (C) or 6mn (D).
struct GroupSpec {
  Kind kind = Kind::C;
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t k = 0;

  std::uint64_t r() const { return m / n; }
  std::uint64_t order() const { return (kind == Kind::C ? 3 : 6) * m * n; }
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Display syntax "C(m,n,k)" / "D(m,n,k)".
std::string format_spec(const GroupSpec& spec);
std::optional<GroupSpec> parse_spec(std::string_view text);

bool spec_exists(Kind kind, std::uint64_t m, std::uint64_t n, std::uint64_t k);
inline bool spec_exists(const GroupSpec& s) { return spec_exists(s.kind, s.m, s.n, s.k); }

/// ell = (1 + k + k^2) / r; ell_prime = (1 + 2k) / r for kind D.
struct DerivedParams {
  std::uint64_t ell = 1;
  std::optional<std::uint64_t> ell_prime;
};

DerivedParams derived_params(const GroupSpec& spec);

/// [E, F, G] for kind C, [E, F, G, B] for kind D, at the group modulus
/// (m for C, lcm(2, m) for D).
std::vector<MonomialMatrix> generators_for(const GroupSpec& spec);

/// Closure of generators_for(spec); throws VerificationError unless the
/// resulting order is exactly 3mn / 6mn.
FiniteMatrixGroup build_group(const GroupSpec& spec, std::uint64_t cap = kDefaultClosureCap);

/// Verifies the defining relations as exact matrix identities:
///   E^3 = F^m = G^n = 1, FG = GF,
///   E F E^-1 = F^k G^ell, E G E^-1 = F^-r G^-(k+1),
/// and for kind D additionally
///   B^2 = (EB)^2 = 1, B F B^-1 = F G^ell', B G B^-1 = G^-1.
/// On failure returns false and stores the failing relation when requested.
bool check_presentation(const GroupSpec& spec, std::string* failed_relation = nullptr);

/// Same kind and (m, n), and k1 = k2 or 1 + k1 + k2 = r.
bool spec_isomorphic(const GroupSpec& s1, const GroupSpec& s2);

/// For an isomorphic pair with k1 != k2 (so 1 + k1 + k2 = r), conjugation by
/// the returned matrix maps the element set of s1 exactly onto that of s2.
std::optional<MonomialMatrix> conjugation_witness(const GroupSpec& s1, const GroupSpec& s2);

/// Replaces k by min(k, r-1-k); idempotent.
GroupSpec canonical_spec(const GroupSpec& spec);

/// Inner factor of the direct-product decomposition group = Z3 x inner,
/// present exactly when 3 | m, 3 does not divide m/3 and 3 does not divide n.
/// The inner spec is (kind, m/3, n, k mod r') with r' = r/3.
std::optional<GroupSpec> factorize_spec(const GroupSpec& spec);

enum class SeriesLabel {
  CPrimitive,       // C(rn,n)^(k), 3 does not divide r
  CTimesZ3,         // Z3 x C(r'n,n)^(k'), r = 3r', 3 does not divide n
  C933,             // C(9r'n',3n')^(k), r = 3r', n = 3n'
  Delta3n2,         // C(n,n)^(0)
  Tm,               // C(m,1)^(k), 3 does not divide m
  Delta6n2,         // D(n,n)^(0)
  Delta6n2TimesZ3,  // D(3n,n)^(1), 3 does not divide n
  D931,             // D(9n',3n')^(1)
};

const char* series_label_name(SeriesLabel label);

struct SeriesDescriptor {
  SeriesLabel label;
  std::uint64_t r_param;  // r, r' or m depending on the series
  std::uint64_t n_param;  // n or n'
  std::string display;
};

/// The unique series row a canonical spec belongs to.
SeriesDescriptor series_label(const GroupSpec& spec);

/// All canonical specs with group order <= max_order, sorted by
/// (order, kind, m, n, k). Isomorphic k-pairs are collapsed to min(k, r-1-k).
std::vector<GroupSpec> enumerate_specs(std::uint64_t max_order);

/// Smallest (a, b) lexicographic with 0 <= a < m, 0 <= b < n such that
/// F^a G^b together with E (and B for kind D) generates the whole group;
/// empty when no such diagonal element exists.
std::optional<std::pair<std::uint64_t, std::uint64_t>> single_diagonal_generator(
    const GroupSpec& spec, std::uint64_t cap = kDefaultClosureCap);

}  // namespace su3cd
