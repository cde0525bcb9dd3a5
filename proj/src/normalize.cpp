#include "su3cd/normalize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "su3cd/errors.hpp"

namespace su3cd {

namespace {

constexpr std::uint64_t kFingerprintCap = 2000;
constexpr std::uint64_t kIsoCheckCap = 700;

bool parse_uint(std::string_view& s, std::uint64_t& out) {
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr == begin) return false;
  s.remove_prefix(std::size_t(res.ptr - begin));
  return true;
}

bool eat(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

void validate(const LegacyC& c) {
  if (c.mu == 0 || c.mu > 0xffffffffull) throw std::invalid_argument("legacy C: bad mu");
  if (c.alpha >= c.mu || c.beta >= c.mu) {
    throw std::invalid_argument("legacy C: alpha, beta must lie in [0, mu)");
  }
}

void validate(const LegacyD& d) {
  validate(LegacyC{d.mu, d.alpha, d.beta});
  if (d.nu == 0 || d.nu > 0xffffffffull) throw std::invalid_argument("legacy D: bad nu");
  if (d.rho >= d.nu || d.sigma >= d.nu) {
    throw std::invalid_argument("legacy D: rho, sigma must lie in [0, nu)");
  }
}

}  // namespace

std::string format_legacy(const LegacyC& c) {
  std::ostringstream os;
  os << "C(" << c.mu << ',' << c.alpha << ',' << c.beta << ')';
  return os.str();
}

std::string format_legacy(const LegacyD& d) {
  std::ostringstream os;
  os << "D(" << d.mu << ',' << d.alpha << ',' << d.beta << ';' << d.nu << ',' << d.rho
     << ',' << d.sigma << ')';
  return os.str();
}

std::optional<std::variant<LegacyC, LegacyD>> parse_legacy(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const char kind = text.front();
  text.remove_prefix(1);
  LegacyD d;
  if (!eat(text, '(') || !parse_uint(text, d.mu) || !eat(text, ',') ||
      !parse_uint(text, d.alpha) || !eat(text, ',') || !parse_uint(text, d.beta)) {
    return std::nullopt;
  }
  if (kind == 'C') {
    if (!eat(text, ')') || !text.empty()) return std::nullopt;
    return LegacyC{d.mu, d.alpha, d.beta};
  }
  if (kind != 'D') return std::nullopt;
  if (!eat(text, ';') || !parse_uint(text, d.nu) || !eat(text, ',') ||
      !parse_uint(text, d.rho) || !eat(text, ',') || !parse_uint(text, d.sigma) ||
      !eat(text, ')') || !text.empty()) {
    return std::nullopt;
  }
  return d;
}

GroupSpec spec_from_full_group(const FiniteMatrixGroup& full, Kind kind) {
  const FiniteMatrixGroup a = diagonal_subgroup(full);
  const std::uint32_t l = full.modulus();

  std::uint64_t m = 1;
  for (const auto& e : a.elements()) m = std::max(m, e.order());
  if (l % m != 0 || a.order() % m != 0) {
    throw VerificationError("spec_from_full_group: diagonal subgroup exponent " +
                            std::to_string(m) + " incompatible with |A| = " +
                            std::to_string(a.order()));
  }
  const std::uint64_t n = a.order() / m;
  if (m % n != 0) {
    throw VerificationError("spec_from_full_group: n = " + std::to_string(n) +
                            " does not divide m = " + std::to_string(m));
  }
  const std::uint64_t r = m / n;
  const std::uint32_t step = std::uint32_t(l / m);  // eps = zeta_l^step

  // First element of the form diag(eps, eps^a, eps^(-a-1)) in sorted order.
  std::optional<std::uint64_t> k;
  for (const auto& e : a.elements()) {
    if (e.phase(0) != step % l) continue;
    if (e.phase(1) % step != 0) {
      throw VerificationError("spec_from_full_group: witness phase not on the eps lattice");
    }
    k = (e.phase(1) / step) % r;
    break;
  }
  if (!k) {
    throw VerificationError("spec_from_full_group: no element diag(eps, eps^a, eps^(-a-1))");
  }

  // The n-element subgroup with first entry 1 must be generated by
  // diag(1, eps^-r, eps^r).
  if (!a.contains(make_g_canonical(m, n).rescaled(l))) {
    throw VerificationError("spec_from_full_group: diag(1, eps^-r, eps^r) missing from A");
  }

  const GroupSpec spec{kind, m, n, *k};
  if (!spec_exists(spec)) {
    throw VerificationError("spec_from_full_group: extracted spec " + format_spec(spec) +
                            " fails the defining congruences");
  }
  return spec;
}

NormalizeResult normalize_c(const LegacyC& legacy, std::uint64_t cap) {
  validate(legacy);
  FiniteMatrixGroup full =
      closure({make_e(), make_f_legacy(legacy.mu, legacy.alpha, legacy.beta)}, cap);
  const GroupSpec spec = spec_from_full_group(full, Kind::C);
  if (full.order() != spec.order()) {
    throw VerificationError("normalize_c: closure order " + std::to_string(full.order()) +
                            " != 3mn for " + format_spec(spec));
  }
  const FiniteMatrixGroup canonical = build_group(spec, cap);
  if (!canonical.same_element_set(full)) {
    throw VerificationError("normalize_c: canonical generators close to a different set for " +
                            format_legacy(legacy));
  }
  return {spec, std::move(full)};
}

NormalizeResult normalize_d(const LegacyD& legacy, std::uint64_t cap) {
  validate(legacy);
  FiniteMatrixGroup full = closure({make_e(),
                                    make_f_legacy(legacy.mu, legacy.alpha, legacy.beta),
                                    make_r_legacy(legacy.nu, legacy.rho, legacy.sigma)},
                                   cap);
  const GroupSpec spec = spec_from_full_group(full, Kind::D);
  if (full.order() != spec.order()) {
    throw VerificationError("normalize_d: closure order " + std::to_string(full.order()) +
                            " != 6mn for " + format_spec(spec));
  }
  if (full.order() <= kFingerprintCap) {
    const FiniteMatrixGroup canonical = build_group(spec, cap);
    if (!(fingerprint(full) == fingerprint(canonical))) {
      throw VerificationError("normalize_d: fingerprint mismatch with canonical form for " +
                              format_legacy(legacy));
    }
    if (full.order() <= kIsoCheckCap &&
        !brute_force_isomorphism(full, canonical).has_value()) {
      throw VerificationError("normalize_d: no isomorphism with canonical form for " +
                              format_legacy(legacy));
    }
  }
  return {spec, std::move(full)};
}

}  // namespace su3cd
