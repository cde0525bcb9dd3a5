#include "su3cd/monomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace su3cd {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

constexpr std::array<Perm3, 6> kPermTable = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

PhaseExp::PhaseExp(std::uint64_t num_, std::uint32_t modulus_) {
  if (modulus_ == 0) throw std::invalid_argument("PhaseExp: modulus must be positive");
  num = std::uint32_t(num_ % modulus_);
  modulus = modulus_;
}

PhaseExp PhaseExp::rescaled(std::uint32_t new_modulus) const {
  if (new_modulus % modulus != 0) {
    throw std::invalid_argument("PhaseExp::rescaled: modulus does not divide target");
  }
  const std::uint32_t factor = new_modulus / modulus;
  return PhaseExp(std::uint64_t(num) * factor, new_modulus);
}

std::complex<double> PhaseExp::value() const {
  const double arg = kTwoPi * double(num) / double(modulus);
  return {std::cos(arg), std::sin(arg)};
}

PhaseExp operator*(const PhaseExp& a, const PhaseExp& b) {
  const std::uint32_t l = lcm_modulus(a.modulus, b.modulus);
  const std::uint64_t s = std::uint64_t(a.num) * (l / a.modulus) +
                          std::uint64_t(b.num) * (l / b.modulus);
  return PhaseExp(s, l);
}

bool operator==(const PhaseExp& a, const PhaseExp& b) {
  // Compare over the minimal common representation to avoid lcm overflow.
  const std::uint32_t ga = std::gcd(a.num, a.modulus);
  const std::uint32_t gb = std::gcd(b.num, b.modulus);
  return a.num / ga == b.num / gb && a.modulus / ga == b.modulus / gb;
}

bool is_valid_perm(const Perm3& p) {
  bool seen[3] = {false, false, false};
  for (auto v : p) {
    if (v > 2 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

int perm_sign(const Perm3& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[std::size_t(i)] > p[std::size_t(j)]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int perm_order(const Perm3& p) {
  if (p == kIdentityPerm) return 1;
  return perm_sign(p) == 1 ? 3 : 2;
}

Perm3 perm_inverse(const Perm3& p) {
  Perm3 q{};
  for (int i = 0; i < 3; ++i) q[p[std::size_t(i)]] = std::uint8_t(i);
  return q;
}

std::uint8_t perm_code(const Perm3& p) {
  for (std::uint8_t c = 0; c < 6; ++c) {
    if (kPermTable[c] == p) return c;
  }
  throw std::invalid_argument("perm_code: not a permutation of {0,1,2}");
}

Perm3 perm_from_code(std::uint8_t code) {
  if (code >= 6) throw std::invalid_argument("perm_from_code: code out of range");
  return kPermTable[code];
}

MonomialMatrix::MonomialMatrix(const Perm3& perm,
                               const std::array<std::uint64_t, 3>& phases,
                               std::uint32_t modulus)
    : perm_(perm), modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("MonomialMatrix: modulus must be positive");
  if (!is_valid_perm(perm)) {
    throw std::invalid_argument("MonomialMatrix: invalid permutation");
  }
  for (int i = 0; i < 3; ++i) phase_[std::size_t(i)] = std::uint32_t(phases[std::size_t(i)] % modulus);
  if (!is_special_unitary()) {
    throw std::invalid_argument("MonomialMatrix: determinant is not 1");
  }
}

MonomialMatrix MonomialMatrix::identity(std::uint32_t modulus) {
  return MonomialMatrix(Unchecked{}, kIdentityPerm, {0, 0, 0}, modulus);
}

bool MonomialMatrix::is_special_unitary() const {
  const std::uint64_t sum =
      (std::uint64_t(phase_[0]) + phase_[1] + phase_[2]) % modulus_;
  if (perm_sign(perm_) == 1) return sum == 0;
  return modulus_ % 2 == 0 && sum == modulus_ / 2;
}

MonomialMatrix MonomialMatrix::rescaled(std::uint32_t new_modulus) const {
  if (new_modulus == modulus_) return *this;
  if (new_modulus % modulus_ != 0) {
    throw std::invalid_argument("MonomialMatrix::rescaled: modulus does not divide target");
  }
  const std::uint32_t factor = new_modulus / modulus_;
  std::array<std::uint32_t, 3> ph;
  for (int i = 0; i < 3; ++i) ph[std::size_t(i)] = phase_[std::size_t(i)] * factor;
  return MonomialMatrix(Unchecked{}, perm_, ph, new_modulus);
}

MonomialMatrix MonomialMatrix::reduced() const {
  std::uint32_t g = modulus_;
  for (auto p : phase_) g = std::gcd(g, p);
  if (g <= 1) return *this;
  return MonomialMatrix(Unchecked{}, perm_,
                        {phase_[0] / g, phase_[1] / g, phase_[2] / g}, modulus_ / g);
}

MonomialMatrix MonomialMatrix::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  MonomialMatrix result = identity(modulus_);
  MonomialMatrix base = *this;
  std::uint64_t u = std::uint64_t(e);
  while (u != 0) {
    if (u & 1) result = result * base;
    u >>= 1;
    if (u != 0) base = base * base;
  }
  return result;
}

std::uint64_t MonomialMatrix::order() const {
  const int p = perm_order(perm_);
  const MonomialMatrix d = p == 1 ? *this : pow(p);
  std::uint64_t ord = 1;
  for (auto ph : d.phase_) ord = std::lcm(ord, std::uint64_t(modulus_ / std::gcd(ph, modulus_)));
  return std::uint64_t(p) * ord;
}

bool MonomialMatrix::same_matrix(const MonomialMatrix& o) const {
  if (perm_ != o.perm_) return false;
  if (modulus_ == o.modulus_) return phase_ == o.phase_;
  const MonomialMatrix a = reduced();
  const MonomialMatrix b = o.reduced();
  return a.perm_ == b.perm_ && a.modulus_ == b.modulus_ && a.phase_ == b.phase_;
}

std::array<std::array<std::complex<double>, 3>, 3> MonomialMatrix::to_complex() const {
  std::array<std::array<std::complex<double>, 3>, 3> out{};
  for (int i = 0; i < 3; ++i) out[std::size_t(i)][perm_[std::size_t(i)]] = entry(i).value();
  return out;
}

std::string MonomialMatrix::to_string() const {
  std::ostringstream os;
  if (is_diagonal()) {
    os << "diag(";
    for (int i = 0; i < 3; ++i) {
      if (i) os << ", ";
      os << "w^" << phase_[std::size_t(i)];
    }
    os << ")";
  } else {
    os << "[";
    for (int i = 0; i < 3; ++i) {
      if (i) os << ", ";
      os << "row" << i << "->col" << int(perm_[std::size_t(i)]) << ":w^" << phase_[std::size_t(i)];
    }
    os << "]";
  }
  os << " (w = exp(2*pi*i/" << modulus_ << "))";
  return os.str();
}

MonomialMatrix make_e(std::uint32_t modulus) {
  return MonomialMatrix({1, 2, 0}, {0, 0, 0}, modulus);
}

MonomialMatrix make_b(std::uint32_t modulus) {
  if (modulus % 2 != 0) throw std::invalid_argument("make_b: modulus must be even");
  const std::uint32_t h = modulus / 2;
  return MonomialMatrix({0, 2, 1}, {h, h, h}, modulus);
}

MonomialMatrix make_f_canonical(std::uint64_t m, std::uint64_t k) {
  if (m == 0 || m > 0xffffffffull) throw std::invalid_argument("make_f_canonical: bad m");
  k %= m;
  const std::uint64_t third = (m - (1 + k) % m) % m;
  return MonomialMatrix(kIdentityPerm, {1 % m, k, third}, std::uint32_t(m));
}

MonomialMatrix make_g_canonical(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || m > 0xffffffffull) throw std::invalid_argument("make_g_canonical: bad m");
  if (n == 0 || m % n != 0) throw std::invalid_argument("make_g_canonical: n must divide m");
  const std::uint64_t r = m / n;
  return MonomialMatrix(kIdentityPerm, {0, (m - r) % m, r % m}, std::uint32_t(m));
}

MonomialMatrix make_f_legacy(std::uint64_t mu, std::uint64_t alpha, std::uint64_t beta) {
  if (mu == 0 || mu > 0xffffffffull) throw std::invalid_argument("make_f_legacy: bad mu");
  if (alpha >= mu || beta >= mu) {
    throw std::invalid_argument("make_f_legacy: alpha, beta must lie in [0, mu)");
  }
  return MonomialMatrix(kIdentityPerm, {alpha, beta, (2 * mu - alpha - beta) % mu},
                        std::uint32_t(mu));
}

MonomialMatrix make_r_legacy(std::uint64_t nu, std::uint64_t rho, std::uint64_t sigma) {
  if (nu == 0 || nu > 0xffffffffull) throw std::invalid_argument("make_r_legacy: bad nu");
  if (rho >= nu || sigma >= nu) {
    throw std::invalid_argument("make_r_legacy: rho, sigma must lie in [0, nu)");
  }
  const std::uint32_t l = lcm_modulus(2, std::uint32_t(nu));
  const std::uint64_t d = l / nu;
  const std::uint64_t third = (l / 2 + l - (rho + sigma) * d % l) % l;
  return MonomialMatrix({0, 2, 1}, {rho * d, sigma * d, third}, l);
}

MonomialMatrix make_omega_identity(std::uint32_t modulus) {
  if (modulus % 3 != 0) {
    throw std::invalid_argument("make_omega_identity: modulus must be divisible by 3");
  }
  const std::uint32_t t = modulus / 3;
  return MonomialMatrix(kIdentityPerm, {t, t, t}, modulus);
}

}  // namespace su3cd
