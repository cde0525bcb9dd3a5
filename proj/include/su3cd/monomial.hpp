#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

#include "su3cd/numeric.hpp"

namespace su3cd {

/// A root of unity exp(2*pi*i * num / modulus), kept normalized to
/// 0 <= num < modulus.
struct PhaseExp {
  std::uint32_t num = 0;
  std::uint32_t modulus = 1;

  PhaseExp() = default;
  PhaseExp(std::uint64_t num_, std::uint32_t modulus_);

  bool is_one() const { return num == 0; }
  /// Multiplicative order of the root of unity.
  std::uint32_t order() const { return modulus / std::gcd(num, modulus); }
  PhaseExp rescaled(std::uint32_t new_modulus) const;
  PhaseExp inverse() const { return PhaseExp(num == 0 ? 0 : modulus - num, modulus); }
  std::complex<double> value() const;

  friend PhaseExp operator*(const PhaseExp& a, const PhaseExp& b);
  /// True iff both denote the same complex number.
  friend bool operator==(const PhaseExp& a, const PhaseExp& b);
};

/// Permutation of {0,1,2}; perm[i] is the column of row i's nonzero entry.
using Perm3 = std::array<std::uint8_t, 3>;

inline constexpr Perm3 kIdentityPerm{0, 1, 2};

bool is_valid_perm(const Perm3& p);
int perm_sign(const Perm3& p);     // +1 or -1
int perm_order(const Perm3& p);    // 1, 2 or 3
Perm3 perm_inverse(const Perm3& p);
/// Permutation of the matrix product A*B given those of A and B.
inline Perm3 perm_compose(const Perm3& a, const Perm3& b) {
  return {b[a[0]], b[a[1]], b[a[2]]};
}
std::uint8_t perm_code(const Perm3& p);  // dense code in [0,6)
Perm3 perm_from_code(std::uint8_t code);

/// Exact 3x3 monomial matrix with determinant 1 whose nonzero entries are
/// roots of unity over a shared modulus: row i holds exp(2*pi*i*phase[i]/L)
/// in column perm[i]. Immutable after construction.
class MonomialMatrix {
 public:
  MonomialMatrix(const Perm3& perm, const std::array<std::uint64_t, 3>& phases,
                 std::uint32_t modulus);

  static MonomialMatrix identity(std::uint32_t modulus = 1);

  const Perm3& perm() const { return perm_; }
  const std::array<std::uint32_t, 3>& phases() const { return phase_; }
  std::uint32_t phase(int row) const { return phase_[std::size_t(row)]; }
  std::uint32_t modulus() const { return modulus_; }
  /// The nonzero entry of the given row, at column perm()[row].
  PhaseExp entry(int row) const { return PhaseExp(phase_[std::size_t(row)], modulus_); }

  bool is_diagonal() const { return perm_ == kIdentityPerm; }
  bool is_identity() const {
    return perm_ == kIdentityPerm && phase_[0] == 0 && phase_[1] == 0 && phase_[2] == 0;
  }
  /// Determinant-1 check: sign(perm) * zeta^(sum of phases) == 1.
  bool is_special_unitary() const;

  /// Same matrix over a larger modulus; requires modulus() | new_modulus.
  MonomialMatrix rescaled(std::uint32_t new_modulus) const;
  /// Unique representation over the smallest possible modulus.
  MonomialMatrix reduced() const;

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.modulus_ != b.modulus_) {
      const std::uint32_t l = lcm_modulus(a.modulus_, b.modulus_);
      return a.rescaled(l) * b.rescaled(l);
    }
    Perm3 p;
    std::array<std::uint32_t, 3> ph;
    for (int i = 0; i < 3; ++i) {
      p[std::size_t(i)] = b.perm_[a.perm_[std::size_t(i)]];
      const std::uint64_t s =
          std::uint64_t(a.phase_[std::size_t(i)]) + b.phase_[a.perm_[std::size_t(i)]];
      ph[std::size_t(i)] = std::uint32_t(s >= a.modulus_ ? s - a.modulus_ : s);
    }
    return MonomialMatrix(Unchecked{}, p, ph, a.modulus_);
  }

  MonomialMatrix inverse() const {
    Perm3 p;
    std::array<std::uint32_t, 3> ph;
    for (int i = 0; i < 3; ++i) p[perm_[std::size_t(i)]] = std::uint8_t(i);
    for (int i = 0; i < 3; ++i) {
      ph[perm_[std::size_t(i)]] =
          phase_[std::size_t(i)] == 0 ? 0 : modulus_ - phase_[std::size_t(i)];
    }
    return MonomialMatrix(Unchecked{}, p, ph, modulus_);
  }

  MonomialMatrix pow(std::int64_t e) const;

  /// Smallest t >= 1 with this^t == identity.
  std::uint64_t order() const;

  /// True iff both denote the same complex matrix (moduli may differ).
  bool same_matrix(const MonomialMatrix& o) const;
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.same_matrix(b);
  }

  std::array<std::array<std::complex<double>, 3>, 3> to_complex() const;
  std::string to_string() const;

 private:
  struct Unchecked {};
  MonomialMatrix(Unchecked, const Perm3& perm, const std::array<std::uint32_t, 3>& phases,
                 std::uint32_t modulus)
      : perm_(perm), phase_(phases), modulus_(modulus) {}

  Perm3 perm_;
  std::array<std::uint32_t, 3> phase_;
  std::uint32_t modulus_;
};

// Named generators.

/// Cyclic permutation matrix [[0,1,0],[0,0,1],[1,0,0]].
MonomialMatrix make_e(std::uint32_t modulus = 1);
/// [[-1,0,0],[0,0,-1],[0,-1,0]]; modulus must be even.
MonomialMatrix make_b(std::uint32_t modulus = 2);
/// diag(eps, eps^k, eps^(-k-1)) with eps = exp(2*pi*i/m).
MonomialMatrix make_f_canonical(std::uint64_t m, std::uint64_t k);
/// diag(1, eps^(-r), eps^r) with r = m/n; requires n | m.
MonomialMatrix make_g_canonical(std::uint64_t m, std::uint64_t n);
/// diag(eta^alpha, eta^beta, eta^(-alpha-beta)) with eta = exp(2*pi*i/mu);
/// requires 0 <= alpha, beta < mu.
MonomialMatrix make_f_legacy(std::uint64_t mu, std::uint64_t alpha, std::uint64_t beta);
/// [[d^rho,0,0],[0,0,d^sigma],[0,-d^(-rho-sigma),0]] with d = exp(2*pi*i/nu);
/// requires 0 <= rho, sigma < nu.
MonomialMatrix make_r_legacy(std::uint64_t nu, std::uint64_t rho, std::uint64_t sigma);
/// omega * identity with omega = exp(2*pi*i/3); modulus must be divisible by 3.
MonomialMatrix make_omega_identity(std::uint32_t modulus = 3);

}  // namespace su3cd
