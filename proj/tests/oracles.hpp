#pragma once

// Test-only oracles kept independent of the library's monomial fast paths:
// a dense exact phase-matrix type, a complex-arithmetic route, repeated
// multiplication for element orders, and permutation-group tables.

#include <array>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "su3cd/group.hpp"
#include "su3cd/monomial.hpp"

namespace su3cd::testing {

// One entry of a dense matrix: zero or a root of unity num/mod, kept in
// lowest terms.
struct DenseEntry {
  bool present = false;
  std::uint64_t num = 0;
  std::uint64_t mod = 1;

  static DenseEntry zero() { return {}; }
  static DenseEntry root(std::uint64_t num, std::uint64_t mod) {
    DenseEntry e{true, num % mod, mod};
    const std::uint64_t g = std::gcd(e.num == 0 ? e.mod : e.num, e.mod);
    e.num /= g == 0 ? 1 : g;
    e.mod /= g == 0 ? 1 : g;
    if (e.num == 0) e.mod = 1;
    return e;
  }

  friend bool operator==(const DenseEntry&, const DenseEntry&) = default;
};

inline DenseEntry dense_mul(const DenseEntry& a, const DenseEntry& b) {
  if (!a.present || !b.present) return DenseEntry::zero();
  const std::uint64_t l = std::lcm(a.mod, b.mod);
  return DenseEntry::root(a.num * (l / a.mod) + b.num * (l / b.mod), l);
}

struct DenseMatrix {
  std::array<std::array<DenseEntry, 3>, 3> at{};

  static DenseMatrix from(const MonomialMatrix& m) {
    DenseMatrix d;
    for (int i = 0; i < 3; ++i) {
      d.at[std::size_t(i)][m.perm()[std::size_t(i)]] =
          DenseEntry::root(m.phase(i), m.modulus());
    }
    return d;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

// Exact product; valid because for monomial factors at most one term of each
// cell sum is nonzero (asserted).
inline DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      DenseEntry acc = DenseEntry::zero();
      for (int k = 0; k < 3; ++k) {
        const DenseEntry term =
            dense_mul(a.at[std::size_t(i)][std::size_t(k)], b.at[std::size_t(k)][std::size_t(j)]);
        if (!term.present) continue;
        if (acc.present) throw std::logic_error("dense_mul: non-monomial sum encountered");
        acc = term;
      }
      out.at[std::size_t(i)][std::size_t(j)] = acc;
    }
  }
  return out;
}

inline std::array<std::array<std::complex<double>, 3>, 3> complex_mul(
    const std::array<std::array<std::complex<double>, 3>, 3>& a,
    const std::array<std::array<std::complex<double>, 3>, 3>& b) {
  std::array<std::array<std::complex<double>, 3>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out[std::size_t(i)][std::size_t(j)] +=
            a[std::size_t(i)][std::size_t(k)] * b[std::size_t(k)][std::size_t(j)];
  return out;
}

inline double complex_distance(const std::array<std::array<std::complex<double>, 3>, 3>& a,
                               const std::array<std::array<std::complex<double>, 3>, 3>& b) {
  double d = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      d = std::max(d, std::abs(a[std::size_t(i)][std::size_t(j)] - b[std::size_t(i)][std::size_t(j)]));
  return d;
}

// Order by repeated multiplication; independent of MonomialMatrix::order.
inline std::uint64_t order_by_iteration(const MonomialMatrix& m,
                                        std::uint64_t cap = 1'000'000) {
  MonomialMatrix x = m;
  std::uint64_t o = 1;
  while (!x.is_identity()) {
    x = x * m;
    if (++o > cap) throw std::logic_error("order_by_iteration: cap exceeded");
  }
  return o;
}

// Uniform random determinant-1 monomial matrix at the given modulus
// (even modulus required so odd permutations are reachable).
inline MonomialMatrix random_monomial(std::mt19937& rng, std::uint32_t modulus) {
  std::uniform_int_distribution<int> pick_perm(0, 5);
  std::uniform_int_distribution<std::uint32_t> pick_phase(0, modulus - 1);
  const Perm3 perm = perm_from_code(std::uint8_t(pick_perm(rng)));
  const std::uint64_t p0 = pick_phase(rng);
  const std::uint64_t p1 = pick_phase(rng);
  std::uint64_t p2 = (2ull * modulus - p0 - p1) % modulus;
  if (perm_sign(perm) < 0) p2 = (p2 + modulus / 2) % modulus;
  return MonomialMatrix(perm, {p0, p1, p2}, modulus);
}

// Permutation-group oracle on {0..N-1}.
template <std::size_t N>
using PermN = std::array<std::uint8_t, N>;

template <std::size_t N>
PermN<N> perm_identity() {
  PermN<N> p{};
  for (std::size_t i = 0; i < N; ++i) p[i] = std::uint8_t(i);
  return p;
}

template <std::size_t N>
PermN<N> perm_mul(const PermN<N>& a, const PermN<N>& b) {
  PermN<N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = b[a[i]];
  return out;
}

// Multiplication table of the permutation group generated by gens.
template <std::size_t N>
GroupTable perm_group_table(std::vector<PermN<N>> gens) {
  std::vector<PermN<N>> elems{perm_identity<N>()};
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& g : gens) {
      const PermN<N> p = perm_mul(elems[qi], g);
      bool found = false;
      for (const auto& e : elems) {
        if (e == p) {
          found = true;
          break;
        }
      }
      if (!found) elems.push_back(p);
    }
  }
  const auto index_of = [&](const PermN<N>& p) {
    for (std::uint32_t i = 0; i < elems.size(); ++i) {
      if (elems[i] == p) return i;
    }
    throw std::logic_error("perm_group_table: product escaped the closure");
  };
  GroupTable t;
  t.size = std::uint32_t(elems.size());
  t.identity = index_of(perm_identity<N>());
  t.product.resize(std::size_t(t.size) * t.size);
  t.inverse.resize(t.size);
  for (std::uint32_t a = 0; a < t.size; ++a) {
    for (std::uint32_t b = 0; b < t.size; ++b) {
      t.product[std::size_t(a) * t.size + b] = index_of(perm_mul(elems[a], elems[b]));
    }
    PermN<N> inv{};
    for (std::size_t i = 0; i < N; ++i) inv[elems[a][i]] = std::uint8_t(i);
    t.inverse[a] = index_of(inv);
  }
  return t;
}

inline GroupTable make_s3_table() {
  return perm_group_table<3>({{{1, 0, 2}}, {{1, 2, 0}}});
}

inline GroupTable make_a4_table() {
  // (0 1 2) and (0 1)(2 3)
  return perm_group_table<4>({{{1, 2, 0, 3}}, {{1, 0, 3, 2}}});
}

inline GroupTable make_s4_table() {
  // (0 1) and (0 1 2 3)
  return perm_group_table<4>({{{1, 0, 2, 3}}, {{1, 2, 3, 0}}});
}

}  // namespace su3cd::testing
