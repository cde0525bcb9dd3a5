#include "su3cd/congruence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "su3cd/numeric.hpp"

namespace su3cd {

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

std::uint64_t pollard_rho(std::uint64_t n) {
  // Floyd cycle walk; n must be odd and composite.
  for (std::uint64_t c = 1;; ++c) {
    const auto step = [n, c](std::uint64_t x) {
      return (mulmod(x, x, n) + c) % n;
    };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_recursive(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_recursive(d, out);
  factor_recursive(n / d, out);
}

// Extended gcd based modular inverse; m need not be prime.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = std::int64_t(m), new_r = std::int64_t(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return std::uint64_t(t < 0 ? t + std::int64_t(m) : t);
}

// (1 + k + k^2) mod m without 64-bit overflow.
std::uint64_t phi3_mod(std::uint64_t k, std::uint64_t m) {
  return std::uint64_t((static_cast<unsigned __int128>(k) * k + k + 1) % m);
}

// Solutions of 1 + k + k^2 = 0 (mod p^e) for a prime p = 1 (mod 6).
std::vector<std::uint64_t> solve_prime_power(std::uint64_t p, int e) {
  // Quadratic formula mod p: k = (-1 +- t)/2 with t^2 = -3 (mod p).
  const std::uint64_t t = sqrt_mod_prime(p - 3 % p, p);
  const std::uint64_t inv2 = inverse_mod(2, p);
  std::vector<std::uint64_t> roots;
  for (std::uint64_t tr : {t, p - t}) {
    roots.push_back(mulmod((tr + p - 1) % p, inv2, p));
  }
  // Hensel lift: f'(k) = 2k + 1 is a unit mod p since p != 3.
  std::uint64_t pe = p;
  for (int i = 1; i < e; ++i) pe *= p;
  for (auto& k : roots) {
    std::uint64_t cur = p;
    while (cur < pe) {
      const std::uint64_t next = cur > pe / cur ? pe : std::min(cur * cur, pe);
      const std::uint64_t f = phi3_mod(k, next);
      const std::uint64_t fp = (2 * k + 1) % next;
      const std::uint64_t corr = mulmod(f, inverse_mod(fp, next), next);
      k = (k + next - corr) % next;
      cur = next;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t u) {
  if (u == 0) throw std::invalid_argument("factorize: input must be positive");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p <= kTrialDivisionLimit && p * p <= u; p += (p == 2 ? 1 : 2)) {
    if (u % p != 0) continue;
    int e = 0;
    while (u % p == 0) {
      u /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (u > 1) {
    if (is_prime(u)) {
      out.emplace_back(u, 1);
    } else {
      std::map<std::uint64_t, int> rest;
      factor_recursive(u, rest);
      for (auto [p, e] : rest) out.emplace_back(p, e);
      std::sort(out.begin(), out.end());
    }
  }
  return out;
}

Admissibility admissible_r(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("admissible_r: r must be positive");
  Admissibility a;
  a.r = r;
  a.admissible = true;
  for (auto [p, e] : factorize(r)) {
    if (p == 3) {
      a.three_exp = e;
      if (e > 1) a.admissible = false;
    } else if (p % 6 == 1) {
      a.q_factors.emplace_back(p, e);
    } else {
      a.admissible = false;
    }
  }
  if (!a.admissible) {
    a.q_part = 1;
    a.q_factors.clear();
    return a;
  }
  a.q_part = a.three_exp == 1 ? r / 3 : r;
  return a;
}

std::vector<std::uint64_t> solve_k_scan(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("solve_k_scan: r must be positive");
  if (r > 0xffffffffull) throw std::invalid_argument("solve_k_scan: r too large for scan");
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k < r; ++k) {
    if ((1 + k + k * k) % r == 0) out.push_back(k);
  }
  return out;
}

std::vector<std::uint64_t> solve_k_crt(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("solve_k_crt: r must be positive");
  if (r == 1) return {0};
  const Admissibility adm = admissible_r(r);
  if (!adm.admissible) return {};

  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> systems;
  if (adm.three_exp == 1) systems.push_back({3, {1}});
  for (auto [p, e] : adm.q_factors) {
    std::uint64_t pe = p;
    for (int i = 1; i < e; ++i) pe *= p;
    systems.push_back({pe, solve_prime_power(p, e)});
  }

  std::vector<std::uint64_t> combined{0};
  std::uint64_t modulus = 1;
  for (const auto& [pe, residues] : systems) {
    std::vector<std::uint64_t> next;
    next.reserve(combined.size() * residues.size());
    const std::uint64_t m_inv = inverse_mod(modulus % pe, pe);
    for (std::uint64_t x : combined) {
      for (std::uint64_t res : residues) {
        const std::uint64_t delta = mulmod((res + pe - x % pe) % pe, m_inv, pe);
        next.push_back(x + modulus * delta);
      }
    }
    combined = std::move(next);
    modulus *= pe;
  }
  std::sort(combined.begin(), combined.end());
  return combined;
}

std::vector<std::uint64_t> solve_k(std::uint64_t r) {
  return r <= kSolveKScanLimit ? solve_k_scan(r) : solve_k_crt(r);
}

std::vector<std::uint64_t> solve_k_joint(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("solve_k_joint: r must be positive");
  if (r <= kSolveKScanLimit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 0; k < r; ++k) {
      if ((1 + k + k * k) % r == 0 && (1 + 2 * k) % r == 0) out.push_back(k);
    }
    return out;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t k : solve_k_crt(r)) {
    if ((1 + 2 * k) % r == 0) out.push_back(k);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> admissible_r_list(
    std::uint64_t max) {
  if (max == 0) throw std::invalid_argument("admissible_r_list: max must be positive");
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> out;
  for (std::uint64_t r = 1; r <= max; ++r) {
    if (!admissible_r(r).admissible) continue;
    out.emplace_back(r, solve_k(r));
  }
  return out;
}

std::vector<std::uint64_t> canonical_k_values(std::uint64_t r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k : solve_k(r)) {
    out.push_back(std::min(k, r - 1 - k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) {
    throw std::invalid_argument("sqrt_mod_prime: not a quadratic residue");
  }
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t x = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    x = mulmod(x, b, p);
  }
  return x;
}

}  // namespace su3cd
