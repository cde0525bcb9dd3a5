#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace su3cd {

/// Scan/CRT crossover for the quadratic congruence solvers.
inline constexpr std::uint64_t kSolveKScanLimit = 1'000'000;

bool is_prime(std::uint64_t n);

/// Exact prime factorization, primes ascending; factorize(1) == {}.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t u);

/// Decomposition of r as 3^i * q with q a product of primes of the form 6z+1.
/// Such r are exactly the moduli for which 1 + k + k^2 = 0 (mod r) is solvable.
struct Admissibility {
  std::uint64_t r = 1;
  bool admissible = false;
  int three_exp = 0;        // exponent of 3, at most 1 when admissible
  std::uint64_t q_part = 1; // r / 3^three_exp when admissible
  std::vector<std::pair<std::uint64_t, int>> q_factors;  // primes = 1 (mod 6)
};

Admissibility admissible_r(std::uint64_t r);

/// All k in [0, r) with 1 + k + k^2 = 0 (mod r), sorted ascending.
std::vector<std::uint64_t> solve_k(std::uint64_t r);
/// Exhaustive-scan route (independent oracle for the CRT route).
std::vector<std::uint64_t> solve_k_scan(std::uint64_t r);
/// Prime-power route: square roots of -3 mod p, Hensel lifting, CRT.
std::vector<std::uint64_t> solve_k_crt(std::uint64_t r);

/// All k in [0, r) satisfying both 1 + k + k^2 = 0 and 1 + 2k = 0 (mod r).
std::vector<std::uint64_t> solve_k_joint(std::uint64_t r);

/// Admissible r <= max, ascending, each with its full solve_k list.
std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> admissible_r_list(
    std::uint64_t max);

/// Representatives min(k, r-1-k) of the solution pairs, deduplicated, sorted.
std::vector<std::uint64_t> canonical_k_values(std::uint64_t r);

/// x with x^2 = a (mod p) for odd prime p; a must be a quadratic residue.
std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

}  // namespace su3cd
