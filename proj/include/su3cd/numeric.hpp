#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace su3cd {

// lcm of two phase moduli; the library keeps all moduli within 32 bits.
inline std::uint32_t lcm_modulus(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = std::uint64_t(a) / std::gcd(a, b) * b;
  if (l > 0xffffffffull) {
    throw std::overflow_error("phase modulus lcm exceeds 32 bits");
  }
  return static_cast<std::uint32_t>(l);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace su3cd
