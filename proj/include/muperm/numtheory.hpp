#pragma once

// Integer helpers for exponent bookkeeping modulo q^2-1, q+1 and q-1.

#include <cstdint>
#include <numeric>
#include <optional>

namespace muperm {

/// Least non-negative residue of a mod m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Representative of a mod m in [1, m].
inline std::int64_t positive_rep(std::int64_t a, std::int64_t m) {
  std::int64_t r = mod_floor(a, m);
  return r == 0 ? m : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      (static_cast<__int128>(mod_floor(a, m)) * mod_floor(b, m)) % m);
}

/// 2^e mod m for e >= 0.
std::int64_t pow2_mod(std::int64_t e, std::int64_t m);

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace muperm
