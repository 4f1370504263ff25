#pragma once
// Reference arithmetic that shares no code with the library, plus random
// generators for property tests.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "muperm/gf.hpp"
#include "muperm/poly.hpp"

namespace oracle {

inline int bit_degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

// Carry-less product followed by schoolbook reduction.
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1u) prod ^= std::uint64_t{a} << i;
  }
  const int n = bit_degree(modulus);
  for (int i = bit_degree(prod); i >= n; --i) {
    if ((prod >> i) & 1u) prod ^= std::uint64_t{modulus} << (i - n);
  }
  return static_cast<std::uint32_t>(prod);
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t modulus) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a, modulus);
  return r;
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = bit_degree(b);
  for (int i = bit_degree(a); i >= db; --i) {
    if ((a >> i) & 1u) a ^= b << (i - db);
  }
  return a;
}

inline bool irreducible(std::uint32_t p) {
  const int n = bit_degree(p);
  for (std::uint32_t d = 2; bit_degree(d) <= n / 2; ++d) {
    if (poly_mod(p, d) == 0) return false;
  }
  return true;
}

// Order of x modulo p by stepping through its powers.
inline std::uint64_t order_of_x(std::uint32_t p) {
  auto v = static_cast<std::uint32_t>(poly_mod(2, p));
  for (std::uint64_t i = 1;; ++i) {
    if (v == 1) return i;
    v = mul(v, 2, p);
    if (i > (std::uint64_t{1} << bit_degree(p))) return 0;
  }
}

inline std::uint32_t smallest_primitive(int n) {
  for (std::uint32_t p = 1u << n; p < (2u << n); ++p) {
    if (irreducible(p) && order_of_x(p) == (std::uint64_t{1} << n) - 1) return p;
  }
  return 0;
}

// Term-by-term evaluation with naive powers (exponents reduced by Fermat).
inline std::uint32_t eval(const muperm::SparsePoly& f, std::uint32_t x, std::uint32_t modulus) {
  const std::uint64_t order = (std::uint64_t{1} << bit_degree(modulus)) - 1;
  std::uint32_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint32_t xe;
    if (t.exp == 0) {
      xe = 1;
    } else if (x == 0) {
      xe = 0;
    } else {
      xe = pow(x, (t.exp - 1) % order + 1, modulus);
    }
    acc ^= mul(t.coeff.bits, xe, modulus);
  }
  return acc;
}

inline bool is_permutation(const muperm::SparsePoly& f, std::uint32_t modulus) {
  const std::uint32_t size = 1u << bit_degree(modulus);
  std::set<std::uint32_t> seen;
  for (std::uint32_t x = 0; x < size; ++x) seen.insert(eval(f, x, modulus));
  return seen.size() == size;
}

// Points x with x^(q+1) = 1, found by filtering the whole field.
inline std::vector<std::uint32_t> unit_circle(int k, std::uint32_t modulus) {
  std::vector<std::uint32_t> out;
  const std::uint64_t q = std::uint64_t{1} << k;
  for (std::uint32_t x = 1; x < (1u << (2 * k)); ++x) {
    if (pow(x, q + 1, modulus) == 1) out.push_back(x);
  }
  return out;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline muperm::Elt element(Rng& rng, const muperm::Field& f) {
  return muperm::Elt{static_cast<std::uint32_t>(uniform(rng, 0, f.size() - 1))};
}

inline muperm::Elt nonzero(Rng& rng, const muperm::Field& f) {
  return muperm::Elt{static_cast<std::uint32_t>(uniform(rng, 1, f.size() - 1))};
}

// Up to max_terms terms with exponents in [lo, max_exp] and random coefficients.
inline muperm::SparsePoly sparse(Rng& rng, const muperm::Field& f, std::size_t max_terms, std::uint64_t max_exp,
                                 std::uint64_t lo = 0) {
  std::vector<muperm::Term> t;
  const std::size_t n = uniform(rng, 1, max_terms);
  for (std::size_t i = 0; i < n; ++i) t.push_back({uniform(rng, lo, max_exp), nonzero(rng, f)});
  return muperm::SparsePoly(std::move(t));
}

}  // namespace gen
