#pragma once

// Arithmetic in F_{2^{2k}} = F_{q^2} with q = 2^k, represented as
// F_2[x]/(p) for the smallest primitive polynomial p of degree 2k.
// The subfield F_q is the fixed set of x -> x^q.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace muperm {

/// Field element: coefficient bits of the residue polynomial, bit i = x^i.
struct Elt {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const noexcept { return bits == 0; }
  friend constexpr bool operator==(Elt, Elt) = default;
  friend constexpr auto operator<=>(Elt, Elt) = default;
};

inline constexpr Elt kZero{0};
inline constexpr Elt kOne{1};

enum class OmegaChoice { canonical, squared };
enum class Domain { full_field, subfield };

inline constexpr int kMaxK = 12;

/// True iff `poly` (bit i = coefficient of x^i) has degree `degree` and x
/// has multiplicative order 2^degree - 1 modulo it.
bool is_primitive_poly(std::uint32_t poly, int degree);

/// Smallest (as an integer) primitive polynomial of the given degree.
std::uint32_t smallest_primitive_poly(int degree);

/// The prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class Field {
 public:
  explicit Field(int k, OmegaChoice omega = OmegaChoice::canonical);

  int k() const noexcept { return k_; }
  std::uint64_t q() const noexcept { return std::uint64_t{1} << k_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << (2 * k_); }
  /// q^2 - 1, the order of the multiplicative group.
  std::uint64_t order() const noexcept { return size() - 1; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  OmegaChoice omega_choice() const noexcept { return omega_choice_; }
  bool has_tables() const noexcept { return tables_ != nullptr; }

  Elt generator() const noexcept { return Elt{2}; }
  Elt omega() const noexcept { return omega_; }

  static constexpr Elt add(Elt a, Elt b) noexcept { return Elt{a.bits ^ b.bits}; }
  Elt mul(Elt a, Elt b) const noexcept;
  /// Shift-and-reduce multiplication; independent of the log tables.
  Elt mul_slow(Elt a, Elt b) const noexcept;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const;
  Elt pow(Elt a, std::int64_t e) const;
  Elt pow_u(Elt a, std::uint64_t e) const;
  Elt square(Elt a) const noexcept { return mul(a, a); }

  Elt frobenius_q(Elt a) const noexcept;
  bool in_subfield(Elt a) const noexcept { return frobenius_q(a) == a; }

  /// g^i for any integer i.
  Elt exp(std::int64_t i) const;
  /// Discrete log base g of a nonzero element, in [0, q^2 - 2].
  std::uint64_t log(Elt a) const;

  /// 0 first, then ascending powers of g (full field) or g^(q+1) (subfield).
  std::vector<Elt> enumerate(Domain which) const;

  bool contains(Elt a) const noexcept { return a.bits < size(); }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> antilog;
  };

  int k_;
  std::uint32_t modulus_;
  OmegaChoice omega_choice_;
  Elt omega_{};
  std::shared_ptr<const Tables> tables_;
};

std::string to_hex(Elt a);
Elt elt_from_hex(const Field& field, std::string_view hex);

}  // namespace muperm
