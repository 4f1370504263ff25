#pragma once

// Sparse polynomials, rational functions and Moebius maps over F_{q^2}.
//
// SparsePoly is the external canonical form: strictly increasing exponents,
// nonzero coefficients. Exponents are kept unreduced until reduce_mod_field
// is called explicitly. Gcd, products and composition go through DensePoly.

#include <cstdint>
#include <vector>

#include "muperm/gf.hpp"

namespace muperm {

struct Term {
  std::uint64_t exp = 0;
  Elt coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class SparsePoly {
 public:
  SparsePoly() = default;
  /// Sorts, merges equal exponents (char-2 addition) and drops zeros.
  explicit SparsePoly(std::vector<Term> terms);

  static SparsePoly monomial(std::uint64_t exp, Elt coeff = kOne);
  /// Sum of X^e over the given exponents, all coefficients 1 (collisions cancel).
  static SparsePoly from_exponents(std::initializer_list<std::uint64_t> exps);
  static SparsePoly from_exponents(const std::vector<std::uint64_t>& exps);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Highest exponent; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept { return terms_.empty() ? 0 : terms_.back().exp; }
  std::uint64_t low_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().exp; }
  Elt leading_coeff() const noexcept { return terms_.empty() ? kZero : terms_.back().coeff; }
  Elt coeff(std::uint64_t exp) const noexcept;
  std::vector<std::uint64_t> support() const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::vector<Term> terms_;
};

SparsePoly mul(const Field& f, const SparsePoly& a, const SparsePoly& b);
SparsePoly scale(const Field& f, const SparsePoly& a, Elt c);
/// Multiplies by X^shift.
SparsePoly shift(const SparsePoly& a, std::uint64_t shift);

Elt eval(const Field& f, const SparsePoly& p, Elt x);

/// Reduction modulo X^{q^2} - X: exponent 0 stays 0, e > 0 maps into [1, q^2-1].
SparsePoly reduce_mod_field(const Field& f, const SparsePoly& p);

/// Raises every coefficient to the q-th power.
SparsePoly coeff_frobenius(const Field& f, const SparsePoly& p);

/// X^{deg A} * A^{(q)}(1/X): coefficient reversal of the Frobenius twist.
SparsePoly reversed_twist(const Field& f, const SparsePoly& a);

// Dense coefficient vectors, index = exponent, no trailing zeros.
using DensePoly = std::vector<Elt>;

inline constexpr std::uint64_t kMaxDenseDegree = std::uint64_t{1} << 22;

DensePoly to_dense(const SparsePoly& p);
SparsePoly from_dense(const DensePoly& p);

/// Monic gcd; both zero is a domain error.
SparsePoly poly_gcd(const Field& f, const SparsePoly& a, const SparsePoly& b);

namespace dense {
void trim(DensePoly& p);
DensePoly mul(const Field& f, const DensePoly& a, const DensePoly& b);
DensePoly add(const DensePoly& a, const DensePoly& b);
DensePoly scale(const Field& f, const DensePoly& a, Elt c);
/// Quotient and remainder; divisor must be nonzero.
void divmod(const Field& f, const DensePoly& a, const DensePoly& b, DensePoly& quot, DensePoly& rem);
DensePoly gcd(const Field& f, DensePoly a, DensePoly b);
DensePoly pow(const Field& f, DensePoly base, std::uint64_t e);
Elt eval(const Field& f, const DensePoly& p, Elt x);
}  // namespace dense

/// A point of the projective line over F_{q^2}: a field element or infinity.
class ProjValue {
 public:
  constexpr ProjValue() = default;
  constexpr ProjValue(Elt v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr ProjValue infinity() {
    ProjValue p;
    p.infinite_ = true;
    return p;
  }

  constexpr bool is_infinity() const noexcept { return infinite_; }
  constexpr Elt value() const noexcept { return value_; }

  friend constexpr bool operator==(const ProjValue&, const ProjValue&) = default;

 private:
  Elt value_{};
  bool infinite_ = false;
};

/// X -> (aX + b)/(cX + d) with ad + bc != 0.
struct MobiusMap {
  Elt a, b, c, d;
  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
};

Elt determinant(const Field& f, const MobiusMap& m);
/// Throws a parameter error if the determinant vanishes.
void validate(const Field& f, const MobiusMap& m);
MobiusMap mobius_identity();
/// (X + w)/(wX + 1) for the field's order-3 element w.
MobiusMap mobius_rho(const Field& f);
/// outer o inner as a matrix product.
MobiusMap mobius_compose(const Field& f, const MobiusMap& outer, const MobiusMap& inner);
/// Equality in PGL_2: matrices equal up to a nonzero scalar.
bool mobius_equivalent(const Field& f, const MobiusMap& x, const MobiusMap& y);
ProjValue mobius_apply(const Field& f, const MobiusMap& m, ProjValue v);

/// num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  /// Identity X.
  RatFunc();

  static RatFunc make(const Field& f, SparsePoly num, SparsePoly den);
  static RatFunc constant(Elt c);
  /// X^n; negative n gives 1/X^{|n|}.
  static RatFunc power(std::int64_t n);
  static RatFunc from_mobius(const Field& f, const MobiusMap& m);

  const SparsePoly& num() const noexcept { return num_; }
  const SparsePoly& den() const noexcept { return den_; }
  /// max(deg num, deg den).
  std::uint64_t degree() const noexcept;
  bool is_constant() const noexcept;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  RatFunc(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {}

  SparsePoly num_;
  SparsePoly den_;
};

ProjValue rat_eval(const Field& f, const RatFunc& r, ProjValue v);
/// outer(inner(X)). Composing with a constant that hits a pole of outer is a domain error.
RatFunc rat_compose(const Field& f, const RatFunc& outer, const RatFunc& inner);
/// num1*den2 == num2*den1, compared coefficient by coefficient.
bool rat_equal(const Field& f, const RatFunc& r1, const RatFunc& r2);

}  // namespace muperm
