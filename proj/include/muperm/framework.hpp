#pragma once

// Permutation polynomials of the shape X^r A(X^{q-1}) over F_{q^2}:
// the reduction to mu_{q+1}, the quotient rewrite, the rho-conjugation
// identity, the trinomial family X^{d1} + X^{d2} + X^{d3}, the generic
// construction eta o h o rho, and the two comparison families.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "muperm/circle.hpp"
#include "muperm/poly.hpp"

namespace muperm {

// ---------------------------------------------------------------------------
// Trinomial family

struct TrinomialParams {
  int k = 1;
  std::int64_t ell = 1;
  std::int64_t m = 2;
  std::int64_t u = 0;
};

/// Canonical exponents in [1, q^2 - 1].
struct Thm1Exponents {
  std::uint64_t d1 = 0, d2 = 0, d3 = 0;
  friend bool operator==(const Thm1Exponents&, const Thm1Exponents&) = default;
};

/// Residues of q, Q = 2^ell, R = 2^m and the modulus q^2 - 1.
struct TrinomialConstants {
  std::int64_t q, modulus, big_q, big_r;
};

TrinomialConstants trinomial_constants(const TrinomialParams& p);
Thm1Exponents thm1_exponents(const TrinomialParams& p);

struct Thm1Result {
  TrinomialParams params;
  Thm1Exponents exps;
  /// gcd(d1, q^2 - 1) = 1.
  bool accepted = false;
  /// Fewer than three terms survive the char-2 merge.
  bool degenerate = false;
  /// Zero when rejected.
  SparsePoly poly;
};

Thm1Result thm1_generate(const TrinomialParams& p);

/// Intermediate facts of the no-roots / rho-conjugation argument for one
/// accepted trinomial. Every field is expected to be true.
struct Thm1ProofCheck {
  bool exponent_relations = false;  // d1 = d2 + R(q-1), d3 = d2 + (Q+R)(q-1), all equal mod q-1
  bool d2_coprime = false;          // gcd(d2, q-1) = 1
  bool q_minus_r_coprime = false;   // gcd(Q-R, q+1) = 1
  bool wrapped_matches = false;     // X^{d2} A(X^{q-1}) reduces to f, A = X^R + 1 + X^{Q+R}
  bool a_at_one = false;            // A(1) = 1
  bool cancellation = false;        // A(a) + a^{Q+R} A(a)^q = a^R + a^Q on mu_{q+1}
  bool no_roots = false;            // A has no roots on mu_{q+1}
  bool quotient_matches = false;    // X^{Q+R} A^(q)(1/X)/A(X) agrees with g on mu_{q+1}
  bool conjugation_matches = false; // g^{(-1)^m} agrees with rho o X^{R -+ Q} o rho on mu_{q+1}
  std::string branch;               // which parity case applies
  bool branch_ok = false;           // power map and rho have the bijectivity the case needs
  bool g_permutes = false;          // g permutes mu_{q+1}

  bool all() const noexcept;
};

/// Requires an accepted parameter set (parameter error otherwise).
Thm1ProofCheck thm1_proof_check(const Field& f, const TrinomialParams& p);

// ---------------------------------------------------------------------------
// Wrapped forms X^r A(X^{q-1})

struct WrappedForm {
  /// Positive wherever the permutation criterion is used; any integer for the rewrite.
  std::int64_t r = 1;
  SparsePoly a;
};

/// X^r A(X^{q-1}) reduced mod X^{q^2} - X. Requires r > 0.
SparsePoly reconstruct(const Field& f, const WrappedForm& w);

/// Writes f as X^r A(X^{q-1}). r defaults to the lowest exponent of f; an
/// explicit anchor must be one of f's exponents, and the other exponents
/// are then taken cyclically mod q^2 - 1 above it.
WrappedForm factor_as_wrapped(const Field& f, const SparsePoly& poly,
                              std::optional<std::uint64_t> anchor = std::nullopt);

/// gcd(r, q-1) = 1 and x -> x^r A(x)^{q-1} permutes mu_{q+1}.
bool criterion_lemma1(const Field& f, const WrappedForm& w);

/// x^r A(x)^{q-1}.
Elt wrapped_circle_map(const Field& f, const WrappedForm& w, Elt x);

bool no_roots_on_circle(const Field& f, const SparsePoly& a);

/// X^s A^(q)(1/X) / A(X) with s = r mod (q+1) in [0, q], as a normalized
/// rational function. Fails with rewrite-invalid if A vanishes on mu_{q+1}.
RatFunc rewrite_lemma2(const Field& f, const WrappedForm& w);

// ---------------------------------------------------------------------------
// rho-conjugation identity

struct Lemma4Sides {
  RatFunc lhs, rhs;
};

/// Both sides of X^{(-1)^m} o (X^{Q+R}+X^Q+1)/(X^{Q+R}+X^R+1) = rho o X^{R-+Q} o rho.
Lemma4Sides lemma4_sides(const Field& f, int ell, int m);
bool lemma4_check(const Field& f, int ell, int m);

// ---------------------------------------------------------------------------
// Generic construction

/// Smallest positive r = s mod (q+1) with gcd(r, q-1) = 1.
std::int64_t select_exponent(std::int64_t s, std::int64_t q);

struct QuotientForm {
  std::int64_t s = 0;  // in [0, q]
  SparsePoly a;
};

/// Writes g as X^s A^(q)(1/X)/A(X) with A = den(g), rescaled by a scalar
/// when needed.
QuotientForm express_quotient_form(const Field& f, const RatFunc& g);

struct FactoryOutput {
  SparsePoly poly;
  WrappedForm wrapped;
  RatFunc g;
  std::int64_t s = 0;
  /// The set h acts on: proj_line or unit_circle.
  SetKind middle = SetKind::unit_circle;
};

/// g = post o h o pre, then f = X^r A(X^{q-1}) from g's quotient form.
FactoryOutput factory_remark(const Field& f, const RatFunc& h, const MobiusMap& pre, const MobiusMap& post);

// ---------------------------------------------------------------------------
// Comparison families

struct WydmParams {
  int k = 1;
  std::int64_t s = 1;  // odd
  std::int64_t t = 2;  // even
  std::int64_t r = 1;  // r = 2^s + 2^t mod (q+1)
};

void validate(const WydmParams& p);
/// X^r (X^{(S+T)(q-1)} + X^{T(q-1)} + 1), reduced.
SparsePoly wydm_generate(const WydmParams& p);
/// Whether the family predicts a permutation: gcd(r, q-1) = 1.
bool wydm_predicts_permutation(const WydmParams& p);

struct LhParams {
  int k = 1;
  std::int64_t n = 1;
  std::int64_t r = 0;  // r (T-1) = T mod (q+1), in [1, q+1]
  std::int64_t s = 0;  // s (T-1) = -1 mod (q+1), in [1, q+1]
};

/// X + X^{1+r(q-1)} + X^{1+s(q-1)}, reduced.
std::pair<LhParams, SparsePoly> lh_generate(int k, std::int64_t n);

}  // namespace muperm
