#pragma once

// Multiplicative equivalence over F_{q^2}: f = alpha * g(beta * X^n) mod
// X^{q^2} - X with alpha, beta nonzero and gcd(n, q^2 - 1) = 1.

#include <optional>
#include <string>
#include <vector>

#include "muperm/framework.hpp"
#include "muperm/poly.hpp"

namespace muperm {

struct EquivWitness {
  Elt alpha = kOne;
  Elt beta = kOne;
  std::uint64_t n = 1;
  friend bool operator==(const EquivWitness&, const EquivWitness&) = default;
};

inline EquivWitness identity_witness() { return {}; }

/// Parameter error unless alpha, beta are nonzero and n is a unit mod q^2 - 1.
void validate(const Field& f, const EquivWitness& w);

/// alpha * g(beta * X^n), reduced.
SparsePoly apply_witness(const Field& f, const SparsePoly& g, const EquivWitness& w);

/// If f = first(g) and g = second(h) then f = compose(first, second)(h).
EquivWitness compose(const Field& f, const EquivWitness& first, const EquivWitness& second);
/// If f = w(g) then g = inverse(w)(f).
EquivWitness inverse(const Field& f, const EquivWitness& w);

struct EquivSearchOptions {
  /// Restrict the exponent to this value (required above max_k).
  std::optional<std::uint64_t> n;
  int max_k = 4;
};

/// Smallest witness (by n, then beta's discrete log) with f = alpha * g(beta X^n),
/// or nullopt. Both inputs are reduced first.
std::optional<EquivWitness> are_equivalent(const Field& f, const SparsePoly& lhs, const SparsePoly& rhs,
                                           const EquivSearchOptions& opts = {});

/// Exponents n that map the support of rhs onto that of lhs.
std::vector<std::uint64_t> candidate_exponents(const Field& f, const SparsePoly& lhs, const SparsePoly& rhs);

// ---------------------------------------------------------------------------
// Correspondences between the trinomial family and the two comparison families

struct CorrespondenceRecord {
  std::string kind;            // "lh", "wydm-direct", "wydm-reciprocal", "not-applicable"
  bool applicable = true;
  std::optional<EquivWitness> witness;
  bool verified = false;
  int lift_i = 0;
  SparsePoly trinomial;        // f
  SparsePoly partner;          // g from the comparison family

  // X + X^{1+r(q-1)} + X^{1+s(q-1)} family details
  std::int64_t lifted_ell = 0;
  std::int64_t n = 0;
  std::int64_t lh_r = 0, lh_s = 0;
  bool congruence_r = false;   // r v (q-1) = Q (q-1) mod q^2-1
  bool congruence_s = false;   // s v (q-1) = -R (q-1) mod q^2-1

  // 2^s + 2^t family details
  WydmParams wydm;
  std::string note;
};

/// Mixed-parity (ell, m): matches f against the 2^s + 2^t family, directly
/// (ell odd) or through X -> X^{q^2-2} (ell even).
CorrespondenceRecord sec3_wydm_match(const Field& f, const TrinomialParams& tp);

/// Matches f = g(X^{d1}) with g from lh_generate(k, ell' - m).
CorrespondenceRecord sec3_lh_match(const Field& f, const TrinomialParams& tp);

}  // namespace muperm
