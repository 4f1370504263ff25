#pragma once

// JSON forms of fields, polynomials, witnesses and verification records.

#include <json.hpp>

#include "muperm/equiv.hpp"
#include "muperm/framework.hpp"

namespace muperm {

using Json = nlohmann::json;

/// {"k": int, "modulus_bits": hex}
Json field_to_json(const Field& f);

/// {"k": int, "terms": [[exponent, "coeff_hex"], ...]}, exponents ascending.
Json poly_to_json(int k, const SparsePoly& p);

struct ParsedPoly {
  int k;
  SparsePoly poly;
};

/// Validates k and every coefficient against the field of size 2^{2k}.
ParsedPoly poly_from_json(const Json& j);

/// {"num": poly, "den": poly}
Json ratfunc_to_json(int k, const RatFunc& r);
RatFunc ratfunc_from_json(const Field& f, const Json& j);

Json witness_to_json(const EquivWitness& w);
EquivWitness witness_from_json(const Field& f, const Json& j);

Json params_to_json(const TrinomialParams& p, const Thm1Exponents& d);

/// {"params", "poly", "accepted", "degenerate", "brute_force_ok"}
Json thm1_record(const Thm1Result& r, bool brute_force_ok);

/// {"case", "witness", "verified", "lift_i"}
Json correspondence_to_json(const CorrespondenceRecord& rec);

Json proof_check_to_json(const Thm1ProofCheck& c);

}  // namespace muperm
