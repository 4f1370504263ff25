#include "muperm/serialize.hpp"

#include "muperm/error.hpp"

namespace muperm {

namespace {

int parse_k(const Json& j) {
  if (!j.contains("k") || !j["k"].is_number_integer()) throw Error(Errc::parse, "missing integer field \"k\"");
  const int k = j["k"].get<int>();
  if (k < 1 || k > kMaxK) throw Error(Errc::parse, "k out of range");
  return k;
}

SparsePoly parse_terms(const Field& f, const Json& j) {
  if (!j.contains("terms") || !j["terms"].is_array()) throw Error(Errc::parse, "missing array field \"terms\"");
  std::vector<Term> terms;
  for (const Json& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() || !t[1].is_string()) {
      if (t.is_array() && t.size() == 2 && t[0].is_number_integer() && t[0].get<std::int64_t>() < 0) {
        throw Error(Errc::parse, "negative exponent");
      }
      throw Error(Errc::parse, "term must be [exponent, \"coeff_hex\"]");
    }
    terms.push_back({t[0].get<std::uint64_t>(), elt_from_hex(f, t[1].get<std::string>())});
  }
  return SparsePoly(std::move(terms));
}

}  // namespace

Json field_to_json(const Field& f) {
  return Json{{"k", f.k()}, {"modulus_bits", to_hex(Elt{f.modulus()})}};
}

Json poly_to_json(int k, const SparsePoly& p) {
  Json terms = Json::array();
  for (const Term& t : p.terms()) terms.push_back(Json::array({t.exp, to_hex(t.coeff)}));
  return Json{{"k", k}, {"terms", std::move(terms)}};
}

ParsedPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::parse, "polynomial JSON must be an object");
  const int k = parse_k(j);
  const Field f(k);
  return {k, parse_terms(f, j)};
}

Json ratfunc_to_json(int k, const RatFunc& r) {
  return Json{{"num", poly_to_json(k, r.num())}, {"den", poly_to_json(k, r.den())}};
}

RatFunc ratfunc_from_json(const Field& f, const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw Error(Errc::parse, "rational function needs num and den");
  return RatFunc::make(f, parse_terms(f, j["num"]), parse_terms(f, j["den"]));
}

Json witness_to_json(const EquivWitness& w) {
  return Json{{"alpha", to_hex(w.alpha)}, {"beta", to_hex(w.beta)}, {"n", w.n}};
}

EquivWitness witness_from_json(const Field& f, const Json& j) {
  try {
    EquivWitness w{elt_from_hex(f, j.at("alpha").get<std::string>()), elt_from_hex(f, j.at("beta").get<std::string>()),
                   j.at("n").get<std::uint64_t>()};
    validate(f, w);
    return w;
  } catch (const Json::exception& e) {
    throw Error(Errc::parse, e.what());
  }
}

Json params_to_json(const TrinomialParams& p, const Thm1Exponents& d) {
  return Json{{"k", p.k}, {"ell", p.ell}, {"m", p.m}, {"u", p.u}, {"d1", d.d1}, {"d2", d.d2}, {"d3", d.d3}};
}

Json thm1_record(const Thm1Result& r, bool brute_force_ok) {
  return Json{{"params", params_to_json(r.params, r.exps)},
              {"poly", poly_to_json(r.params.k, r.poly)},
              {"accepted", r.accepted},
              {"degenerate", r.degenerate},
              {"brute_force_ok", brute_force_ok}};
}

Json correspondence_to_json(const CorrespondenceRecord& rec) {
  return Json{{"case", rec.kind},
              {"witness", rec.witness ? witness_to_json(*rec.witness) : Json(nullptr)},
              {"verified", rec.verified},
              {"lift_i", rec.lift_i}};
}

Json proof_check_to_json(const Thm1ProofCheck& c) {
  return Json{{"exponent_relations", c.exponent_relations},
              {"d2_coprime", c.d2_coprime},
              {"q_minus_r_coprime", c.q_minus_r_coprime},
              {"wrapped_matches", c.wrapped_matches},
              {"a_at_one", c.a_at_one},
              {"cancellation", c.cancellation},
              {"no_roots", c.no_roots},
              {"quotient_matches", c.quotient_matches},
              {"conjugation_matches", c.conjugation_matches},
              {"branch", c.branch},
              {"branch_ok", c.branch_ok},
              {"g_permutes", c.g_permutes},
              {"ok", c.all()}};
}

}  // namespace muperm
