#include "muperm/muperm.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "muperm/equiv.hpp"
#include "muperm/error.hpp"
#include "muperm/framework.hpp"
#include "muperm/numtheory.hpp"
#include "muperm/serialize.hpp"
#include "muperm/sweep.hpp"

struct muperm_field {
  muperm::Field field;
};

struct muperm_poly {
  std::shared_ptr<const muperm::Field> field;
  muperm::SparsePoly poly;
};

namespace {

using muperm::Json;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
muperm_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return MUPERM_OK;
  } catch (const muperm::Error& e) {
    g_last_error = e.what();
    return static_cast<muperm_status>(static_cast<int>(e.code()));
  } catch (const Json::exception& e) {
    g_last_error = e.what();
    return MUPERM_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MUPERM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return MUPERM_ERR_INTERNAL;
  }
}

Json wrapped_to_json(int k, const muperm::WrappedForm& w) {
  return Json{{"r", w.r}, {"a", muperm::poly_to_json(k, w.a)}};
}

}  // namespace

extern "C" {

const char* muperm_status_name(muperm_status status) {
  switch (status) {
    case MUPERM_OK: return "ok";
    case MUPERM_ERR_NULL_ARGUMENT: return "null-argument";
    case MUPERM_ERR_INTERNAL: return "internal";
    default:
      if (status >= MUPERM_ERR_PARAMETER && status <= MUPERM_ERR_PARSE) {
        return muperm::errc_name(static_cast<muperm::Errc>(status));
      }
      return "unknown";
  }
}

const char* muperm_last_error(void) { return g_last_error.c_str(); }

void muperm_string_free(char* s) { std::free(s); }

muperm_status muperm_field_new(int k, int omega_alt, muperm_field** out) {
  if (!out) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *out = new muperm_field{muperm::Field(k, omega_alt ? muperm::OmegaChoice::squared : muperm::OmegaChoice::canonical)};
  });
}

void muperm_field_free(muperm_field* field) { delete field; }

muperm_status muperm_field_json(const muperm_field* field, char** out) {
  if (!field || !out) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    Json j = muperm::field_to_json(field->field);
    j["omega"] = muperm::to_hex(field->field.omega());
    *out = dup_string(j.dump());
  });
}

muperm_status muperm_poly_parse(const char* json, muperm_poly** out) {
  if (!json || !out) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    Json j;
    try {
      j = Json::parse(json);
    } catch (const Json::exception& e) {
      throw muperm::Error(muperm::Errc::parse, e.what());
    }
    auto parsed = muperm::poly_from_json(j);
    *out = new muperm_poly{std::make_shared<const muperm::Field>(parsed.k), std::move(parsed.poly)};
  });
}

muperm_status muperm_poly_json(const muperm_poly* poly, char** out) {
  if (!poly || !out) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(muperm::poly_to_json(poly->field->k(), poly->poly).dump()); });
}

void muperm_poly_free(muperm_poly* poly) { delete poly; }

muperm_status muperm_poly_is_permutation(const muperm_poly* poly, int* out) {
  if (!poly || !out) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = muperm::brute_force_is_permutation(*poly->field, poly->poly) ? 1 : 0; });
}

muperm_status muperm_gen_thm1(int k, long long ell, long long m, long long u, char** record) {
  if (!record) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const muperm::Thm1Result gen = muperm::thm1_generate({k, ell, m, u});
    const muperm::Field f(k);
    const bool bf = gen.accepted && muperm::brute_force_is_permutation(f, gen.poly);
    Json j = muperm::thm1_record(gen, bf);
    if (!gen.accepted) j["brute_force_ok"] = nullptr;
    *record = dup_string(j.dump());
  });
}

muperm_status muperm_gen_wydm(int k, long long s, long long t, long long r, char** record) {
  if (!record) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const muperm::WydmParams wp{k, s, t, r};
    const muperm::SparsePoly g = muperm::wydm_generate(wp);
    const muperm::Field f(k);
    Json j{{"params", {{"k", k}, {"s", s}, {"t", t}, {"r", r}}},
           {"poly", muperm::poly_to_json(k, g)},
           {"predicted", muperm::wydm_predicts_permutation(wp)},
           {"brute_force_ok", muperm::brute_force_is_permutation(f, g)}};
    *record = dup_string(j.dump());
  });
}

muperm_status muperm_gen_lh(int k, long long n, char** record) {
  if (!record) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto [lp, g] = muperm::lh_generate(k, n);
    const muperm::Field f(k);
    Json j{{"params", {{"k", k}, {"n", n}, {"r", lp.r}, {"s", lp.s}}},
           {"poly", muperm::poly_to_json(k, g)},
           {"brute_force_ok", muperm::brute_force_is_permutation(f, g)}};
    *record = dup_string(j.dump());
  });
}

muperm_status muperm_verify(const muperm_poly* poly, char** report) {
  if (!poly || !report) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const muperm::Field& f = *poly->field;
    const muperm::SparsePoly p = muperm::reduce_mod_field(f, poly->poly);
    const bool bf = muperm::brute_force_is_permutation(f, p);
    Json j{{"k", f.k()}, {"poly", muperm::poly_to_json(f.k(), p)}, {"brute_force", bf}};
    try {
      const muperm::WrappedForm w = muperm::factor_as_wrapped(f, p);
      const bool crit = muperm::criterion_lemma1(f, w);
      j["wrapped"] = wrapped_to_json(f.k(), w);
      j["criterion"] = crit;
      j["agree"] = crit == bf;
    } catch (const muperm::Error& e) {
      if (e.code() != muperm::Errc::not_wrappable && e.code() != muperm::Errc::parameter) throw;
      j["wrapped"] = nullptr;
      j["criterion"] = nullptr;
      j["agree"] = nullptr;
      j["note"] = e.what();
    }
    *report = dup_string(j.dump());
  });
}

muperm_status muperm_rewrite(const muperm_poly* poly, long long anchor, char** report) {
  if (!poly || !report) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const muperm::Field& f = *poly->field;
    std::optional<std::uint64_t> a;
    if (anchor >= 0) a = static_cast<std::uint64_t>(anchor);
    const muperm::WrappedForm w = muperm::factor_as_wrapped(f, poly->poly, a);
    const muperm::RatFunc g = muperm::rewrite_lemma2(f, w);
    const auto q1 = static_cast<std::int64_t>(f.q() + 1);
    Json j{{"wrapped", wrapped_to_json(f.k(), w)},
           {"s", muperm::mod_floor(w.r, q1)},
           {"g", muperm::ratfunc_to_json(f.k(), g)},
           {"g_permutes_circle", muperm::is_perm_on(f, g, muperm::unit_circle(f))}};
    *report = dup_string(j.dump());
  });
}

muperm_status muperm_equiv(const muperm_poly* lhs, const muperm_poly* rhs, char** witness) {
  if (!lhs || !rhs || !witness) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    if (lhs->field->k() != rhs->field->k()) throw muperm::Error(muperm::Errc::parameter, "polynomials over different fields");
    const auto w = muperm::are_equivalent(*lhs->field, lhs->poly, rhs->poly);
    *witness = dup_string(w ? muperm::witness_to_json(*w).dump() : std::string("null"));
  });
}

muperm_status muperm_sweep(const char* config_json, char** detail, char** report, unsigned long long* failures) {
  if (!config_json) return MUPERM_ERR_NULL_ARGUMENT;
  return guarded([&] {
    Json j;
    try {
      j = Json::parse(config_json);
    } catch (const Json::exception& e) {
      throw muperm::Error(muperm::Errc::parse, e.what());
    }
    muperm::SweepConfig cfg;
    if (j.contains("k")) cfg.k = muperm::parse_range(j["k"].get<std::string>());
    if (j.contains("ell")) cfg.ell = muperm::parse_range(j["ell"].get<std::string>());
    if (j.contains("m")) cfg.m = muperm::parse_range(j["m"].get<std::string>());
    if (j.contains("u_max")) cfg.u_max = j["u_max"].get<std::int64_t>();
    if (j.contains("checks")) {
      cfg.checks.clear();
      for (const auto& c : j["checks"]) cfg.checks.insert(c.get<std::string>());
    }
    if (j.value("omega_alt", false)) cfg.omega = muperm::OmegaChoice::squared;
    std::ostringstream lines;
    const muperm::SweepReport r = muperm::run_sweep(cfg, detail ? &lines : nullptr);
    if (detail) *detail = dup_string(lines.str());
    if (report) *report = dup_string(muperm::report_to_json(r));
    if (failures) *failures = r.failures();
  });
}

}  // extern "C"
