#include "muperm/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <thread>

#include "muperm/equiv.hpp"
#include "muperm/error.hpp"
#include "muperm/framework.hpp"
#include "muperm/numtheory.hpp"
#include "muperm/serialize.hpp"

namespace muperm {

bool brute_force_is_permutation(const Field& f, const SparsePoly& poly) {
  if (f.size() > (std::uint64_t{1} << 24)) throw Error(Errc::resource, "field too large for brute force");
  std::vector<bool> seen(f.size(), false);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const Elt y = eval(f, poly, Elt{static_cast<std::uint32_t>(x)});
    if (seen[y.bits]) return false;
    seen[y.bits] = true;
  }
  return true;
}

IntRange parse_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Error(Errc::parameter, "bad range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::int64_t v = parse_int(text);
    return {v, v};
  }
  return {parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
}

void validate(const SweepConfig& cfg) {
  for (const auto& c : cfg.checks) {
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
      throw Error(Errc::parameter, "unknown check '" + c + "'");
    }
  }
  if (cfg.k.lo <= cfg.k.hi && (cfg.k.lo < 1 || cfg.k.hi > kMaxK)) {
    throw Error(Errc::parameter, "k range must lie within [1, 12]");
  }
  auto positive = [](const std::optional<IntRange>& r) { return !r || r->hi < r->lo || r->lo >= 1; };
  if (!positive(cfg.ell) || !positive(cfg.m)) throw Error(Errc::parameter, "ell and m ranges must be positive");
  if (cfg.u_max && *cfg.u_max < -1) throw Error(Errc::parameter, "u-max must be >= -1");
}

namespace {

struct UnitResult {
  std::vector<std::string> lines;
  SweepReport report;
};

using Unit = std::function<UnitResult()>;

IntRange default_exp_range(const std::optional<IntRange>& r, int k) {
  return r.value_or(IntRange{1, 2 * k + 1});
}

void emit(UnitResult& out, Json record) {
  out.lines.push_back(record.dump());
  ++out.report.total;
}

UnitResult trinomial_unit(const SweepConfig& cfg, int k, std::int64_t ell) {
  UnitResult out;
  const Field f(k, cfg.omega);
  const IntRange mr = default_exp_range(cfg.m, k);
  const std::int64_t u_max = cfg.u_max.value_or(static_cast<std::int64_t>(f.q()));
  const bool want_thm1 = cfg.checks.count("thm1"), want_proof = cfg.checks.count("proof"),
             want_lh = cfg.checks.count("sec3-lh"), want_wydm = cfg.checks.count("sec3-wydm");
  for (std::int64_t m = mr.lo; m <= mr.hi; ++m) {
    if (m == ell) continue;
    for (std::int64_t u = 0; u <= u_max; ++u) {
      const TrinomialParams tp{k, ell, m, u};
      const Thm1Result gen = thm1_generate(tp);
      const Json params = params_to_json(tp, gen.exps);
      if (want_thm1) {
        std::optional<bool> bf;
        if (gen.accepted) bf = brute_force_is_permutation(f, gen.poly);
        Json rec = thm1_record(gen, bf.value_or(false));
        if (!bf) rec["brute_force_ok"] = nullptr;
        rec["check"] = "thm1";
        emit(out, std::move(rec));
        if (gen.accepted) {
          ++out.report.accepted;
          if (gen.degenerate) ++out.report.degenerate;
          if (!*bf) ++out.report.brute_force_failures;
        }
      }
      if (!gen.accepted) continue;
      if (want_proof) {
        const Thm1ProofCheck pc = thm1_proof_check(f, tp);
        emit(out, Json{{"check", "proof"}, {"params", params}, {"steps", proof_check_to_json(pc)}});
        if (!pc.all()) ++out.report.identity_failures;
      }
      if (want_lh) {
        const CorrespondenceRecord rec = sec3_lh_match(f, tp);
        Json j = correspondence_to_json(rec);
        j["check"] = "sec3-lh";
        j["params"] = params;
        j["lifted_ell"] = rec.lifted_ell;
        j["n"] = rec.n;
        j["r"] = rec.lh_r;
        j["s"] = rec.lh_s;
        emit(out, std::move(j));
        if (!rec.verified) ++out.report.correspondence_failures;
      }
      if (want_wydm && (ell % 2) != (m % 2)) {
        const CorrespondenceRecord rec = sec3_wydm_match(f, tp);
        Json j = correspondence_to_json(rec);
        j["check"] = "sec3-wydm";
        j["params"] = params;
        j["wydm"] = Json{{"s", rec.wydm.s}, {"t", rec.wydm.t}, {"r", rec.wydm.r}};
        emit(out, std::move(j));
        if (!rec.verified) ++out.report.correspondence_failures;
      }
    }
  }
  return out;
}

UnitResult lemma3_unit(int k) {
  UnitResult out;
  const Field f(k);
  const MobiusMap rho = mobius_rho(f);
  const PointSet circle = unit_circle(f), line = proj_line(f);
  const bool on_circle = maps_bijectively(f, rho, circle, circle);
  const bool to_line = maps_bijectively(f, rho, circle, line);
  const bool from_line = maps_bijectively(f, rho, line, circle);
  const bool even = k % 2 == 0;
  const bool ok = even ? (on_circle && !to_line && !from_line) : (!on_circle && to_line && from_line);
  emit(out, Json{{"check", "lemma3"},
                 {"k", k},
                 {"parity", even ? "even" : "odd"},
                 {"rho_permutes_circle", on_circle},
                 {"rho_circle_to_line", to_line},
                 {"rho_line_to_circle", from_line},
                 {"ok", ok}});
  if (!ok) ++out.report.identity_failures;
  return out;
}

UnitResult lemma4_unit(const SweepConfig& cfg, int k) {
  UnitResult out;
  const Field f(k, cfg.omega);
  const IntRange er = cfg.ell.value_or(IntRange{1, 5});
  const IntRange mr = cfg.m.value_or(IntRange{1, 5});
  for (std::int64_t ell = er.lo; ell <= er.hi; ++ell) {
    for (std::int64_t m = mr.lo; m <= mr.hi; ++m) {
      if (ell == m) continue;
      const bool ok = lemma4_check(f, static_cast<int>(ell), static_cast<int>(m));
      emit(out, Json{{"check", "lemma4"},
                     {"k", k},
                     {"ell", ell},
                     {"m", m},
                     {"omega", cfg.omega == OmegaChoice::canonical ? "canonical" : "squared"},
                     {"ok", ok}});
      if (!ok) ++out.report.identity_failures;
    }
  }
  return out;
}

UnitResult props_unit(const SweepConfig& cfg, int k) {
  UnitResult out;
  const Field f(k);
  const auto q = static_cast<std::int64_t>(f.q());
  const auto mod = static_cast<std::int64_t>(f.order());
  const IntRange sr = default_exp_range(cfg.ell, k), tr = default_exp_range(cfg.m, k);
  for (std::int64_t s = sr.lo; s <= sr.hi; ++s) {
    if (s % 2 == 0) continue;
    for (std::int64_t t = tr.lo; t <= tr.hi; ++t) {
      if (t % 2 != 0) continue;
      const std::int64_t base = positive_rep(pow2_mod(s, q + 1) + pow2_mod(t, q + 1), q + 1);
      for (std::int64_t r = base; r <= mod; r += q + 1) {
        const WydmParams wp{k, s, t, r};
        const SparsePoly g = wydm_generate(wp);
        const bool predicted = wydm_predicts_permutation(wp);
        const bool bf = brute_force_is_permutation(f, g);
        emit(out, Json{{"check", "props"},
                       {"family", "wydm"},
                       {"params", {{"k", k}, {"s", s}, {"t", t}, {"r", r}}},
                       {"poly", poly_to_json(k, g)},
                       {"predicted", predicted},
                       {"brute_force_ok", bf}});
        if (bf != predicted) ++out.report.brute_force_failures;
      }
    }
  }
  for (std::int64_t n = sr.lo; n <= sr.hi; ++n) {
    if (!inverse_mod(pow2_mod(n, q + 1) - 1, q + 1)) continue;
    auto [lp, g] = lh_generate(k, n);
    const bool bf = brute_force_is_permutation(f, g);
    emit(out, Json{{"check", "props"},
                   {"family", "lh"},
                   {"params", {{"k", k}, {"n", n}, {"r", lp.r}, {"s", lp.s}}},
                   {"poly", poly_to_json(k, g)},
                   {"predicted", true},
                   {"brute_force_ok", bf}});
    if (!bf) ++out.report.brute_force_failures;
  }
  return out;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg, std::ostream* detail) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Unit> units;
  const bool trinomial_checks = cfg.checks.count("thm1") || cfg.checks.count("proof") ||
                                cfg.checks.count("sec3-lh") || cfg.checks.count("sec3-wydm");
  for (std::int64_t k = cfg.k.lo; k <= cfg.k.hi; ++k) {
    const int kk = static_cast<int>(k);
    if (trinomial_checks) {
      const IntRange er = default_exp_range(cfg.ell, kk);
      for (std::int64_t ell = er.lo; ell <= er.hi; ++ell) {
        units.emplace_back([&cfg, kk, ell] { return trinomial_unit(cfg, kk, ell); });
      }
    }
    if (cfg.checks.count("lemma3")) units.emplace_back([kk] { return lemma3_unit(kk); });
    if (cfg.checks.count("lemma4")) units.emplace_back([&cfg, kk] { return lemma4_unit(cfg, kk); });
    if (cfg.checks.count("props")) units.emplace_back([&cfg, kk] { return props_unit(cfg, kk); });
  }

  // Units run on a worker pool; output is emitted in unit order.
  std::vector<UnitResult> results(units.size());
  std::vector<std::exception_ptr> errors(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      try {
        results[i] = units[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(units.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SweepReport report;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    const SweepReport& r = results[i].report;
    report.total += r.total;
    report.accepted += r.accepted;
    report.degenerate += r.degenerate;
    report.brute_force_failures += r.brute_force_failures;
    report.correspondence_failures += r.correspondence_failures;
    report.identity_failures += r.identity_failures;
    if (detail) {
      for (const auto& line : results[i].lines) *detail << line << '\n';
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string report_to_json(const SweepReport& r) {
  return Json{{"total", r.total},
              {"accepted", r.accepted},
              {"degenerate", r.degenerate},
              {"brute_force_failures", r.brute_force_failures},
              {"correspondence_failures", r.correspondence_failures},
              {"identity_failures", r.identity_failures},
              {"elapsed", r.elapsed.count()}}
      .dump();
}

}  // namespace muperm
