// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "muperm/circle.hpp"
#include "muperm/equiv.hpp"
#include "muperm/error.hpp"
#include "muperm/framework.hpp"
#include "muperm/numtheory.hpp"
#include "muperm/sweep.hpp"
#include "support.hpp"

using namespace muperm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename Fn>
void each_trinomial(int k_lo, int k_hi, Fn&& fn) {
  for (int k = k_lo; k <= k_hi; ++k) {
    const Field f(k);
    for (std::int64_t ell = 1; ell <= 2 * k + 1; ++ell) {
      for (std::int64_t m = 1; m <= 2 * k + 1; ++m) {
        if (ell == m) continue;
        for (std::int64_t u = 0; u <= static_cast<std::int64_t>(f.q()); ++u) {
          const TrinomialParams tp{k, ell, m, u};
          const Thm1Result gen = thm1_generate(tp);
          if (gen.accepted) fn(f, tp, gen);
        }
      }
    }
  }
}

Outcome trinomial_soundness() {
  const auto t0 = Clock::now();
  std::uint64_t accepted = 0, failures = 0;
  each_trinomial(2, 6, [&](const Field& f, const TrinomialParams&, const Thm1Result& gen) {
    ++accepted;
    if (!brute_force_is_permutation(f, gen.poly)) ++failures;
  });
  const double secs = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%llu accepted, %llu failures, %.2f s (limit 60 s)",
                static_cast<unsigned long long>(accepted), static_cast<unsigned long long>(failures), secs);
  return {failures == 0 && accepted > 0 && secs < 60.0, buf};
}

Outcome criterion_biconditional() {
  gen::Rng rng(1001);
  std::uint64_t runs = 0, agree = 0, perms = 0;
  for (int k = 1; k <= 4; ++k) {
    const Field f(k);
    int done = 0;
    while (done < 200) {
      const WrappedForm w{static_cast<std::int64_t>(gen::uniform(rng, 1, f.order())),
                          gen::sparse(rng, f, 4, f.q() + 2)};
      if (w.a.is_zero()) continue;
      ++done;
      ++runs;
      const bool bf = brute_force_is_permutation(f, reconstruct(f, w));
      if (bf) ++perms;
      if (criterion_lemma1(f, w) == bf) ++agree;
    }
  }
  return {agree == runs, std::to_string(agree) + "/" + std::to_string(runs) + " agree (" + std::to_string(perms) +
                             " permutations)"};
}

Outcome rewrite_fidelity() {
  gen::Rng rng(1002);
  std::uint64_t runs = 0, exact = 0;
  for (int k = 2; k <= 3; ++k) {
    const Field f(k);
    int done = 0;
    while (done < 100) {
      const WrappedForm w{static_cast<std::int64_t>(gen::uniform(rng, 1, f.order())),
                          gen::sparse(rng, f, 4, f.q() + 2)};
      if (w.a.is_zero() || !no_roots_on_circle(f, w.a)) continue;
      ++done;
      ++runs;
      const RatFunc g = rewrite_lemma2(f, w);
      bool ok = true;
      for (const ProjValue& x : unit_circle(f).points) {
        if (rat_eval(f, g, x) != ProjValue(wrapped_circle_map(f, w, x.value()))) ok = false;
      }
      if (ok) ++exact;
    }
  }
  return {exact == runs, std::to_string(exact) + "/" + std::to_string(runs) + " rewrites exact on the circle"};
}

Outcome rho_parity() {
  const auto t0 = Clock::now();
  int ok = 0;
  for (int k = 1; k <= 8; ++k) {
    const Field f(k);
    const MobiusMap rho = mobius_rho(f);
    const PointSet c = unit_circle(f), l = proj_line(f);
    const bool even = k % 2 == 0;
    const bool good = even ? maps_bijectively(f, rho, c, c)
                           : maps_bijectively(f, rho, c, l) && maps_bijectively(f, rho, l, c);
    if (good) ++ok;
  }
  const double secs = seconds_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d/8 k values, %.3f s (limit 1 s)", ok, secs);
  return {ok == 8 && secs < 1.0, buf};
}

Outcome conjugation_identity() {
  int runs = 0, ok = 0;
  for (auto omega : {OmegaChoice::canonical, OmegaChoice::squared}) {
    for (int k = 1; k <= 4; ++k) {
      const Field f(k, omega);
      for (int ell = 1; ell <= 5; ++ell) {
        for (int m = 1; m <= 5; ++m) {
          if (ell == m) continue;
          ++runs;
          if (lemma4_check(f, ell, m)) ++ok;
        }
      }
    }
  }
  return {ok == runs, std::to_string(ok) + "/" + std::to_string(runs) + " (w and w^2, k = 1..4)"};
}

Outcome lh_correspondence() {
  std::uint64_t runs = 0, ok = 0;
  each_trinomial(1, 4, [&](const Field& f, const TrinomialParams& tp, const Thm1Result&) {
    ++runs;
    const CorrespondenceRecord rec = sec3_lh_match(f, tp);
    if (rec.verified && rec.congruence_r && rec.congruence_s) ++ok;
  });
  return {ok == runs && runs > 0, std::to_string(ok) + "/" + std::to_string(runs) + " verified"};
}

Outcome wydm_correspondence() {
  std::uint64_t runs = 0, ok = 0, reciprocal = 0;
  each_trinomial(1, 4, [&](const Field& f, const TrinomialParams& tp, const Thm1Result&) {
    if (tp.ell % 2 == tp.m % 2) return;
    ++runs;
    const CorrespondenceRecord rec = sec3_wydm_match(f, tp);
    if (rec.kind == "wydm-reciprocal") ++reciprocal;
    if (rec.verified) ++ok;
  });
  return {ok == runs && runs > 0, std::to_string(ok) + "/" + std::to_string(runs) + " verified (" +
                                      std::to_string(reciprocal) + " through X^{q^2-2})"};
}

Outcome family_predictions() {
  std::uint64_t runs = 0, ok = 0, non_perm = 0;
  for (int k = 1; k <= 4; ++k) {
    const Field f(k);
    const auto q = static_cast<std::int64_t>(f.q()), mod = static_cast<std::int64_t>(f.order());
    for (std::int64_t s = 1; s <= 2 * k + 1; s += 2) {
      for (std::int64_t t = 2; t <= 2 * k + 1; t += 2) {
        const std::int64_t base = positive_rep(pow2_mod(s, q + 1) + pow2_mod(t, q + 1), q + 1);
        for (std::int64_t r = base; r <= mod; r += q + 1) {
          const WydmParams wp{k, s, t, r};
          const bool bf = brute_force_is_permutation(f, wydm_generate(wp));
          const bool predicted = wydm_predicts_permutation(wp);
          if (!predicted) ++non_perm;
          ++runs;
          if (bf == predicted) ++ok;
        }
      }
    }
    for (std::int64_t n = 1; n <= 2 * k + 1; ++n) {
      if (!inverse_mod(pow2_mod(n, q + 1) - 1, q + 1)) continue;
      ++runs;
      if (brute_force_is_permutation(f, lh_generate(k, n).second)) ++ok;
    }
  }
  return {ok == runs && non_perm > 0, std::to_string(ok) + "/" + std::to_string(runs) + " match (" +
                                          std::to_string(non_perm) + " predicted non-permutations)"};
}

EquivWitness random_witness(gen::Rng& rng, const Field& f) {
  std::uint64_t n;
  do {
    n = gen::uniform(rng, 1, f.order() - 1);
  } while (std::gcd(n, f.order()) != 1);
  return {gen::nonzero(rng, f), gen::nonzero(rng, f), n};
}

Outcome equivalence_properties() {
  const Field f(2);
  gen::Rng rng(1009);
  int ok = 0, perms = 0;
  for (int i = 0; i < 50; ++i) {
    SparsePoly h;
    if (i % 2 == 0) {
      const auto ell = static_cast<std::int64_t>(gen::uniform(rng, 1, 5));
      const auto m = ell == 5 ? 1 : ell + 1;
      h = thm1_generate({2, ell, m, static_cast<std::int64_t>(gen::uniform(rng, 0, 4))}).poly;
    }
    if (h.is_zero()) h = reduce_mod_field(f, gen::sparse(rng, f, 4, f.order(), 1));
    const EquivWitness w1 = random_witness(rng, f), w2 = random_witness(rng, f);
    const SparsePoly g = apply_witness(f, h, w2), p = apply_witness(f, g, w1);
    const bool perm = brute_force_is_permutation(f, h);
    if (perm) ++perms;
    bool good = g.size() == h.size() && p.size() == h.size();
    good = good && brute_force_is_permutation(f, g) == perm && brute_force_is_permutation(f, p) == perm;
    good = good && apply_witness(f, h, compose(f, w1, w2)) == p;
    good = good && apply_witness(f, p, inverse(f, compose(f, w1, w2))) == h;
    const auto found = are_equivalent(f, p, h);
    good = good && found && apply_witness(f, h, *found) == p;
    if (good) ++ok;
  }
  return {ok == 50, std::to_string(ok) + "/50 triples (" + std::to_string(perms) + " permutation bases)"};
}

// Random inputs for the generic construction.
struct FactoryInputs {
  MobiusMap pre, post;
  RatFunc h;
};

MobiusMap circle_preserving(gen::Rng& rng, const Field& f) {
  for (;;) {
    const Elt a = gen::element(rng, f), b = gen::element(rng, f);
    const MobiusMap m{a, b, f.frobenius_q(b), f.frobenius_q(a)};
    if (!determinant(f, m).is_zero()) return m;
  }
}

// t -> (t + z)/(t + z^q) sends P^1(F_q) onto the circle for z outside F_q.
MobiusMap line_to_circle(gen::Rng& rng, const Field& f) {
  Elt z;
  do {
    z = gen::element(rng, f);
  } while (f.in_subfield(z));
  return {kOne, z, kOne, f.frobenius_q(z)};
}

MobiusMap adjugate(const MobiusMap& m) { return {m.d, m.b, m.c, m.a}; }

MobiusMap subfield_mobius(gen::Rng& rng, const Field& f) {
  const auto sub = f.enumerate(Domain::subfield);
  for (;;) {
    const MobiusMap m{sub[gen::uniform(rng, 0, sub.size() - 1)], sub[gen::uniform(rng, 0, sub.size() - 1)],
                      sub[gen::uniform(rng, 0, sub.size() - 1)], sub[gen::uniform(rng, 0, sub.size() - 1)]};
    if (!determinant(f, m).is_zero()) return m;
  }
}

RatFunc power_unit(gen::Rng& rng, std::int64_t modulus, std::int64_t max_exp) {
  for (;;) {
    const auto n = static_cast<std::int64_t>(gen::uniform(rng, 1, static_cast<std::uint64_t>(max_exp)));
    if (std::gcd(n, modulus) == 1) return RatFunc::power(gen::uniform(rng, 0, 1) ? n : -n);
  }
}

FactoryInputs random_factory_inputs(gen::Rng& rng, const Field& f) {
  const auto q = static_cast<std::int64_t>(f.q());
  const bool via_line = gen::uniform(rng, 0, 1) == 1;
  const bool use_rho = gen::uniform(rng, 0, 2) == 0;
  FactoryInputs in;
  if (via_line) {
    const bool rho_ok = f.k() % 2 == 1;
    in.pre = use_rho && rho_ok ? mobius_rho(f) : adjugate(line_to_circle(rng, f));
    in.post = use_rho && rho_ok ? mobius_rho(f) : line_to_circle(rng, f);
    in.h = gen::uniform(rng, 0, 1) ? RatFunc::from_mobius(f, subfield_mobius(rng, f))
                                   : power_unit(rng, std::max<std::int64_t>(q - 1, 1), q);
  } else {
    const bool rho_ok = f.k() % 2 == 0;
    in.pre = use_rho && rho_ok ? mobius_rho(f) : circle_preserving(rng, f);
    in.post = use_rho && rho_ok ? mobius_rho(f) : circle_preserving(rng, f);
    in.h = gen::uniform(rng, 0, 1) ? RatFunc::from_mobius(f, circle_preserving(rng, f)) : power_unit(rng, q + 1, q);
  }
  return in;
}

Outcome factory_closure() {
  gen::Rng rng(1010);
  int runs = 0, ok = 0;
  std::string first_error;
  for (int k = 1; k <= 4; ++k) {
    const Field f(k);
    for (int i = 0; i < 20; ++i) {
      const FactoryInputs in = random_factory_inputs(rng, f);
      ++runs;
      try {
        const FactoryOutput out = factory_remark(f, in.h, in.pre, in.post);
        if (criterion_lemma1(f, out.wrapped) && brute_force_is_permutation(f, out.poly)) ++ok;
      } catch (const Error& e) {
        if (first_error.empty()) first_error = "k=" + std::to_string(k) + ": " + e.what();
      }
    }
  }
  std::string detail = std::to_string(ok) + "/" + std::to_string(runs) + " emitted permutations";
  if (!first_error.empty()) detail += "; first error: " + first_error;
  return {ok == runs, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"trinomial soundness, k = 2..6", trinomial_soundness},
      {"unit-circle criterion vs brute force", criterion_biconditional},
      {"quotient rewrite fidelity", rewrite_fidelity},
      {"rho parity behaviour, k = 1..8", rho_parity},
      {"rho-conjugation identity", conjugation_identity},
      {"X + X^{1+r(q-1)} + X^{1+s(q-1)} correspondence", lh_correspondence},
      {"2^s + 2^t family correspondence", wydm_correspondence},
      {"comparison families vs brute force", family_predictions},
      {"multiplicative equivalence properties", equivalence_properties},
      {"generic construction closure", factory_closure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
