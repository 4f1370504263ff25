#include "muperm/equiv.hpp"

#include <algorithm>

#include "muperm/error.hpp"
#include "muperm/numtheory.hpp"

namespace muperm {

namespace {

std::uint64_t map_exponent(std::uint64_t e, std::uint64_t n, std::uint64_t modulus) {
  if (e == 0) return 0;
  const auto r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(e) * n) % modulus);
  return r == 0 ? modulus : r;
}

bool support_maps_onto(const SparsePoly& lhs, const SparsePoly& rhs, std::uint64_t n, std::uint64_t modulus) {
  std::vector<std::uint64_t> img;
  img.reserve(rhs.size());
  for (const Term& t : rhs.terms()) img.push_back(map_exponent(t.exp, n, modulus));
  std::sort(img.begin(), img.end());
  return img == lhs.support();
}

}  // namespace

void validate(const Field& f, const EquivWitness& w) {
  if (w.alpha.is_zero() || w.beta.is_zero()) throw Error(Errc::parameter, "witness scalars must be nonzero");
  if (!f.contains(w.alpha) || !f.contains(w.beta)) throw Error(Errc::parameter, "witness scalar outside the field");
  if (w.n == 0 || gcd64(static_cast<std::int64_t>(w.n % f.order()), static_cast<std::int64_t>(f.order())) != 1) {
    throw Error(Errc::parameter, "witness exponent must be a unit mod q^2-1");
  }
}

SparsePoly apply_witness(const Field& f, const SparsePoly& g, const EquivWitness& w) {
  validate(f, w);
  std::vector<Term> t;
  t.reserve(g.size());
  for (const Term& x : g.terms()) {
    t.push_back({map_exponent(x.exp, w.n, f.order()), f.mul(w.alpha, f.mul(x.coeff, f.pow_u(w.beta, x.exp)))});
  }
  return reduce_mod_field(f, SparsePoly(std::move(t)));
}

EquivWitness compose(const Field& f, const EquivWitness& first, const EquivWitness& second) {
  validate(f, first);
  validate(f, second);
  const auto m = static_cast<std::int64_t>(f.order());
  return {f.mul(first.alpha, second.alpha), f.mul(second.beta, f.pow_u(first.beta, second.n)),
          static_cast<std::uint64_t>(mul_mod(static_cast<std::int64_t>(first.n % f.order()),
                                             static_cast<std::int64_t>(second.n % f.order()), m))};
}

EquivWitness inverse(const Field& f, const EquivWitness& w) {
  validate(f, w);
  const auto m = static_cast<std::int64_t>(f.order());
  const auto n_inv = *inverse_mod(static_cast<std::int64_t>(w.n % f.order()), m);
  return {f.inv(w.alpha), f.inv(f.pow_u(w.beta, static_cast<std::uint64_t>(n_inv))),
          static_cast<std::uint64_t>(n_inv)};
}

std::vector<std::uint64_t> candidate_exponents(const Field& f, const SparsePoly& lhs_in, const SparsePoly& rhs_in) {
  const SparsePoly lhs = reduce_mod_field(f, lhs_in), rhs = reduce_mod_field(f, rhs_in);
  const auto m = static_cast<std::int64_t>(f.order());
  std::vector<std::uint64_t> out;
  if (lhs.size() != rhs.size()) return out;

  const auto first_pos = std::find_if(rhs.terms().begin(), rhs.terms().end(), [](const Term& t) { return t.exp > 0; });
  std::vector<std::int64_t> raw;
  if (first_pos == rhs.terms().end()) {
    raw.push_back(1);
  } else {
    // Solve n * e0 = e' (mod q^2-1) for each positive target exponent e'.
    const std::int64_t e0 = static_cast<std::int64_t>(first_pos->exp) % m;
    const std::int64_t d = std::gcd(e0, m);
    for (const Term& t : lhs.terms()) {
      if (t.exp == 0) continue;
      const std::int64_t target = static_cast<std::int64_t>(t.exp) % m;
      if (target % d != 0) continue;
      const std::int64_t step = m / d;
      const std::int64_t base =
          step == 1 ? 0 : mul_mod(target / d, *inverse_mod(e0 / d, step), step);
      for (std::int64_t j = 0; j < d; ++j) raw.push_back(base + j * step);
    }
  }
  for (std::int64_t n : raw) {
    if (n <= 0 || n >= m || std::gcd(n, m) != 1) continue;
    if (support_maps_onto(lhs, rhs, static_cast<std::uint64_t>(n), f.order())) {
      out.push_back(static_cast<std::uint64_t>(n));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<EquivWitness> are_equivalent(const Field& f, const SparsePoly& lhs_in, const SparsePoly& rhs_in,
                                           const EquivSearchOptions& opts) {
  const SparsePoly lhs = reduce_mod_field(f, lhs_in), rhs = reduce_mod_field(f, rhs_in);
  if (lhs.size() != rhs.size()) return std::nullopt;
  if (lhs.is_zero()) return identity_witness();

  std::vector<std::uint64_t> ns;
  if (opts.n) {
    validate(f, EquivWitness{kOne, kOne, *opts.n});
    if (support_maps_onto(lhs, rhs, *opts.n % f.order(), f.order())) ns.push_back(*opts.n);
  } else {
    if (f.k() > opts.max_k) {
      throw Error(Errc::parameter, "witness search above k = " + std::to_string(opts.max_k) + " needs a candidate n");
    }
    ns = candidate_exponents(f, lhs, rhs);
  }

  const Term& t0 = rhs.terms().front();
  for (std::uint64_t n : ns) {
    const std::uint64_t target0 = map_exponent(t0.exp, n, f.order());
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      const Elt beta = f.exp(static_cast<std::int64_t>(i));
      const Elt alpha = f.div(lhs.coeff(target0), f.mul(t0.coeff, f.pow_u(beta, t0.exp)));
      const EquivWitness w{alpha, beta, n};
      if (apply_witness(f, rhs, w) == lhs) return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

CorrespondenceRecord sec3_wydm_match(const Field& f, const TrinomialParams& tp) {
  if (f.k() != tp.k) throw Error(Errc::parameter, "field does not match trinomial parameters");
  CorrespondenceRecord rec;
  const Thm1Exponents d = thm1_exponents(tp);
  rec.trinomial = SparsePoly::from_exponents({d.d1, d.d2, d.d3});
  const bool ell_odd = tp.ell % 2 != 0, m_odd = tp.m % 2 != 0;
  if (ell_odd == m_odd) {
    rec.kind = "not-applicable";
    rec.applicable = false;
    return rec;
  }
  const auto mod = static_cast<std::int64_t>(f.order());
  if (ell_odd) {
    rec.kind = "wydm-direct";
    rec.wydm = {tp.k, tp.ell, tp.m, static_cast<std::int64_t>(d.d2)};
    rec.partner = wydm_generate(rec.wydm);
    rec.witness = identity_witness();
  } else {
    rec.kind = "wydm-reciprocal";
    // -r, -r - 2^ell (q-1), -r - (2^ell + 2^m)(q-1) must be d3, d1, d2.
    rec.wydm = {tp.k, tp.m, tp.ell, positive_rep(-static_cast<std::int64_t>(d.d3), mod)};
    rec.partner = wydm_generate(rec.wydm);
    rec.witness = EquivWitness{kOne, kOne, f.order() - 1};
  }
  rec.verified = apply_witness(f, rec.partner, *rec.witness) == rec.trinomial;
  return rec;
}

CorrespondenceRecord sec3_lh_match(const Field& f, const TrinomialParams& tp) {
  if (f.k() != tp.k) throw Error(Errc::parameter, "field does not match trinomial parameters");
  CorrespondenceRecord rec;
  rec.kind = "lh";
  const Thm1Result gen = thm1_generate(tp);
  rec.trinomial = SparsePoly::from_exponents({gen.exps.d1, gen.exps.d2, gen.exps.d3});
  if (!gen.accepted) {
    rec.applicable = false;
    rec.note = "gcd(d1, q^2-1) != 1";
    return rec;
  }
  // Replacing ell by ell + 2k i keeps 2^ell mod q^2-1 and makes Q > R.
  while (tp.ell + 2 * tp.k * rec.lift_i <= tp.m) ++rec.lift_i;
  rec.lifted_ell = tp.ell + 2 * tp.k * rec.lift_i;
  rec.n = rec.lifted_ell - tp.m;
  try {
    auto [lp, g] = lh_generate(tp.k, rec.n);
    rec.lh_r = lp.r;
    rec.lh_s = lp.s;
    rec.partner = std::move(g);
  } catch (const Error& e) {
    rec.note = e.what();
    return rec;
  }
  const auto mod = static_cast<std::int64_t>(f.order());
  const std::int64_t qm1 = static_cast<std::int64_t>(f.q()) - 1;
  const auto v = static_cast<std::int64_t>(gen.exps.d1);
  const std::int64_t big_q = pow2_mod(rec.lifted_ell, mod), big_r = pow2_mod(tp.m, mod);
  rec.congruence_r = mul_mod(mul_mod(rec.lh_r, v, mod), qm1, mod) == mul_mod(big_q, qm1, mod);
  rec.congruence_s = mul_mod(mul_mod(rec.lh_s, v, mod), qm1, mod) == mul_mod(-big_r, qm1, mod);
  rec.witness = EquivWitness{kOne, kOne, static_cast<std::uint64_t>(v)};
  rec.verified = rec.congruence_r && rec.congruence_s && apply_witness(f, rec.partner, *rec.witness) == rec.trinomial;
  return rec;
}

}  // namespace muperm
