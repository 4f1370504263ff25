#include "muperm/framework.hpp"

#include "muperm/error.hpp"
#include "muperm/numtheory.hpp"

namespace muperm {

namespace {

void check_k(int k) {
  if (k < 1 || k > kMaxK) throw Error(Errc::parameter, "k must lie in [1, 12], got " + std::to_string(k));
}

std::int64_t field_modulus(int k) { return (std::int64_t{1} << (2 * k)) - 1; }

// v^e on the projective line for a nonzero integer exponent given as a
// residue mod q^2-1 plus its sign.
ProjValue proj_pow(const Field& f, ProjValue v, std::uint64_t residue, bool negative) {
  if (v.is_infinity()) return negative ? ProjValue(kZero) : ProjValue::infinity();
  if (v.value().is_zero()) return negative ? ProjValue::infinity() : ProjValue(kZero);
  const Elt x = f.pow_u(v.value(), residue);
  return negative ? f.inv(x) : x;
}

}  // namespace

TrinomialConstants trinomial_constants(const TrinomialParams& p) {
  check_k(p.k);
  if (p.ell < 1 || p.m < 1) throw Error(Errc::parameter, "ell and m must be positive");
  if (p.ell == p.m) throw Error(Errc::parameter, "ell and m must differ");
  const std::int64_t mod = field_modulus(p.k);
  return {std::int64_t{1} << p.k, mod, pow2_mod(p.ell, mod), pow2_mod(p.m, mod)};
}

Thm1Exponents thm1_exponents(const TrinomialParams& p) {
  const auto c = trinomial_constants(p);
  const std::int64_t n = c.modulus;
  const std::int64_t q1 = c.q + 1;
  const std::int64_t u = mod_floor(p.u, n);
  const std::int64_t d1 = c.big_q - c.big_r + mul_mod(u, q1, n);
  const std::int64_t d2 = c.big_q + c.big_r + mul_mod(u - c.big_r, q1, n);
  const std::int64_t d3 = -(c.big_q + c.big_r) + mul_mod(u + c.big_q, q1, n);
  return {static_cast<std::uint64_t>(positive_rep(d1, n)), static_cast<std::uint64_t>(positive_rep(d2, n)),
          static_cast<std::uint64_t>(positive_rep(d3, n))};
}

Thm1Result thm1_generate(const TrinomialParams& p) {
  Thm1Result res;
  res.params = p;
  res.exps = thm1_exponents(p);
  res.accepted = gcd64(static_cast<std::int64_t>(res.exps.d1), field_modulus(p.k)) == 1;
  if (!res.accepted) return res;
  res.poly = SparsePoly::from_exponents({res.exps.d1, res.exps.d2, res.exps.d3});
  res.degenerate = res.poly.size() < 3;
  return res;
}

bool Thm1ProofCheck::all() const noexcept {
  return exponent_relations && d2_coprime && q_minus_r_coprime && wrapped_matches && a_at_one && cancellation &&
         no_roots && quotient_matches && conjugation_matches && branch_ok && g_permutes;
}

Thm1ProofCheck thm1_proof_check(const Field& f, const TrinomialParams& p) {
  if (f.k() != p.k) throw Error(Errc::parameter, "field does not match trinomial parameters");
  const Thm1Result gen = thm1_generate(p);
  if (!gen.accepted) throw Error(Errc::parameter, "proof check requires gcd(d1, q^2-1) = 1");
  const auto c = trinomial_constants(p);
  const std::int64_t n = c.modulus, q = c.q, big_q = c.big_q, big_r = c.big_r;
  const auto d1 = static_cast<std::int64_t>(gen.exps.d1);
  const auto d2 = static_cast<std::int64_t>(gen.exps.d2);
  const auto d3 = static_cast<std::int64_t>(gen.exps.d3);

  Thm1ProofCheck out;
  out.exponent_relations = mod_floor(d1 - d2 - mul_mod(big_r, q - 1, n), n) == 0 &&
                           mod_floor(d3 - d2 - mul_mod(big_q + big_r, q - 1, n), n) == 0 &&
                           (q == 2 || (mod_floor(d1 - d2, q - 1) == 0 && mod_floor(d1 - d3, q - 1) == 0));
  out.d2_coprime = gcd64(d2, q - 1) == 1;
  out.q_minus_r_coprime = gcd64(big_q - big_r, q + 1) == 1;

  const auto qr = static_cast<std::uint64_t>(mod_floor(big_q + big_r, n));
  const auto rr = static_cast<std::uint64_t>(big_r);
  const auto qq = static_cast<std::uint64_t>(big_q);
  const SparsePoly a = SparsePoly::from_exponents({rr, 0, qr});
  out.wrapped_matches = reconstruct(f, WrappedForm{d2, a}) == gen.poly;
  out.a_at_one = eval(f, a, kOne) == kOne;

  const PointSet circle = unit_circle(f);
  const MobiusMap rho = mobius_rho(f);
  // Exponent R -+ Q as magnitude and sign; the sign decides the values at 0 and infinity.
  const bool same_parity = (p.ell % 2) == (p.m % 2);
  const bool conj_negative = same_parity && p.ell > p.m;
  const std::int64_t conj_mag = !same_parity ? big_r + big_q : conj_negative ? big_q - big_r : big_r - big_q;
  const auto conj_residue = static_cast<std::uint64_t>(mod_floor(conj_mag, n));

  auto g_at = [&](Elt x) -> ProjValue {
    const Elt xq = f.pow_u(x, qq), xr = f.pow_u(x, rr), xqr = f.pow_u(x, qr);
    const Elt num = Field::add(Field::add(xqr, xq), kOne);
    const Elt den = Field::add(Field::add(xqr, xr), kOne);
    if (den.is_zero()) return ProjValue::infinity();
    return f.div(num, den);
  };

  out.cancellation = true;
  out.no_roots = true;
  out.quotient_matches = true;
  out.conjugation_matches = true;
  for (const ProjValue& pv : circle.points) {
    const Elt x = pv.value();
    const Elt ax = eval(f, a, x);
    const Elt lhs = Field::add(ax, f.mul(f.pow_u(x, qr), f.frobenius_q(ax)));
    if (lhs != Field::add(f.pow_u(x, rr), f.pow_u(x, qq))) out.cancellation = false;
    if (ax.is_zero()) {
      out.no_roots = false;
      continue;
    }
    // X^{Q+R} A^(q)(1/X) / A(X)
    const Elt twisted = eval(f, coeff_frobenius(f, a), f.inv(x));
    const Elt quotient = f.div(f.mul(f.pow_u(x, qr), twisted), ax);
    const ProjValue g = g_at(x);
    if (g != ProjValue(quotient)) out.quotient_matches = false;
    ProjValue lhs4 = p.m % 2 == 0 ? g : proj_pow(f, g, 1, true);
    ProjValue rhs4 = mobius_apply(f, rho, proj_pow(f, mobius_apply(f, rho, x), conj_residue, conj_negative));
    if (lhs4 != rhs4) out.conjugation_matches = false;
  }

  auto power_perm = [&](std::uint64_t e, const PointSet& set) {
    return maps_bijectively(f, [&](ProjValue v) { return proj_pow(f, v, e, false); }, set, set);
  };
  const bool k_even = p.k % 2 == 0;
  if (same_parity) {
    out.branch = "same-parity";
    out.branch_ok = k_even && power_perm(conj_residue, circle) && maps_bijectively(f, rho, circle, circle);
  } else if (!k_even) {
    out.branch = "mixed-parity-odd-k";
    const PointSet line = proj_line(f);
    out.branch_ok = power_perm(qr, line) && maps_bijectively(f, rho, circle, line) &&
                    maps_bijectively(f, rho, line, circle);
  } else {
    out.branch = "mixed-parity-even-k";
    out.branch_ok = power_perm(qr, circle) && maps_bijectively(f, rho, circle, circle);
  }
  out.g_permutes = maps_bijectively(f, [&](ProjValue v) { return g_at(v.value()); }, circle, circle);
  return out;
}

// ---------------------------------------------------------------------------

SparsePoly reconstruct(const Field& f, const WrappedForm& w) {
  if (w.r <= 0) throw Error(Errc::parameter, "wrapped form needs a positive r");
  const std::uint64_t step = f.q() - 1;
  std::vector<Term> t;
  t.reserve(w.a.size());
  const auto n = f.order();
  for (const Term& x : w.a.terms()) {
    const std::uint64_t e = (static_cast<std::uint64_t>(w.r) % n + static_cast<unsigned __int128>(x.exp) * step % n) % n;
    t.push_back({e == 0 ? n : e, x.coeff});
  }
  return SparsePoly(std::move(t));
}

WrappedForm factor_as_wrapped(const Field& f, const SparsePoly& poly, std::optional<std::uint64_t> anchor) {
  if (poly.is_zero()) throw Error(Errc::parameter, "cannot wrap the zero polynomial");
  if (poly.low_degree() == 0) throw Error(Errc::parameter, "cannot wrap a polynomial with a constant term");
  const std::uint64_t step = f.q() - 1;
  const std::uint64_t r = anchor.value_or(poly.low_degree());
  if (poly.coeff(r).is_zero()) throw Error(Errc::parameter, "anchor is not an exponent of the polynomial");
  std::vector<Term> a;
  for (const Term& t : poly.terms()) {
    if ((t.exp % step) != (r % step)) {
      throw Error(Errc::not_wrappable, "exponents " + std::to_string(r) + " and " + std::to_string(t.exp) +
                                           " differ mod q-1");
    }
    const std::uint64_t diff = t.exp >= r ? t.exp - r : (t.exp + f.order() - r % f.order()) % f.order();
    a.push_back({diff / step, t.coeff});
  }
  return {static_cast<std::int64_t>(r), SparsePoly(std::move(a))};
}

Elt wrapped_circle_map(const Field& f, const WrappedForm& w, Elt x) {
  return f.mul(f.pow(x, w.r), f.pow_u(eval(f, w.a, x), f.q() - 1));
}

bool criterion_lemma1(const Field& f, const WrappedForm& w) {
  if (w.r <= 0) throw Error(Errc::parameter, "the permutation criterion needs a positive r");
  if (gcd64(w.r, static_cast<std::int64_t>(f.q() - 1)) != 1) return false;
  const PointSet circle = unit_circle(f);
  // A root of A sends a circle point to 0, which is outside the circle.
  return is_perm_on(f, [&](ProjValue v) -> ProjValue { return wrapped_circle_map(f, w, v.value()); }, circle);
}

bool no_roots_on_circle(const Field& f, const SparsePoly& a) {
  for (const ProjValue& v : unit_circle(f).points) {
    if (eval(f, a, v.value()).is_zero()) return false;
  }
  return true;
}

RatFunc rewrite_lemma2(const Field& f, const WrappedForm& w) {
  if (w.a.is_zero() || !no_roots_on_circle(f, w.a)) {
    throw Error(Errc::rewrite_invalid, "A has a root on the unit circle");
  }
  const auto s = static_cast<std::uint64_t>(mod_floor(w.r, static_cast<std::int64_t>(f.q() + 1)));
  return RatFunc::make(f, shift(reversed_twist(f, w.a), s), shift(w.a, w.a.degree()));
}

// ---------------------------------------------------------------------------

Lemma4Sides lemma4_sides(const Field& f, int ell, int m) {
  constexpr int kMaxExp = 12;
  if (ell < 1 || m < 1 || ell == m) throw Error(Errc::parameter, "need positive ell != m");
  if (ell > kMaxExp || m > kMaxExp) throw Error(Errc::resource, "ell and m are limited to 12 for the symbolic check");
  const std::uint64_t big_q = std::uint64_t{1} << ell, big_r = std::uint64_t{1} << m;
  RatFunc g = RatFunc::make(f, SparsePoly::from_exponents({big_q + big_r, big_q, 0}),
                            SparsePoly::from_exponents({big_q + big_r, big_r, 0}));
  RatFunc lhs = m % 2 == 0 ? g : rat_compose(f, RatFunc::power(-1), g);
  const bool same = ell % 2 == m % 2;
  const std::int64_t e = same ? static_cast<std::int64_t>(big_r) - static_cast<std::int64_t>(big_q)
                              : static_cast<std::int64_t>(big_r + big_q);
  const RatFunc rho = RatFunc::from_mobius(f, mobius_rho(f));
  RatFunc rhs = rat_compose(f, rho, rat_compose(f, RatFunc::power(e), rho));
  return {std::move(lhs), std::move(rhs)};
}

bool lemma4_check(const Field& f, int ell, int m) {
  const Lemma4Sides sides = lemma4_sides(f, ell, m);
  return rat_equal(f, sides.lhs, sides.rhs);
}

// ---------------------------------------------------------------------------

std::int64_t select_exponent(std::int64_t s, std::int64_t q) {
  if (q < 2 || (q & (q - 1)) != 0) throw Error(Errc::parameter, "q must be a power of two");
  const std::int64_t base = mod_floor(s, q + 1);
  for (std::int64_t j = 0; j < q; ++j) {
    const std::int64_t r = base + j * (q + 1);
    if (r >= 1 && gcd64(r, q - 1) == 1) return r;
  }
  throw Error(Errc::existence_violation, "no exponent r = s mod (q+1) coprime to q-1");
}

QuotientForm express_quotient_form(const Field& f, const RatFunc& g) {
  SparsePoly a = g.den();
  const SparsePoly rev = reversed_twist(f, a);
  const SparsePoly& num = g.num();
  if (num.is_zero()) throw Error(Errc::not_expressible, "zero numerator");
  if (num.low_degree() < rev.low_degree()) {
    throw Error(Errc::not_expressible, "numerator is not a monomial multiple of the reversed denominator");
  }
  const std::uint64_t e = num.low_degree() - rev.low_degree();
  const Elt lambda = f.div(num.terms().front().coeff, rev.terms().front().coeff);
  if (scale(f, shift(rev, e), lambda) != num) {
    throw Error(Errc::not_expressible, "numerator is not a monomial multiple of the reversed denominator");
  }
  if (lambda != kOne) {
    if (!in_unit_circle(f, lambda)) throw Error(Errc::not_expressible, "scalar lies outside the unit circle");
    // c^{q-1} = lambda; lambda in mu_{q+1} makes log(lambda) a multiple of q-1.
    const Elt c = f.exp(static_cast<std::int64_t>(f.log(lambda) / (f.q() - 1)));
    a = scale(f, a, c);
  }
  if (!no_roots_on_circle(f, a)) throw Error(Errc::not_expressible, "denominator vanishes on the unit circle");
  const auto q1 = static_cast<std::int64_t>(f.q() + 1);
  const std::int64_t s = mod_floor(static_cast<std::int64_t>((e + a.degree()) % static_cast<std::uint64_t>(q1)), q1);
  return {s, std::move(a)};
}

FactoryOutput factory_remark(const Field& f, const RatFunc& h, const MobiusMap& pre, const MobiusMap& post) {
  try {
    validate(f, pre);
    validate(f, post);
  } catch (const Error& e) {
    throw Error(Errc::invalid_factory_input, e.what());
  }
  const PointSet circle = unit_circle(f);
  const PointSet line = proj_line(f);
  const PointSet* middle = nullptr;
  if (maps_bijectively(f, pre, circle, line)) middle = &line;
  else if (maps_bijectively(f, pre, circle, circle)) middle = &circle;
  else throw Error(Errc::invalid_factory_input, "pre-map does not send the unit circle onto P^1(F_q) or itself");
  if (!is_perm_on(f, h, *middle)) {
    throw Error(Errc::invalid_factory_input, std::string("h does not permute ") + set_kind_name(middle->kind));
  }
  if (!maps_bijectively(f, post, *middle, circle)) {
    throw Error(Errc::invalid_factory_input, "post-map does not send the middle set onto the unit circle");
  }

  FactoryOutput out;
  out.middle = middle->kind;
  const RatFunc pre_rf = RatFunc::from_mobius(f, pre), post_rf = RatFunc::from_mobius(f, post);
  out.g = rat_compose(f, post_rf, rat_compose(f, h, pre_rf));
  const QuotientForm qf = express_quotient_form(f, out.g);
  out.s = qf.s;
  out.wrapped = {select_exponent(qf.s, static_cast<std::int64_t>(f.q())), qf.a};
  out.poly = reconstruct(f, out.wrapped);
  if (!criterion_lemma1(f, out.wrapped)) {
    throw Error(Errc::existence_violation, "constructed polynomial fails the unit-circle criterion");
  }
  return out;
}

// ---------------------------------------------------------------------------

void validate(const WydmParams& p) {
  check_k(p.k);
  if (p.s < 1 || p.s % 2 == 0) throw Error(Errc::parameter, "s must be a positive odd integer");
  if (p.t < 1 || p.t % 2 != 0) throw Error(Errc::parameter, "t must be a positive even integer");
  if (p.r < 1) throw Error(Errc::parameter, "r must be positive");
  const std::int64_t q1 = (std::int64_t{1} << p.k) + 1;
  if (mod_floor(p.r - pow2_mod(p.s, q1) - pow2_mod(p.t, q1), q1) != 0) {
    throw Error(Errc::parameter, "r must be congruent to 2^s + 2^t mod q+1");
  }
}

SparsePoly wydm_generate(const WydmParams& p) {
  validate(p);
  const std::int64_t q = std::int64_t{1} << p.k;
  const std::int64_t n = field_modulus(p.k);
  const std::int64_t st = mod_floor(pow2_mod(p.s, q + 1) + pow2_mod(p.t, q + 1), q + 1);
  const std::int64_t t = pow2_mod(p.t, q + 1);
  auto rep = [&](std::int64_t e) { return static_cast<std::uint64_t>(positive_rep(e, n)); };
  return SparsePoly::from_exponents(
      {rep(p.r + mul_mod(st, q - 1, n)), rep(p.r + mul_mod(t, q - 1, n)), rep(p.r)});
}

bool wydm_predicts_permutation(const WydmParams& p) {
  return gcd64(p.r, (std::int64_t{1} << p.k) - 1) == 1;
}

std::pair<LhParams, SparsePoly> lh_generate(int k, std::int64_t n) {
  check_k(k);
  if (n < 1) throw Error(Errc::parameter, "n must be positive");
  const std::int64_t q = std::int64_t{1} << k;
  const std::int64_t q1 = q + 1;
  const std::int64_t big_t = pow2_mod(n, q1);
  const auto inv = inverse_mod(big_t - 1, q1);
  if (!inv) throw Error(Errc::parameter, "gcd(2^n - 1, q + 1) != 1");
  LhParams lp{k, n, positive_rep(mul_mod(big_t, *inv, q1), q1), positive_rep(-*inv, q1)};
  const std::int64_t mod = field_modulus(k);
  auto rep = [&](std::int64_t e) { return static_cast<std::uint64_t>(positive_rep(e, mod)); };
  SparsePoly g = SparsePoly::from_exponents({1, rep(1 + mul_mod(lp.r, q - 1, mod)), rep(1 + mul_mod(lp.s, q - 1, mod))});
  return {lp, std::move(g)};
}

}  // namespace muperm
