#include "muperm/poly.hpp"

#include <algorithm>

#include "muperm/error.hpp"
#include "muperm/numtheory.hpp"

namespace muperm {

SparsePoly::SparsePoly(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  for (const Term& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff = Field::add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(t);
    }
  }
}

SparsePoly SparsePoly::monomial(std::uint64_t exp, Elt coeff) { return SparsePoly({Term{exp, coeff}}); }

SparsePoly SparsePoly::from_exponents(std::initializer_list<std::uint64_t> exps) {
  return from_exponents(std::vector<std::uint64_t>(exps));
}

SparsePoly SparsePoly::from_exponents(const std::vector<std::uint64_t>& exps) {
  std::vector<Term> t;
  t.reserve(exps.size());
  for (auto e : exps) t.push_back({e, kOne});
  return SparsePoly(std::move(t));
}

Elt SparsePoly::coeff(std::uint64_t exp) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::uint64_t e) { return t.exp < e; });
  return it != terms_.end() && it->exp == exp ? it->coeff : kZero;
}

std::vector<std::uint64_t> SparsePoly::support() const {
  std::vector<std::uint64_t> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t.exp);
  return out;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  std::vector<Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return SparsePoly(std::move(t));
}

SparsePoly mul(const Field& f, const SparsePoly& a, const SparsePoly& b) {
  std::vector<Term> t;
  t.reserve(a.size() * b.size());
  for (const Term& x : a.terms()) {
    for (const Term& y : b.terms()) t.push_back({x.exp + y.exp, f.mul(x.coeff, y.coeff)});
  }
  return SparsePoly(std::move(t));
}

SparsePoly scale(const Field& f, const SparsePoly& a, Elt c) {
  std::vector<Term> t = a.terms();
  for (Term& x : t) x.coeff = f.mul(x.coeff, c);
  return SparsePoly(std::move(t));
}

SparsePoly shift(const SparsePoly& a, std::uint64_t s) {
  std::vector<Term> t = a.terms();
  for (Term& x : t) x.exp += s;
  return SparsePoly(std::move(t));
}

Elt eval(const Field& f, const SparsePoly& p, Elt x) {
  Elt acc = kZero;
  if (x.is_zero()) return p.coeff(0);
  for (const Term& t : p.terms()) acc = Field::add(acc, f.mul(t.coeff, f.pow_u(x, t.exp)));
  return acc;
}

SparsePoly reduce_mod_field(const Field& f, const SparsePoly& p) {
  const std::uint64_t m = f.order();
  std::vector<Term> t = p.terms();
  for (Term& x : t) {
    if (x.exp > 0) x.exp = (x.exp - 1) % m + 1;
  }
  return SparsePoly(std::move(t));
}

SparsePoly coeff_frobenius(const Field& f, const SparsePoly& p) {
  std::vector<Term> t = p.terms();
  for (Term& x : t) x.coeff = f.frobenius_q(x.coeff);
  return SparsePoly(std::move(t));
}

SparsePoly reversed_twist(const Field& f, const SparsePoly& a) {
  const std::uint64_t d = a.degree();
  std::vector<Term> t;
  t.reserve(a.size());
  for (const Term& x : a.terms()) t.push_back({d - x.exp, f.frobenius_q(x.coeff)});
  return SparsePoly(std::move(t));
}

DensePoly to_dense(const SparsePoly& p) {
  if (p.degree() > kMaxDenseDegree) {
    throw Error(Errc::resource, "polynomial degree " + std::to_string(p.degree()) + " too large for dense form");
  }
  DensePoly out;
  if (p.is_zero()) return out;
  out.assign(p.degree() + 1, kZero);
  for (const Term& t : p.terms()) out[t.exp] = t.coeff;
  return out;
}

SparsePoly from_dense(const DensePoly& p) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero()) t.push_back({i, p[i]});
  }
  return SparsePoly(std::move(t));
}

namespace dense {

void trim(DensePoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

DensePoly mul(const Field& f, const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly out(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = Field::add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  trim(out);
  return out;
}

DensePoly add(const DensePoly& a, const DensePoly& b) {
  DensePoly out = a.size() >= b.size() ? a : b;
  const DensePoly& other = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < other.size(); ++i) out[i] = Field::add(out[i], other[i]);
  trim(out);
  return out;
}

DensePoly scale(const Field& f, const DensePoly& a, Elt c) {
  DensePoly out = a;
  for (Elt& x : out) x = f.mul(x, c);
  trim(out);
  return out;
}

void divmod(const Field& f, const DensePoly& a, const DensePoly& b, DensePoly& quot, DensePoly& rem) {
  if (b.empty()) throw Error(Errc::domain, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, kZero);
  const Elt lead_inv = f.inv(b.back());
  while (rem.size() >= b.size()) {
    const std::size_t s = rem.size() - b.size();
    const Elt c = f.mul(rem.back(), lead_inv);
    quot[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[s + j] = Field::add(rem[s + j], f.mul(c, b[j]));
    trim(rem);
  }
  trim(quot);
}

DensePoly gcd(const Field& f, DensePoly a, DensePoly b) {
  trim(a);
  trim(b);
  if (a.empty() && b.empty()) throw Error(Errc::domain, "gcd of two zero polynomials");
  DensePoly quot, rem;
  while (!b.empty()) {
    divmod(f, a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return scale(f, a, f.inv(a.back()));
}

DensePoly pow(const Field& f, DensePoly base, std::uint64_t e) {
  DensePoly acc{kOne};
  while (e != 0) {
    if (e & 1) acc = mul(f, acc, base);
    e >>= 1;
    if (e != 0) base = mul(f, base, base);
  }
  return acc;
}

Elt eval(const Field& f, const DensePoly& p, Elt x) {
  Elt acc = kZero;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = Field::add(f.mul(acc, x), *it);
  return acc;
}

}  // namespace dense

SparsePoly poly_gcd(const Field& f, const SparsePoly& a, const SparsePoly& b) {
  return from_dense(dense::gcd(f, to_dense(a), to_dense(b)));
}

// Moebius maps

Elt determinant(const Field& f, const MobiusMap& m) {
  return Field::add(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

void validate(const Field& f, const MobiusMap& m) {
  if (determinant(f, m).is_zero()) throw Error(Errc::parameter, "Moebius map has zero determinant");
}

MobiusMap mobius_identity() { return {kOne, kZero, kZero, kOne}; }

MobiusMap mobius_rho(const Field& f) { return {kOne, f.omega(), f.omega(), kOne}; }

MobiusMap mobius_compose(const Field& f, const MobiusMap& o, const MobiusMap& i) {
  auto dot = [&](Elt x, Elt y, Elt z, Elt w) { return Field::add(f.mul(x, y), f.mul(z, w)); };
  return {dot(o.a, i.a, o.b, i.c), dot(o.a, i.b, o.b, i.d), dot(o.c, i.a, o.d, i.c), dot(o.c, i.b, o.d, i.d)};
}

bool mobius_equivalent(const Field& f, const MobiusMap& x, const MobiusMap& y) {
  // x ~ y iff all 2x2 minors of the stacked coefficient vectors vanish.
  const Elt xs[4] = {x.a, x.b, x.c, x.d};
  const Elt ys[4] = {y.a, y.b, y.c, y.d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (f.mul(xs[i], ys[j]) != f.mul(xs[j], ys[i])) return false;
    }
  }
  return true;
}

ProjValue mobius_apply(const Field& f, const MobiusMap& m, ProjValue v) {
  if (v.is_infinity()) {
    if (m.c.is_zero()) return ProjValue::infinity();
    return f.div(m.a, m.c);
  }
  const Elt x = v.value();
  const Elt den = Field::add(f.mul(m.c, x), m.d);
  if (den.is_zero()) return ProjValue::infinity();
  return f.div(Field::add(f.mul(m.a, x), m.b), den);
}

// Rational functions

RatFunc::RatFunc() : num_(SparsePoly::monomial(1)), den_(SparsePoly::monomial(0)) {}

RatFunc RatFunc::make(const Field& f, SparsePoly num, SparsePoly den) {
  if (den.is_zero()) throw Error(Errc::domain, "rational function with zero denominator");
  if (num.is_zero()) return RatFunc(SparsePoly(), SparsePoly::monomial(0));
  DensePoly n = to_dense(num), d = to_dense(den);
  DensePoly g = dense::gcd(f, n, d);
  if (g.size() > 1) {
    DensePoly rem;
    dense::divmod(f, DensePoly(n), g, n, rem);
    dense::divmod(f, DensePoly(d), g, d, rem);
  }
  const Elt lc_inv = f.inv(d.back());
  return RatFunc(from_dense(dense::scale(f, n, lc_inv)), from_dense(dense::scale(f, d, lc_inv)));
}

RatFunc RatFunc::constant(Elt c) {
  return RatFunc(c.is_zero() ? SparsePoly() : SparsePoly::monomial(0, c), SparsePoly::monomial(0));
}

RatFunc RatFunc::power(std::int64_t n) {
  if (n >= 0) return RatFunc(SparsePoly::monomial(static_cast<std::uint64_t>(n)), SparsePoly::monomial(0));
  return RatFunc(SparsePoly::monomial(0), SparsePoly::monomial(static_cast<std::uint64_t>(-n)));
}

RatFunc RatFunc::from_mobius(const Field& f, const MobiusMap& m) {
  validate(f, m);
  return make(f, SparsePoly({{1, m.a}, {0, m.b}}), SparsePoly({{1, m.c}, {0, m.d}}));
}

std::uint64_t RatFunc::degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

bool RatFunc::is_constant() const noexcept { return num_.degree() == 0 && den_.degree() == 0; }

ProjValue rat_eval(const Field& f, const RatFunc& r, ProjValue v) {
  if (v.is_infinity()) {
    const std::uint64_t dn = r.num().degree(), dd = r.den().degree();
    if (r.num().is_zero()) return kZero;
    if (dn > dd) return ProjValue::infinity();
    if (dn < dd) return kZero;
    return f.div(r.num().leading_coeff(), r.den().leading_coeff());
  }
  const Elt den = eval(f, r.den(), v.value());
  if (den.is_zero()) return ProjValue::infinity();
  return f.div(eval(f, r.num(), v.value()), den);
}

RatFunc rat_compose(const Field& f, const RatFunc& outer, const RatFunc& inner) {
  if (outer.is_constant()) return outer;
  if (inner.is_constant()) {
    const ProjValue v = rat_eval(f, outer, inner.num().coeff(0));
    if (v.is_infinity()) throw Error(Errc::domain, "composition evaluates outer function at a pole");
    return RatFunc::constant(v.value());
  }
  const std::uint64_t deg = outer.degree();
  const DensePoly a = to_dense(inner.num()), b = to_dense(inner.den());
  // b^deg * outer(a/b), one power product per term of outer.
  auto homogenize = [&](const SparsePoly& p) {
    DensePoly acc;
    for (const Term& t : p.terms()) {
      const DensePoly prod = dense::mul(f, dense::pow(f, a, t.exp), dense::pow(f, b, deg - t.exp));
      acc = dense::add(acc, dense::scale(f, prod, t.coeff));
    }
    return acc;
  };
  return RatFunc::make(f, from_dense(homogenize(outer.num())), from_dense(homogenize(outer.den())));
}

bool rat_equal(const Field& f, const RatFunc& r1, const RatFunc& r2) {
  const DensePoly lhs = dense::mul(f, to_dense(r1.num()), to_dense(r2.den()));
  const DensePoly rhs = dense::mul(f, to_dense(r2.num()), to_dense(r1.den()));
  return lhs == rhs;
}

}  // namespace muperm
