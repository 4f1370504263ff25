#include "muperm/gf.hpp"

#include <cstdio>

#include "muperm/error.hpp"
#include "muperm/numtheory.hpp"

namespace muperm {

namespace {

constexpr int kTableMaxDegree = 16;

// Product of a and b in F_2[x]/(poly), deg poly = degree.
std::uint64_t clmul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t poly, int degree) {
  std::uint64_t r = 0;
  const std::uint64_t top = std::uint64_t{1} << degree;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= poly;
  }
  return r;
}

std::uint64_t powx_mod(std::uint64_t e, std::uint64_t poly, int degree) {
  std::uint64_t base = degree == 1 ? (2 ^ poly) : 2;  // x mod poly
  std::uint64_t acc = 1;
  while (e != 0) {
    if (e & 1) acc = clmul_mod(acc, base, poly, degree);
    base = clmul_mod(base, base, poly, degree);
    e >>= 1;
  }
  return acc;
}

}  // namespace

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parameter: return "parameter";
    case Errc::domain: return "domain";
    case Errc::not_wrappable: return "not-wrappable";
    case Errc::rewrite_invalid: return "rewrite-invalid";
    case Errc::not_expressible: return "not-expressible";
    case Errc::invalid_factory_input: return "invalid-factory-input";
    case Errc::existence_violation: return "existence-violation";
    case Errc::resource: return "resource";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

std::int64_t pow2_mod(std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t base = 2 % m;
  std::int64_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return acc;
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_primitive_poly(std::uint32_t poly, int degree) {
  if (degree < 1 || degree > 2 * kMaxK) return false;
  if ((poly >> degree) != 1) return false;
  if ((poly & 1) == 0) return false;
  const std::uint64_t order = (std::uint64_t{1} << degree) - 1;
  if (powx_mod(order, poly, degree) != 1) return false;
  for (std::uint64_t p : prime_factors(order)) {
    if (powx_mod(order / p, poly, degree) == 1) return false;
  }
  return true;
}

std::uint32_t smallest_primitive_poly(int degree) {
  if (degree < 1 || degree > 2 * kMaxK) {
    throw Error(Errc::parameter, "primitive polynomial degree out of range");
  }
  const std::uint32_t lo = std::uint32_t{1} << degree;
  for (std::uint32_t p = lo; p < 2 * lo; ++p) {
    if (is_primitive_poly(p, degree)) return p;
  }
  throw Error(Errc::existence_violation, "no primitive polynomial found");
}

Field::Field(int k, OmegaChoice omega) : k_(k), omega_choice_(omega) {
  if (k < 1 || k > kMaxK) {
    throw Error(Errc::parameter, "field parameter k must lie in [1, 12], got " + std::to_string(k));
  }
  modulus_ = smallest_primitive_poly(2 * k);
  if (2 * k <= kTableMaxDegree) {
    auto t = std::make_shared<Tables>();
    const std::uint64_t n = size();
    t->log.assign(n, 0);
    t->antilog.assign(2 * order(), 0);
    std::uint64_t b = 1;
    for (std::uint64_t i = 0; i < order(); ++i) {
      t->antilog[i] = static_cast<std::uint32_t>(b);
      t->antilog[i + order()] = static_cast<std::uint32_t>(b);
      t->log[b] = static_cast<std::uint32_t>(i);
      b <<= 1;
      if (b & n) b ^= modulus_;
    }
    tables_ = std::move(t);
  }
  const std::int64_t third = static_cast<std::int64_t>(order() / 3);
  omega_ = exp(omega == OmegaChoice::canonical ? third : 2 * third);
}

Elt Field::mul_slow(Elt a, Elt b) const noexcept {
  return Elt{static_cast<std::uint32_t>(clmul_mod(a.bits, b.bits, modulus_, 2 * k_))};
}

Elt Field::mul(Elt a, Elt b) const noexcept {
  if (a.is_zero() || b.is_zero()) return kZero;
  if (tables_) {
    return Elt{tables_->antilog[tables_->log[a.bits] + tables_->log[b.bits]]};
  }
  return mul_slow(a, b);
}

Elt Field::inv(Elt a) const {
  if (a.is_zero()) throw Error(Errc::domain, "inversion of zero");
  if (tables_) return Elt{tables_->antilog[(order() - tables_->log[a.bits]) % order()]};
  return pow_u(a, order() - 1);
}

Elt Field::div(Elt a, Elt b) const { return mul(a, inv(b)); }

Elt Field::pow_u(Elt a, std::uint64_t e) const {
  if (a.is_zero()) return e == 0 ? kOne : kZero;
  e %= order();
  if (tables_) {
    const std::uint64_t l = (static_cast<unsigned __int128>(tables_->log[a.bits]) * e) % order();
    return Elt{tables_->antilog[l]};
  }
  Elt acc = kOne;
  while (e != 0) {
    if (e & 1) acc = mul_slow(acc, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return acc;
}

Elt Field::pow(Elt a, std::int64_t e) const {
  if (e >= 0) return pow_u(a, static_cast<std::uint64_t>(e));
  if (a.is_zero()) throw Error(Errc::domain, "negative power of zero");
  const auto m = static_cast<std::int64_t>(order());
  return pow_u(a, static_cast<std::uint64_t>(mod_floor(e, m)));
}

Elt Field::frobenius_q(Elt a) const noexcept {
  for (int i = 0; i < k_; ++i) a = mul(a, a);
  return a;
}

Elt Field::exp(std::int64_t i) const {
  const auto m = static_cast<std::int64_t>(order());
  const std::int64_t e = mod_floor(i, m);
  if (tables_) return Elt{tables_->antilog[static_cast<std::size_t>(e)]};
  return pow_u(generator(), static_cast<std::uint64_t>(e));
}

std::uint64_t Field::log(Elt a) const {
  if (a.is_zero() || !contains(a)) throw Error(Errc::domain, "logarithm of zero");
  if (tables_) return tables_->log[a.bits];
  // Linear scan; only reached for 2k > 16.
  Elt cur = kOne;
  for (std::uint64_t i = 0; i < order(); ++i) {
    if (cur == a) return i;
    cur = mul_slow(cur, generator());
  }
  throw Error(Errc::domain, "element outside the field");
}

std::vector<Elt> Field::enumerate(Domain which) const {
  std::vector<Elt> out;
  out.push_back(kZero);
  if (which == Domain::full_field) {
    out.reserve(size());
    Elt cur = kOne;
    for (std::uint64_t i = 0; i < order(); ++i) {
      out.push_back(cur);
      cur = mul(cur, generator());
    }
  } else {
    out.reserve(q());
    const Elt step = pow_u(generator(), q() + 1);
    Elt cur = kOne;
    for (std::uint64_t i = 0; i + 1 < q(); ++i) {
      out.push_back(cur);
      cur = mul(cur, step);
    }
  }
  return out;
}

std::string to_hex(Elt a) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%x", a.bits);
  return buf;
}

Elt elt_from_hex(const Field& field, std::string_view hex) {
  if (hex.empty() || hex.size() > 8) throw Error(Errc::parse, "bad element hex string");
  std::uint32_t v = 0;
  for (char c : hex) {
    std::uint32_t d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw Error(Errc::parse, "bad hex digit in element '" + std::string(hex) + "'");
    v = (v << 4) | d;
  }
  Elt e{v};
  if (!field.contains(e)) throw Error(Errc::parse, "element '" + std::string(hex) + "' outside the field");
  return e;
}

}  // namespace muperm
