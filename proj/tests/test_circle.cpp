#include <doctest.h>

#include <set>

#include "muperm/circle.hpp"
#include "support.hpp"

using namespace muperm;

namespace {

std::set<std::uint32_t> finite_bits(const PointSet& s) {
  std::set<std::uint32_t> out;
  for (const ProjValue& v : s.points) {
    if (!v.is_infinity()) out.insert(v.value().bits);
  }
  return out;
}

}  // namespace

TEST_CASE("unit circle matches the filtered field") {
  const Field f(2);
  const Elt g = f.generator();
  const PointSet c = unit_circle(f);
  CHECK(c.kind == SetKind::unit_circle);
  CHECK(c.points == std::vector<ProjValue>{kOne, f.pow_u(g, 3), f.pow_u(g, 6), f.pow_u(g, 9), f.pow_u(g, 12)});
  for (int k = 1; k <= 6; ++k) {
    const Field fk(k);
    const auto want = oracle::unit_circle(k, fk.modulus());
    const PointSet ck = unit_circle(fk);
    CHECK(ck.size() == fk.q() + 1);
    CHECK(finite_bits(ck) == std::set<std::uint32_t>(want.begin(), want.end()));
    for (const Elt x : fk.enumerate(Domain::full_field)) {
      CHECK(in_unit_circle(fk, x) == ck.contains(fk, x));
    }
    CHECK_FALSE(ck.contains(fk, ProjValue::infinity()));
  }
}

TEST_CASE("projective lines") {
  for (int k = 1; k <= 4; ++k) {
    const Field f(k);
    const PointSet line = proj_line(f);
    CHECK(line.size() == f.q() + 1);
    CHECK(line.points.back().is_infinity());
    CHECK(line.contains(f, ProjValue::infinity()));
    for (const ProjValue& v : line.points) {
      if (!v.is_infinity()) CHECK(f.in_subfield(v.value()));
    }
    const PointSet full = proj_line_full(f);
    CHECK(full.size() == f.size() + 1);
    CHECK(set_kind_name(line.kind) != std::string(set_kind_name(full.kind)));
  }
}

TEST_CASE("identity permutes both sets; size mismatch is not a bijection") {
  const Field f(3);
  const PointMap id = [](ProjValue v) { return v; };
  CHECK(is_perm_on(f, id, unit_circle(f)));
  CHECK(is_perm_on(f, id, proj_line(f)));
  CHECK(is_perm_on(f, RatFunc(), unit_circle(f)));
  CHECK_FALSE(maps_bijectively(f, id, unit_circle(f), proj_line(f)));
  CHECK_FALSE(maps_bijectively(f, id, unit_circle(f), proj_line_full(f)));
  CHECK_FALSE(is_perm_on(f, RatFunc::constant(kOne), unit_circle(f)));
}

TEST_CASE("rho and the parity of k") {
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const Field f(k);
    const MobiusMap rho = mobius_rho(f);
    const PointSet c = unit_circle(f), l = proj_line(f);
    if (k % 2 == 0) {
      CHECK(maps_bijectively(f, rho, c, c));
      CHECK_FALSE(maps_bijectively(f, rho, c, l));
    } else {
      CHECK(maps_bijectively(f, rho, c, l));
      CHECK(maps_bijectively(f, rho, l, c));
      CHECK_FALSE(maps_bijectively(f, rho, c, c));
    }
  }
}

TEST_CASE("the trinomial quotient for (1, 2) permutes mu_5") {
  const Field f(2);
  const RatFunc g = RatFunc::make(f, SparsePoly::from_exponents({6, 2, 0}), SparsePoly::from_exponents({6, 4, 0}));
  CHECK(is_perm_on(f, g, unit_circle(f)));
  // Same check by explicit evaluation at the five points.
  std::set<std::uint32_t> image;
  for (std::uint32_t x : oracle::unit_circle(2, f.modulus())) {
    auto num = oracle::eval(SparsePoly::from_exponents({6, 2, 0}), x, f.modulus());
    auto den = oracle::eval(SparsePoly::from_exponents({6, 4, 0}), x, f.modulus());
    REQUIRE(den != 0);
    const Elt v = f.div(Elt{num}, Elt{den});
    CHECK(in_unit_circle(f, v));
    image.insert(v.bits);
  }
  CHECK(image.size() == 5);
}

TEST_CASE("power maps on the circle") {
  const Field f(3);
  const PointSet c = unit_circle(f);
  for (std::int64_t n = 1; n <= 20; ++n) {
    CHECK(is_perm_on(f, RatFunc::power(n), c) == (std::gcd<std::int64_t>(n, 9) == 1));
    CHECK(is_perm_on(f, RatFunc::power(-n), c) == (std::gcd<std::int64_t>(n, 9) == 1));
  }
}
