#include "muperm/circle.hpp"

namespace muperm {

const char* set_kind_name(SetKind kind) noexcept {
  switch (kind) {
    case SetKind::unit_circle: return "unit_circle";
    case SetKind::proj_line: return "proj_line";
    case SetKind::proj_line_full: return "proj_line_full";
  }
  return "unknown";
}

bool in_unit_circle(const Field& f, Elt x) { return f.pow_u(x, f.q() + 1) == kOne; }

bool PointSet::contains(const Field& f, ProjValue v) const {
  switch (kind) {
    case SetKind::unit_circle: return !v.is_infinity() && in_unit_circle(f, v.value());
    case SetKind::proj_line: return v.is_infinity() || f.in_subfield(v.value());
    case SetKind::proj_line_full: return v.is_infinity() || f.contains(v.value());
  }
  return false;
}

PointSet unit_circle(const Field& f) {
  PointSet s{SetKind::unit_circle, {}};
  s.points.reserve(f.q() + 1);
  const Elt step = f.pow_u(f.generator(), f.q() - 1);
  Elt cur = kOne;
  for (std::uint64_t j = 0; j <= f.q(); ++j) {
    s.points.emplace_back(cur);
    cur = f.mul(cur, step);
  }
  return s;
}

PointSet proj_line(const Field& f) {
  PointSet s{SetKind::proj_line, {}};
  for (Elt x : f.enumerate(Domain::subfield)) s.points.emplace_back(x);
  s.points.push_back(ProjValue::infinity());
  return s;
}

PointSet proj_line_full(const Field& f) {
  PointSet s{SetKind::proj_line_full, {}};
  for (Elt x : f.enumerate(Domain::full_field)) s.points.emplace_back(x);
  s.points.push_back(ProjValue::infinity());
  return s;
}

bool maps_bijectively(const Field& f, const PointMap& map, const PointSet& from, const PointSet& to) {
  if (from.size() != to.size()) return false;
  // Presence bitmap keyed by element bits; slot q^2 is infinity.
  std::vector<bool> seen(f.size() + 1, false);
  for (const ProjValue& v : from.points) {
    const ProjValue w = map(v);
    if (!to.contains(f, w)) return false;
    const std::size_t slot = w.is_infinity() ? f.size() : w.value().bits;
    if (seen[slot]) return false;
    seen[slot] = true;
  }
  return true;
}

bool maps_bijectively(const Field& f, const MobiusMap& mu, const PointSet& from, const PointSet& to) {
  return maps_bijectively(f, [&](ProjValue v) { return mobius_apply(f, mu, v); }, from, to);
}

bool is_perm_on(const Field& f, const RatFunc& map, const PointSet& set) {
  return maps_bijectively(f, [&](ProjValue v) { return rat_eval(f, map, v); }, set, set);
}

bool is_perm_on(const Field& f, const PointMap& map, const PointSet& set) {
  return maps_bijectively(f, map, set, set);
}

}  // namespace muperm
