#pragma once

// The unit circle mu_{q+1} inside F_{q^2}, the projective line P^1(F_q),
// and bijection tests of maps between these sets.

#include <functional>
#include <vector>

#include "muperm/poly.hpp"

namespace muperm {

enum class SetKind {
  unit_circle,      // mu_{q+1}: x^(q+1) = 1
  proj_line,        // P^1(F_q) = F_q + {infinity}
  proj_line_full,   // P^1(F_{q^2})
};

const char* set_kind_name(SetKind kind) noexcept;

/// A materialized point set; `points` are in deterministic order.
struct PointSet {
  SetKind kind;
  std::vector<ProjValue> points;

  std::size_t size() const noexcept { return points.size(); }
  bool contains(const Field& f, ProjValue v) const;
};

/// g^{(q-1) j} for j = 0..q.
PointSet unit_circle(const Field& f);
/// 0, then ascending powers of g^(q+1), then infinity.
PointSet proj_line(const Field& f);
PointSet proj_line_full(const Field& f);

bool in_unit_circle(const Field& f, Elt x);

using PointMap = std::function<ProjValue(ProjValue)>;

/// True iff `map` sends `from` injectively onto `to`.
bool maps_bijectively(const Field& f, const PointMap& map, const PointSet& from, const PointSet& to);
bool maps_bijectively(const Field& f, const MobiusMap& mu, const PointSet& from, const PointSet& to);
bool is_perm_on(const Field& f, const RatFunc& map, const PointSet& set);
bool is_perm_on(const Field& f, const PointMap& map, const PointSet& set);

}  // namespace muperm
