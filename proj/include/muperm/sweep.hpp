#pragma once

// Brute-force permutation oracle and deterministic parameter sweeps.

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "muperm/gf.hpp"
#include "muperm/poly.hpp"

namespace muperm {

/// Evaluates f at every element of F_{q^2}; true iff no value repeats.
bool brute_force_is_permutation(const Field& f, const SparsePoly& poly);

struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 0;  // inclusive; hi < lo is empty
};

/// "a..b" or "a".
IntRange parse_range(const std::string& text);

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks{"thm1", "proof", "lemma3", "lemma4", "sec3-lh", "sec3-wydm", "props"};
  return checks;
}

struct SweepConfig {
  IntRange k{2, 4};
  /// Defaults: ell, m in [1, 2k+1] (lemma4: [1, 5]); u in [0, q].
  std::optional<IntRange> ell;
  std::optional<IntRange> m;
  std::optional<std::int64_t> u_max;
  std::set<std::string> checks{"thm1"};
  OmegaChoice omega = OmegaChoice::canonical;
};

/// Parameter error on unknown checks or out-of-range k.
void validate(const SweepConfig& cfg);

struct SweepReport {
  std::uint64_t total = 0;
  std::uint64_t accepted = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t brute_force_failures = 0;
  std::uint64_t correspondence_failures = 0;
  /// Failed identity and proof-step checks.
  std::uint64_t identity_failures = 0;
  std::chrono::duration<double> elapsed{0};

  std::uint64_t failures() const noexcept {
    return brute_force_failures + correspondence_failures + identity_failures;
  }
};

/// Runs the configured checks, writing one JSON object per line to `detail`
/// (if non-null) in a fixed order.
SweepReport run_sweep(const SweepConfig& cfg, std::ostream* detail);

std::string report_to_json(const SweepReport& r);

}  // namespace muperm
