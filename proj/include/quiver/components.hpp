#pragma once

// (C, theta) for Sigma^r_d by any of the independent methods, and the
// cross-method self-check.

#include <cstdint>
#include <optional>
#include <string>

#include "quiver/avoiding_ideal.hpp"
#include "quiver/quiver_core.hpp"
#include "quiver/report.hpp"

namespace quiver {

struct MethodOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Series truncation; default_truncation(d, r) when unset.
  std::optional<int> truncation;
  /// Highest degree scanned by the ideal method; the closed-form C when unset.
  std::optional<int> max_degree;
  std::uint64_t basis_cap = kDefaultBasisCap;
};

/// Closed-form C plus 4. A too-small value only costs a retry.
int default_truncation(const DimensionVector& d, int r);

ComponentReport compute_components(const DimensionVector& d, int r, Method method, const MethodOptions& opts = {});

struct SelfcheckOptions {
  /// Every dimension vector with positive entries, N >= 1 and sum <= bound.
  int bound = 10;
  /// Replaces the orbit codimension by a version with an off-by-one in the
  /// Ext index condition; the suite must then fail.
  bool inject_fault = false;
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct SelfcheckReport {
  bool passed = true;
  std::size_t vectors = 0;
  std::size_t cases = 0;
  /// First failure, human readable.
  std::string counterexample;
};

/// Brute force, q-series, QIP and closed form must agree on (C, theta) for
/// every (d, r) within the bound, and brute force must be invariant under
/// permuting d.
SelfcheckReport selfcheck(const SelfcheckOptions& opts);

}  // namespace quiver
