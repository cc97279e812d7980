#pragma once

#include <string>
#include <vector>

#include "quiver/numeric.hpp"
#include "quiver/quiver_core.hpp"

namespace quiver {

enum class Method { Brute, QSeries, Qip, Closed, Ideal };

std::string method_name(Method m);

/// (C, theta) for Sigma^r_d together with how it was obtained.
struct ComponentReport {
  Method method = Method::Closed;
  BigInt C;
  BigInt theta;
  /// Minimal-codimension orbits with m_0N = r (brute force only).
  std::vector<OrbitDescriptor> witnesses;
};

}  // namespace quiver
