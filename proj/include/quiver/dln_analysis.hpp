#pragma once

// Deep linear networks: the fibers of the multiplication map and the real
// log-canonical threshold of the squared loss.

#include "quiver/exact_linalg.hpp"
#include "quiver/numeric.hpp"
#include "quiver/quiver_core.hpp"

namespace quiver {

/// d - r componentwise; Sigma^r_d and Sigma^0_{d-r} share (C, theta).
DimensionVector reduce_rank(const DimensionVector& d, int r);

/// Codimension of mult^{-1}(B) for B of rank r: C + r(d_0 + d_N - r).
BigInt fiber_codim(const DimensionVector& d, int r);

/// fiber_codim / 2.
Rational rlct(const DimensionVector& d, int r);

struct RlcmValue {
  BigInt value;
  /// {S~/m} = 0, where the formula gives 0 although a pole has order >= 1.
  bool boundary = false;
};

/// m^2 {S~/m} (1 - {S~/m}) for the reduced vector d' - r.
RlcmValue rlcm(const DimensionVector& d, int r);

/// ||mult(t) - B||_F^2.
Rational evaluate_loss(const MatrixTuple& t, const RationalMatrix& B);

struct DlnReport {
  DimensionVector d;
  int r = 0;
  BigInt sigma_codim;
  BigInt fiber_codim;
  BigInt theta;
  Rational rlct;
  RlcmValue rlcm;
};

DlnReport analyze_network(const DimensionVector& d, int r);

}  // namespace quiver
