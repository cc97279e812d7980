#include "quiver/dln_analysis.hpp"

#include "quiver/errors.hpp"
#include "quiver/qip_lattice.hpp"

namespace quiver {

DimensionVector reduce_rank(const DimensionVector& d, int r) {
  require_rank_in_range(d, r);
  return d.shifted(-r);
}

BigInt fiber_codim(const DimensionVector& d, int r) {
  return codim_closed_form(d, r) + BigInt(r) * (d[0] + d[d.arrows()] - r);
}

Rational rlct(const DimensionVector& d, int r) {
  return ratio(fiber_codim(d, r), 2);
}

RlcmValue rlcm(const DimensionVector& d, int r) {
  const auto red = reduce_rank(d, r).sorted();
  // Degenerate reduction: the fiber is smooth, reported on the boundary.
  if (red[0] == 0) return {0, true};
  const int m = relevant_count(red);
  BigInt s_tilde = 0;
  for (int i = 0; i <= m; ++i) s_tilde += red[i];
  const Rational f = frac(ratio(s_tilde, m));
  Rational v = Rational(BigInt(m) * m) * f * (1 - f);
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("rlcm is not an integer: " + to_string(v));
  return {v.get_num(), f == 0};
}

Rational evaluate_loss(const MatrixTuple& t, const RationalMatrix& B) {
  const auto p = t.mult();
  if (p.rows() != B.rows() || p.cols() != B.cols()) {
    throw InvalidInput("target matrix has shape " + std::to_string(B.rows()) + "x" + std::to_string(B.cols()) +
                       ", expected " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
  }
  return frobenius_sq(p - B);
}

DlnReport analyze_network(const DimensionVector& d, int r) {
  DlnReport rep{d, r, codim_closed_form(d, r), fiber_codim(d, r), theta_closed_form(d, r), rlct(d, r), rlcm(d, r)};
  return rep;
}

}  // namespace quiver
