#include "qsym/inequalities.hpp"

#include <cmath>

namespace qsym {

BoundCheck gentle_measurement_check(const Mat& rho, const Mat& x, double eps,
                                    const ToleranceConfig& tol) {
  if (rho.rows() != x.rows() || rho.cols() != x.cols())
    throw DimensionMismatch("gentle_measurement_check: dimensions differ");
  if (eps < 0.0) throw NegativeInput("gentle_measurement_check: eps < 0");
  const Mat id = Mat::Identity(x.rows(), x.cols());
  if (!op_leq(Mat::Zero(x.rows(), x.cols()), x, tol) || !op_leq(x, id, tol))
    throw PreconditionViolated(
        "gentle_measurement_check: X is not an effect (0 <= X <= I fails)");
  const double overlap = (rho * x).real().trace();
  if (overlap < 1.0 - eps - tol.test)
    throw PreconditionViolated(
        "gentle_measurement_check: Tr[rho X] = " + std::to_string(overlap) +
        " < 1 - eps");
  const Mat root = matrix_sqrt_psd(x, tol);
  BoundCheck out;
  out.lhs = trace_distance(rho, root * rho * root, tol);
  out.bound = 2.0 * std::sqrt(2.0 * eps);
  out.holds = out.lhs <= out.bound + tol.test;
  return out;
}

BoundCheck corollary_distance_check(const Mat& rho, const Mat& sigma,
                                    const Mat& projector, double eps1,
                                    double eps2, const ToleranceConfig& tol) {
  if (rho.rows() != sigma.rows() || rho.rows() != projector.rows())
    throw DimensionMismatch("corollary_distance_check: dimensions differ");
  if (eps1 < 0.0 || eps2 < 0.0)
    throw NegativeInput("corollary_distance_check: negative epsilon");
  if (max_abs(projector * projector - projector) > tol.eig * projector.rows())
    throw PreconditionViolated(
        "corollary_distance_check: input is not a projector");
  const Mat rho_p = projector * rho * projector;
  const Mat sigma_p = projector * sigma * projector;
  const double kept = rho_p.real().trace();
  if (kept < 1.0 - eps1 - tol.test)
    throw PreconditionViolated("corollary_distance_check: Tr[P rho P] = " +
                               std::to_string(kept) + " < 1 - eps1");
  const double proj_dist = trace_distance(rho_p, sigma_p, tol);
  if (proj_dist > eps2 + tol.test)
    throw PreconditionViolated(
        "corollary_distance_check: ||P rho P - P sigma P||_1 = " +
        std::to_string(proj_dist) + " > eps2");
  BoundCheck out;
  out.lhs = trace_distance(rho, sigma, tol);
  out.bound = 6.0 * std::sqrt(2.0 * (eps1 + eps2));
  out.holds = out.lhs <= out.bound + tol.test;
  return out;
}

}  // namespace qsym
