#pragma once

#include "qsym/distance.hpp"

namespace qsym {

struct BoundCheck {
  double lhs = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// Disturbance of a high-probability measurement: given 0 <= X <= I with
/// Tr[rho X] >= 1 - eps, checks ||rho - sqrt(X) rho sqrt(X)||_1 <= 2 sqrt(2 eps).
/// rho may be subnormalized. Throws PreconditionViolated when the overlap
/// premise fails.
BoundCheck gentle_measurement_check(const Mat& rho, const Mat& x, double eps,
                                    const ToleranceConfig& tol = default_tols());

/// Projected-closeness corollary: if Tr[P rho P] >= 1 - eps1 and
/// ||P rho P - P sigma P||_1 <= eps2 for a projector P, then
/// ||rho - sigma||_1 <= 6 sqrt(2 (eps1 + eps2)).
BoundCheck corollary_distance_check(const Mat& rho, const Mat& sigma,
                                    const Mat& projector, double eps1,
                                    double eps2,
                                    const ToleranceConfig& tol = default_tols());

}  // namespace qsym
