#pragma once

#include "qsym/density.hpp"

namespace qsym {

/// Trace norm of a Hermitian operator: sum |eigenvalues|.
double trace_norm(const Mat& a, const ToleranceConfig& tol = default_tols());

/// ||a - b||_1 for Hermitian (possibly subnormalized) operators of equal
/// dimension. In [0, 2] for normalized inputs.
double trace_distance(const Mat& a, const Mat& b,
                      const ToleranceConfig& tol = default_tols());

double trace_distance(const DensityOperator& a, const DensityOperator& b,
                      const ToleranceConfig& tol = default_tols());

}  // namespace qsym
