#include "qsym/distance.hpp"

namespace qsym {

double trace_norm(const Mat& a, const ToleranceConfig& tol) {
  return hermitian_eigenvalues(a, tol).cwiseAbs().sum();
}

double trace_distance(const Mat& a, const Mat& b, const ToleranceConfig& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("trace_distance: operand dimensions differ");
  return trace_norm(a - b, tol);
}

double trace_distance(const DensityOperator& a, const DensityOperator& b,
                      const ToleranceConfig& tol) {
  return trace_distance(a.mat(), b.mat(), tol);
}

}  // namespace qsym
