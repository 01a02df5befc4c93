#include "qsym/density.hpp"

#include <cmath>

namespace qsym {

ProbabilityVector::ProbabilityVector(std::vector<double> probs,
                                     const ToleranceConfig& tol)
    : probs_(std::move(probs)) {
  if (probs_.empty())
    throw NormalizationError("ProbabilityVector: empty distribution");
  double sum = 0.0;
  for (double& p : probs_) {
    if (!std::isfinite(p))
      throw NormalizationError("ProbabilityVector: non-finite entry");
    if (p < -tol.psd)
      throw NegativeInput("ProbabilityVector: negative entry " +
                          std::to_string(p));
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol.trace)
    throw NormalizationError("ProbabilityVector: entries sum to " +
                             std::to_string(sum));
  for (double& p : probs_) p /= sum;
}

DensityOperator::DensityOperator(Mat m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("DensityOperator: matrix is not square");
  if (m.size() == 0) throw DimensionMismatch("DensityOperator: empty matrix");
  if (!m.allFinite())
    throw NonHermitianInput("DensityOperator: non-finite entries");
  if (!is_hermitian(m, tol.herm))
    throw NonHermitianInput("DensityOperator: matrix is not Hermitian");
  Mat sym = (m + m.adjoint()) / 2.0;

  const double tr = sym.real().trace();
  if (std::abs(tr - 1.0) > tol.trace)
    throw NormalizationError("DensityOperator: trace " + std::to_string(tr) +
                             " deviates from 1 beyond tolerance");
  sym /= tr;

  EigResult eig = hermitian_eig(sym, tol);
  RVec vals = eig.values;
  double clamped_sum = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol.psd)
      throw NotPositiveSemidefinite("DensityOperator: eigenvalue " +
                                    std::to_string(vals(i)) +
                                    " below -psd tolerance");
    if (vals(i) < 0.0) vals(i) = 0.0;
    clamped_sum += vals(i);
  }
  vals /= clamped_sum;

  eigenvalues_ = vals;
  rank_ = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) > tol.psd) ++rank_;
  mat_ = eig.vectors * vals.asDiagonal() * eig.vectors.adjoint();
  // Reassembly is Hermitian up to roundoff; make it exact.
  mat_ = (mat_ + mat_.adjoint()) / 2.0;
}

DensityOperator DensityOperator::from_pure(const Vec& amplitudes,
                                           const ToleranceConfig& tol) {
  if (amplitudes.size() == 0)
    throw DimensionMismatch("from_pure: empty amplitude vector");
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol.trace)
    throw NormalizationError("from_pure: squared norm " +
                             std::to_string(norm2) +
                             " deviates from 1 beyond tolerance");
  Vec psi = amplitudes / std::sqrt(norm2);
  return DensityOperator(psi * psi.adjoint(), tol);
}

}  // namespace qsym
