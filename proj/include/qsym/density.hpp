#pragma once

#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/types.hpp"

namespace qsym {

/// Discrete distribution: nonnegative entries summing to one within
/// tol.trace (renormalized on construction).
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs,
                             const ToleranceConfig& tol = default_tols());

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

/// Validated quantum state: Hermitian, PSD and unit trace within the
/// configured tolerances. Construction symmetrizes, clamps eigenvalues in
/// [-tol.psd, 0) to zero and renormalizes; anything further out is a hard
/// error. The clamped spectrum is kept alongside the matrix since nearly
/// every consumer (entropies, typicality) needs it anyway.
class DensityOperator {
 public:
  explicit DensityOperator(Mat m, const ToleranceConfig& tol = default_tols());

  static DensityOperator from_pure(const Vec& amplitudes,
                                   const ToleranceConfig& tol = default_tols());

  const Mat& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

  /// Clamped spectrum, ascending, summing to one.
  const RVec& eigenvalues() const { return eigenvalues_; }

  /// Number of eigenvalues above tol.psd.
  Eigen::Index rank() const { return rank_; }
  bool is_pure() const { return rank_ == 1; }

 private:
  Mat mat_;
  RVec eigenvalues_;
  Eigen::Index rank_ = 0;
};

}  // namespace qsym
