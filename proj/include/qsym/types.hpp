#pragma once

#include <complex>
#include <cstdint>
#include <Eigen/Dense>

namespace qsym {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// Numerical tolerances shared across all modules. Every field must be
/// strictly positive.
struct ToleranceConfig {
  double herm = 1e-10;   // hermiticity check, max-entry norm
  double psd = 1e-10;    // eigenvalue clamping window for states
  double trace = 1e-9;   // trace / normalization slack
  double eig = 1e-10;    // eigendecomposition and unitarity slack
  double test = 1e-7;    // generic assertion slack for derived identities

  bool valid() const {
    return herm > 0 && psd > 0 && trace > 0 && eig > 0 && test > 0;
  }
};

inline const ToleranceConfig& default_tols() {
  static const ToleranceConfig t{};
  return t;
}

/// Default ceiling on the total Hilbert-space dimension d^n for any
/// materialized tensor-power object.
inline constexpr std::uint64_t kDefaultDimCap = 4096;

/// d^n with saturation, so cap comparisons never overflow.
inline std::uint64_t pow_dim(std::uint64_t d, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (d != 0 && r > UINT64_MAX / d) return UINT64_MAX;
    r *= d;
  }
  return r;
}

}  // namespace qsym
