#include "qsym/entropy.hpp"

#include <cmath>

namespace qsym {

namespace {

double shannon_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double shannon_entropy(const ProbabilityVector& p) {
  double h = 0.0;
  for (double q : p.probs()) h += shannon_term(q);
  return h;
}

double shannon_entropy(const RVec& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) h += shannon_term(p(i));
  return h;
}

double von_neumann_entropy(const DensityOperator& rho) {
  return shannon_entropy(rho.eigenvalues());
}

double spectrum_entropy(const Mat& state, const ToleranceConfig& tol) {
  RVec vals = hermitian_eigenvalues(state, tol);
  double h = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol.psd)
      throw NotPositiveSemidefinite("spectrum_entropy: eigenvalue " +
                                    std::to_string(vals(i)));
    h += shannon_term(vals(i));
  }
  return h;
}

RelEntropy relative_entropy(const DensityOperator& rho,
                            const DensityOperator& sigma,
                            const ToleranceConfig& tol) {
  if (rho.dim() != sigma.dim())
    throw DimensionMismatch("relative_entropy: state dimensions differ");
  EigResult sig = hermitian_eig(sigma.mat(), tol);
  // rho expressed in sigma's eigenbasis; only the diagonal matters.
  const Mat rho_in_sigma = sig.vectors.adjoint() * rho.mat() * sig.vectors;

  double cross = 0.0;  // -Tr[rho log2 sigma]
  for (Eigen::Index i = 0; i < sig.values.size(); ++i) {
    const double w = rho_in_sigma(i, i).real();
    const double s = sig.values(i);
    if (s < tol.psd) {
      if (w > tol.test) return RelEntropy::infinity();
      continue;
    }
    cross -= w * std::log2(s);
  }
  return RelEntropy::finite(cross - von_neumann_entropy(rho));
}

double fannes_eta(double x) {
  if (x < 0.0) throw NegativeInput("fannes_eta: negative argument");
  const double breakpoint = 1.0 / M_E;
  if (x < breakpoint) return x == 0.0 ? 0.0 : x - x * std::log2(x);
  return x + breakpoint;
}

}  // namespace qsym
