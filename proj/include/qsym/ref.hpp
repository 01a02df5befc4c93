#pragma once

#include "qsym/entropy.hpp"
#include "qsym/twirl.hpp"

namespace qsym {

struct RefResult {
  double closed_form = 0.0;   // S(T(rho)) - S(rho), bits
  double variational = 0.0;   // minimized D(rho || sigma) over symmetric sigma
  double gap = 0.0;           // |closed_form - variational|
  Mat minimizer;              // best symmetric sigma found
  double minimizer_twirl_distance = 0.0;  // ||sigma - T(rho)||_1
  int iterations = 0;
  bool converged = false;
};

/// Asymmetry in bits via the entropy-difference identity.
double ref_closed_form(const GroupRep& rep, const DensityOperator& rho,
                       const ToleranceConfig& cfg = default_tols());

/// Independent route to the same number: minimize D(rho || sigma) over the
/// symmetric states by descent on sigma = exp(H)/Tr[exp(H)] with H confined
/// to the twirl's fixed-point space. Exists as a cross-check of the closed
/// form, not as a production solver; non-convergence is flagged, never
/// thrown.
RefResult ref_variational(const GroupRep& rep, const DensityOperator& rho,
                          int max_iter = 500, double tol = 1e-7,
                          const ToleranceConfig& cfg = default_tols());

struct EntropyInvarianceCheck {
  double lhs = 0.0;  // S(T(V rho V^dag))
  double rhs = 0.0;  // S(T(rho))
  bool holds = false;
};

/// Twirl-then-entropy is blind to symmetry-preserving rotations; V must
/// pass is_symmetry_preserving or NotSymmetryPreserving is thrown.
EntropyInvarianceCheck lemma_entropy_invariance_check(
    const GroupRep& rep, const DensityOperator& rho, const Mat& v,
    const ToleranceConfig& cfg = default_tols());

struct CollectiveRefSeries {
  std::vector<int> n_values;
  std::vector<double> per_copy_values;          // collective twirl route
  std::vector<double> product_per_copy_values;  // product twirl route
};

/// Per-copy asymmetry under the collective twirl (average over U_g^{(x) n}
/// only) for n = 1..n_max, against the product-twirl value which stays at
/// the single-copy figure. The contrast is the point: the collective route
/// decays with n, the product route does not.
CollectiveRefSeries collective_ref_series(
    const GroupRep& rep, const DensityOperator& rho, int n_max,
    std::uint64_t dim_cap = kDefaultDimCap,
    const ToleranceConfig& cfg = default_tols());

}  // namespace qsym
