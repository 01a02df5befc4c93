#pragma once

#include "qsym/ref.hpp"
#include "qsym/typicality.hpp"

namespace qsym {

/// Uniformly weighted ensemble of symmetry-preserving product unitaries,
/// each member a tuple (g_1,...,g_n) of group elements acting as
/// U_{g_1} (x) ... (x) U_{g_n}.
struct UnitaryEnsemble {
  GroupRep rep;
  int n = 1;
  std::vector<std::vector<int>> members;
  bool exhaustive = false;
  std::uint64_t seed = 0;

  std::uint64_t size() const { return members.size(); }
};

/// K = ceil(2^{n R}) i.i.d. uniform tuples; deterministic in the seed.
UnitaryEnsemble sample_ensemble(const GroupRep& rep, int n, double rate,
                                std::uint64_t seed,
                                std::uint64_t dim_cap = kDefaultDimCap);

/// All |G|^n tuples; reproduces the product twirl exactly.
UnitaryEnsemble exhaustive_ensemble(const GroupRep& rep, int n,
                                    std::uint64_t dim_cap = kDefaultDimCap);

/// (1/K) sum_k V_k tau V_k^dag.
Mat apply_ensemble(const UnitaryEnsemble& e, const Mat& tau);

/// Same channel on a pure input given by its state vector: the mixture is
/// assembled as a Gram product of the K rotated vectors, which is what
/// makes rate sweeps at 2^10 dimensions affordable.
Mat apply_ensemble_pure(const UnitaryEnsemble& e, const Vec& psi);

/// ||tau - T^{(x) n}(tau)||_1, the distance from a state to its own product
/// twirl. Sandwiched within a factor of two of the distance to the nearest
/// symmetric state.
double residual_asymmetry(const GroupRep& rep, int n, const Mat& tau,
                          const ToleranceConfig& cfg = default_tols());

struct ProtocolReport {
  int n = 0;
  double rate = 0.0;
  std::uint64_t K = 0;
  int trials = 0;
  std::vector<double> residuals;  // indexed by trial
  double mean = 0.0;
  double median = 0.0;
  double max = 0.0;
  std::uint64_t seed = 0;
};

/// For each rate in the grid: sample `trials` independent ensembles, push
/// rho^{(x) n} through each, record the residual asymmetry of the output.
/// Reports are sorted by rate. Trials fan out over `jobs` threads with
/// per-trial derived seeds, so the output is independent of scheduling.
std::vector<ProtocolReport> rate_sweep(const GroupRep& rep,
                                       const DensityOperator& rho, int n,
                                       std::vector<double> rate_grid,
                                       int trials, std::uint64_t seed,
                                       std::uint64_t dim_cap = kDefaultDimCap,
                                       int jobs = 1);

/// Residual of the exhaustive |G|^n-tuple ensemble (a single deterministic
/// trial at rate log2 |G|).
ProtocolReport exhaustive_sweep_point(const GroupRep& rep,
                                      const DensityOperator& rho, int n,
                                      std::uint64_t dim_cap = kDefaultDimCap);

struct ConverseAudit {
  int n = 0;
  std::uint64_t K = 0;
  double log2_K_per_n = 0.0;
  double S_out = 0.0;        // S(V_n(rho^n))
  double S_twirl_out = 0.0;  // S(T^n(V_n(rho^n)))
  double S_in = 0.0;         // n S(rho)
  double eps_achieved = 0.0; // residual asymmetry of the output
  double rate_lower_bound = 0.0;
  double term_avg_entropy = 0.0;   // (1/K) sum_k S(T^n(V_k rho^n V_k^dag))
  double n_s_twirl_single = 0.0;   // n S(T(rho))
  bool concavity_holds = false;    // S_twirl_out >= term average - tol
};

/// Entropy chain audit of a concrete ensemble: computes the achieved error
/// and the implied randomness-rate lower bound
///   [S(T^n(V_n(rho^n))) - n S(rho)] / n - eta(2 eps) log2 d,
/// and checks the concavity link S_twirl_out >= (1/K) sum_k S(T^n(V_k ...)).
ConverseAudit converse_audit(const GroupRep& rep, const DensityOperator& rho,
                             const UnitaryEnsemble& e,
                             std::uint64_t dim_cap = kDefaultDimCap,
                             const ToleranceConfig& cfg = default_tols());

struct ChernoffTrialReport {
  int n = 0;
  double delta = 0.0;
  double eps = 0.0;
  std::uint64_t K = 0;
  int num_batches = 0;
  double empirical_failure_rate = 0.0;
  double bound = 0.0;            // 2 d^n exp(-K eps^2 lambda / 2)
  double lambda_min = 0.0;       // measured min nonzero eig of E[Z*]
  double lambda_lower_bound = 0.0;  // eps 2^{-n(D_G + 2 delta)}
  double trace_X = 0.0;
  double trace_Y = 0.0;
  double mass_typical = 0.0;        // Tr[Pi rho^n Pi]
  double mass_typical_twirl = 0.0;  // Tr[Pi^ T(rho)^n Pi^]
  std::uint64_t D_hat = 0;          // dim of the twirl's typical subspace
  std::uint64_t support_rank = 0;   // rank of Y
  std::uint64_t seed = 0;
};

/// Monte Carlo probe of the operator concentration step: builds the
/// typical-subspace operators X and Y, measures the minimum nonzero
/// eigenvalue driving the exponent, then draws `num_batches` independent
/// K-tuples and counts how often the sample average leaves the interval
/// [(1-eps) Y, (1+eps) Y] on the support of Y.
ChernoffTrialReport chernoff_bound_trial(const GroupRep& rep,
                                         const DensityOperator& rho, int n,
                                         double delta, std::uint64_t K,
                                         int num_batches, double eps,
                                         std::uint64_t seed,
                                         std::uint64_t dim_cap = kDefaultDimCap,
                                         const ToleranceConfig& cfg =
                                             default_tols());

}  // namespace qsym
