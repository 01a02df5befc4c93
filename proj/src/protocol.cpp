#include "qsym/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "qsym/distance.hpp"
#include "qsym/rng.hpp"

namespace qsym {

namespace {

void check_cap(const GroupRep& rep, int n, std::uint64_t cap,
               const char* who) {
  if (n < 1) throw DimensionMismatch(std::string(who) + ": n must be >= 1");
  const std::uint64_t dim = pow_dim(rep.dim(), n);
  if (dim > cap)
    throw DimensionCapExceeded(std::string(who) + ": dim " +
                               std::to_string(rep.dim()) + "^" +
                               std::to_string(n) + " exceeds cap " +
                               std::to_string(cap));
}

std::uint64_t ensemble_size_for_rate(int n, double rate) {
  if (rate < 0.0) throw NegativeInput("sample_ensemble: rate must be >= 0");
  const double k = std::exp2(static_cast<double>(n) * rate);
  if (k > 1e9) throw Error("sample_ensemble: 2^{nR} too large to sample");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(k)));
}

std::vector<const Mat*> tuple_ptrs(const GroupRep& rep,
                                   const std::vector<int>& tuple) {
  std::vector<const Mat*> us(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    us[i] = &rep.unitary(tuple[i]);
  return us;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

// State vector of a pure density operator, or nothing if mixed.
std::optional<Vec> pure_vector(const DensityOperator& rho,
                               const ToleranceConfig& cfg) {
  if (!rho.is_pure()) return std::nullopt;
  EigResult eig = hermitian_eig(rho.mat(), cfg);
  return eig.vectors.col(rho.dim() - 1);  // eigenvalues ascending
}

Mat push_through(const UnitaryEnsemble& e, const std::optional<Vec>& psi_n,
                 const Mat& rho_n) {
  return psi_n ? apply_ensemble_pure(e, *psi_n) : apply_ensemble(e, rho_n);
}

}  // namespace

UnitaryEnsemble sample_ensemble(const GroupRep& rep, int n, double rate,
                                std::uint64_t seed, std::uint64_t dim_cap) {
  check_cap(rep, n, dim_cap, "sample_ensemble");
  const std::uint64_t k = ensemble_size_for_rate(n, rate);
  UnitaryEnsemble e{rep, n, {}, false, seed};
  e.members.reserve(k);
  SplitRng rng(seed);
  for (std::uint64_t i = 0; i < k; ++i) {
    std::vector<int> tuple(n);
    for (int j = 0; j < n; ++j)
      tuple[j] = static_cast<int>(rng.bounded(rep.order()));
    e.members.push_back(std::move(tuple));
  }
  return e;
}

UnitaryEnsemble exhaustive_ensemble(const GroupRep& rep, int n,
                                    std::uint64_t dim_cap) {
  check_cap(rep, n, dim_cap, "exhaustive_ensemble");
  const std::uint64_t total = pow_dim(rep.order(), n);
  if (total > (1u << 20))
    throw DimensionCapExceeded("exhaustive_ensemble: |G|^n too large");
  UnitaryEnsemble e{rep, n, {}, true, 0};
  e.members.reserve(total);
  std::vector<int> tuple(n, 0);
  while (true) {
    e.members.push_back(tuple);
    int pos = n - 1;
    while (pos >= 0 && tuple[pos] + 1 == rep.order()) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return e;
}

Mat apply_ensemble(const UnitaryEnsemble& e, const Mat& tau) {
  const auto dim = static_cast<Eigen::Index>(pow_dim(e.rep.dim(), e.n));
  if (tau.rows() != dim || tau.cols() != dim)
    throw DimensionMismatch("apply_ensemble: operand dimension mismatch");
  Mat out = Mat::Zero(dim, dim);
  const int d = static_cast<int>(e.rep.dim());
  for (const auto& tuple : e.members)
    out += conjugate_by_tuple(tuple_ptrs(e.rep, tuple), tau, d);
  out /= static_cast<double>(e.members.size());
  return (out + out.adjoint()) / 2.0;
}

Mat apply_ensemble_pure(const UnitaryEnsemble& e, const Vec& psi) {
  const auto dim = static_cast<Eigen::Index>(pow_dim(e.rep.dim(), e.n));
  if (psi.size() != dim)
    throw DimensionMismatch("apply_ensemble_pure: vector dimension mismatch");
  const int d = static_cast<int>(e.rep.dim());
  const auto k = static_cast<Eigen::Index>(e.members.size());
  Mat columns(dim, k);
  for (Eigen::Index j = 0; j < k; ++j)
    columns.col(j) = apply_tuple_to_vec(tuple_ptrs(e.rep, e.members[j]), psi, d);
  Mat out = (columns * columns.adjoint()) / static_cast<double>(k);
  return (out + out.adjoint()) / 2.0;
}

double residual_asymmetry(const GroupRep& rep, int n, const Mat& tau,
                          const ToleranceConfig& cfg) {
  const auto dim = static_cast<Eigen::Index>(pow_dim(rep.dim(), n));
  if (tau.rows() != dim || tau.cols() != dim)
    throw DimensionMismatch("residual_asymmetry: operand dimension mismatch");
  return trace_distance(tau, tensor_twirl(rep, n, tau), cfg);
}

std::vector<ProtocolReport> rate_sweep(const GroupRep& rep,
                                       const DensityOperator& rho, int n,
                                       std::vector<double> rate_grid,
                                       int trials, std::uint64_t seed,
                                       std::uint64_t dim_cap, int jobs) {
  check_cap(rep, n, dim_cap, "rate_sweep");
  if (rho.dim() != rep.dim())
    throw DimensionMismatch("rate_sweep: state dimension mismatch");
  std::sort(rate_grid.begin(), rate_grid.end());
  jobs = std::max(1, jobs);

  const ToleranceConfig cfg{};
  const std::optional<Vec> psi = pure_vector(rho, cfg);
  std::optional<Vec> psi_n;
  Mat rho_n;
  if (psi) {
    psi_n = kron_vec_pow(*psi, n);
  } else {
    rho_n = kron_pow(rho.mat(), n);
  }
  // Same target for every trial: the product twirl of the input.
  const Mat target = kron_pow(twirl_single(rep, rho.mat()), n);
  const SplitRng master(seed);

  std::vector<ProtocolReport> reports;
  for (std::size_t r = 0; r < rate_grid.size(); ++r) {
    ProtocolReport rep_out;
    rep_out.n = n;
    rep_out.rate = rate_grid[r];
    rep_out.K = ensemble_size_for_rate(n, rate_grid[r]);
    rep_out.trials = trials;
    rep_out.seed = seed;
    rep_out.residuals.assign(trials, 0.0);

    auto run_trial = [&](int t) {
      const std::uint64_t stream =
          (static_cast<std::uint64_t>(r) << 32) | static_cast<std::uint64_t>(t);
      const std::uint64_t trial_seed = master.split(stream).seed();
      const UnitaryEnsemble e =
          sample_ensemble(rep, n, rate_grid[r], trial_seed, dim_cap);
      const Mat mixed = push_through(e, psi_n, rho_n);
      rep_out.residuals[t] = trace_distance(mixed, target, cfg);
    };

    if (jobs == 1 || trials <= 1) {
      for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
          for (int t = w; t < trials; t += jobs) run_trial(t);
        });
      for (auto& th : pool) th.join();
    }

    if (trials > 0) {
      rep_out.mean = 0.0;
      rep_out.max = 0.0;
      for (double v : rep_out.residuals) {
        rep_out.mean += v;
        rep_out.max = std::max(rep_out.max, v);
      }
      rep_out.mean /= trials;
      rep_out.median = median_of(rep_out.residuals);
    }
    reports.push_back(std::move(rep_out));
  }
  return reports;
}

ProtocolReport exhaustive_sweep_point(const GroupRep& rep,
                                      const DensityOperator& rho, int n,
                                      std::uint64_t dim_cap) {
  const ToleranceConfig cfg{};
  const UnitaryEnsemble e = exhaustive_ensemble(rep, n, dim_cap);
  const std::optional<Vec> psi = pure_vector(rho, cfg);
  Mat mixed;
  if (psi) {
    mixed = apply_ensemble_pure(e, kron_vec_pow(*psi, n));
  } else {
    mixed = apply_ensemble(e, kron_pow(rho.mat(), n));
  }
  const Mat target = kron_pow(twirl_single(rep, rho.mat()), n);
  ProtocolReport out;
  out.n = n;
  out.rate = std::log2(static_cast<double>(rep.order()));
  out.K = e.size();
  out.trials = 1;
  out.residuals = {trace_distance(mixed, target, cfg)};
  out.mean = out.median = out.max = out.residuals[0];
  out.seed = 0;
  return out;
}

ConverseAudit converse_audit(const GroupRep& rep, const DensityOperator& rho,
                             const UnitaryEnsemble& e, std::uint64_t dim_cap,
                             const ToleranceConfig& cfg) {
  check_cap(rep, e.n, dim_cap, "converse_audit");
  if (rho.dim() != rep.dim())
    throw DimensionMismatch("converse_audit: state dimension mismatch");
  const int n = e.n;
  const int d = static_cast<int>(rep.dim());

  const std::optional<Vec> psi = pure_vector(rho, cfg);
  std::optional<Vec> psi_n;
  Mat rho_n;
  if (psi) {
    psi_n = kron_vec_pow(*psi, n);
    rho_n = (*psi_n) * psi_n->adjoint();
  } else {
    rho_n = kron_pow(rho.mat(), n);
  }
  const Mat mixed = push_through(e, psi_n, rho_n);
  const Mat twirl_out = tensor_twirl(rep, n, mixed);

  ConverseAudit audit;
  audit.n = n;
  audit.K = e.size();
  audit.log2_K_per_n = std::log2(static_cast<double>(e.size())) / n;
  audit.S_out = spectrum_entropy(mixed, cfg);
  audit.S_twirl_out = spectrum_entropy(twirl_out, cfg);
  audit.S_in = n * von_neumann_entropy(rho);
  audit.eps_achieved = trace_distance(mixed, twirl_out, cfg);
  audit.rate_lower_bound = (audit.S_twirl_out - audit.S_in) / n -
                           fannes_eta(2.0 * audit.eps_achieved) * std::log2(d);

  double avg = 0.0;
  for (const auto& tuple : e.members) {
    const Mat term =
        conjugate_by_tuple(tuple_ptrs(rep, tuple), rho_n, d);
    avg += spectrum_entropy(tensor_twirl(rep, n, term), cfg);
  }
  audit.term_avg_entropy = avg / static_cast<double>(e.size());
  audit.n_s_twirl_single =
      n * spectrum_entropy(twirl_single(rep, rho.mat()), cfg);
  audit.concavity_holds =
      audit.S_twirl_out >= audit.term_avg_entropy - cfg.test;
  return audit;
}

ChernoffTrialReport chernoff_bound_trial(const GroupRep& rep,
                                         const DensityOperator& rho, int n,
                                         double delta, std::uint64_t K,
                                         int num_batches, double eps,
                                         std::uint64_t seed,
                                         std::uint64_t dim_cap,
                                         const ToleranceConfig& cfg) {
  check_cap(rep, n, dim_cap, "chernoff_bound_trial");
  if (rho.dim() != rep.dim())
    throw DimensionMismatch("chernoff_bound_trial: state dimension mismatch");
  if (K < 1 || num_batches < 1)
    throw Error("chernoff_bound_trial: K and num_batches must be >= 1");
  const int d = static_cast<int>(rep.dim());

  ChernoffTrialReport rep_out;
  rep_out.n = n;
  rep_out.delta = delta;
  rep_out.eps = eps;
  rep_out.K = K;
  rep_out.num_batches = num_batches;
  rep_out.seed = seed;

  // Typical machinery on both ends of the channel.
  const TypicalProjector tp_rho(rho, n, delta, dim_cap, cfg);
  const DensityOperator twirled(twirl_single(rep, rho.mat()), cfg);
  const TypicalProjector tp_hat(twirled, n, delta, dim_cap, cfg);
  rep_out.mass_typical = tp_rho.mass();
  rep_out.mass_typical_twirl = tp_hat.mass();
  rep_out.D_hat = tp_hat.rank();

  // X = Pi^ T^n(Pi rho^n Pi) Pi^, then Y = its restriction to eigenvalues
  // >= eps / D_hat.
  const Mat sandwich = tp_rho.sandwiched_state();
  const Mat twirled_sandwich = tensor_twirl(rep, n, sandwich);
  const Mat x = tp_hat.matrix() * twirled_sandwich * tp_hat.matrix();
  rep_out.trace_X = x.real().trace();

  const double cutoff = eps / static_cast<double>(tp_hat.rank());
  const EigResult x_eig = hermitian_eig((x + x.adjoint()) / 2.0, cfg);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < x_eig.values.size(); ++i)
    if (x_eig.values(i) >= cutoff) kept.push_back(i);
  rep_out.support_rank = kept.size();

  const double s_rho = von_neumann_entropy(rho);
  const double scale = std::exp2(n * (s_rho - delta));
  const double d_g = ref_closed_form(rep, rho, cfg);
  rep_out.lambda_lower_bound = eps * std::exp2(-n * (d_g + 2.0 * delta));
  const double dim_n = std::exp2(n * std::log2((double)d));

  if (kept.empty()) {
    // Y = 0: nothing to concentrate around. Report and bail out.
    rep_out.trace_Y = 0.0;
    rep_out.lambda_min = 0.0;
    rep_out.bound = 2.0 * dim_n;
    rep_out.empirical_failure_rate = 0.0;
    return rep_out;
  }

  const auto r = static_cast<Eigen::Index>(kept.size());
  Mat support(x.rows(), r);       // orthonormal basis of supp(Y)
  Eigen::VectorXd y_vals(r);      // Y restricted to its support
  for (Eigen::Index j = 0; j < r; ++j) {
    support.col(j) = x_eig.vectors.col(kept[j]);
    y_vals(j) = x_eig.values(kept[j]);
  }
  rep_out.trace_Y = y_vals.sum();
  rep_out.lambda_min = scale * y_vals.minCoeff();
  rep_out.bound =
      2.0 * dim_n * std::exp(-static_cast<double>(K) * eps * eps *
                             rep_out.lambda_min / 2.0);

  // sqrt of Pi rho^n Pi in factored form: columns scaled by sqrt(p).
  Mat w_p = tp_rho.basis();
  for (Eigen::Index j = 0; j < w_p.cols(); ++j)
    w_p.col(j) *= std::sqrt(tp_rho.column_probs()[j]);

  const Mat y_support = y_vals.asDiagonal();
  const SplitRng master(seed);
  int failures = 0;
  for (int b = 0; b < num_batches; ++b) {
    SplitRng rng = master.split(b);
    Mat a = Mat::Zero(r, r);
    std::vector<int> tuple(n);
    for (std::uint64_t k = 0; k < K; ++k) {
      for (int j = 0; j < n; ++j)
        tuple[j] = static_cast<int>(rng.bounded(rep.order()));
      Mat rotated = w_p;
      for (int j = 0; j < n; ++j)
        rotated = apply_factor_left(rep.unitary(tuple[j]), rotated, j, n, d);
      const Mat c = support.adjoint() * rotated;
      a += c * c.adjoint();
    }
    a /= static_cast<double>(K);
    a = (a + a.adjoint()) / 2.0;
    const bool above =
        hermitian_eigenvalues(a - (1.0 - eps) * y_support, cfg).minCoeff() >=
        -cfg.eig;
    const bool below =
        hermitian_eigenvalues((1.0 + eps) * y_support - a, cfg).minCoeff() >=
        -cfg.eig;
    if (!(above && below)) ++failures;
  }
  rep_out.empirical_failure_rate =
      static_cast<double>(failures) / static_cast<double>(num_batches);
  return rep_out;
}

}  // namespace qsym
