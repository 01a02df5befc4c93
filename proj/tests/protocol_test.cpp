#include <doctest.h>

#include <cmath>

#include "qsym/distance.hpp"
#include "qsym/protocol.hpp"
#include "qsym/random.hpp"
#include "support.hpp"

using namespace qsym;
using namespace qsym::test;

TEST_CASE("ensemble sampling: sizes and determinism") {
  const GroupRep z2 = z2_qubit();
  CHECK(sample_ensemble(z2, 3, 0.0, 7).size() == 1);
  CHECK(sample_ensemble(z2, 3, 1.0, 7).size() == 8);
  CHECK(sample_ensemble(z2, 2, 0.75, 7).size() == 3);  // ceil(2^1.5)

  const UnitaryEnsemble a = sample_ensemble(z2, 4, 0.8, 99);
  const UnitaryEnsemble b = sample_ensemble(z2, 4, 0.8, 99);
  CHECK(a.members == b.members);
  const UnitaryEnsemble c = sample_ensemble(z2, 4, 0.8, 100);
  CHECK(a.members != c.members);

  for (const auto& tuple : a.members)
    for (int g : tuple) CHECK((g == 0 || g == 1));

  CHECK_THROWS_AS(sample_ensemble(z2, 13, 0.5, 1), DimensionCapExceeded);
  CHECK_THROWS_AS(sample_ensemble(z2, 2, -0.5, 1), NegativeInput);
}

TEST_CASE("exhaustive ensemble reproduces the product twirl") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(600);
  for (const int n : {2, 3}) {
    const UnitaryEnsemble e = exhaustive_ensemble(z2, n);
    CHECK(e.size() == pow_dim(2, n));
    const Mat tau = random_density(rng, 1 << n).mat();
    CHECK(trace_distance(apply_ensemble(e, tau),
                         tensor_twirl(z2, n, tau)) <= 1e-7);
  }
}

TEST_CASE("apply_ensemble: single member, full group, symmetric closure") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(601);

  const UnitaryEnsemble single = sample_ensemble(z2, 2, 0.0, 42);
  const DensityOperator rho = random_density(rng, 4);
  const Mat out = apply_ensemble(single, rho.mat());
  CHECK(std::abs(spectrum_entropy(out) - von_neumann_entropy(rho)) <= 1e-9);
  CHECK(std::abs(out.real().trace() - 1.0) <= 1e-12);

  // n = 1 with every group element once: exactly the twirl
  UnitaryEnsemble full{z2, 1, {{0}, {1}}, true, 0};
  const Mat tau = random_density(rng, 2).mat();
  CHECK(trace_distance(apply_ensemble(full, tau), twirl_single(z2, tau)) <=
        1e-10);

  // symmetric input stays symmetric under any member mix
  const Mat sym = tensor_twirl(z2, 2, random_density(rng, 4).mat());
  const UnitaryEnsemble e = sample_ensemble(z2, 2, 1.0, 5);
  const Mat mixed = apply_ensemble(e, sym);
  CHECK(trace_distance(mixed, tensor_twirl(z2, 2, mixed)) <= 1e-9);
}

TEST_CASE("pure-input fast path agrees with the generic channel") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(602);
  for (int trial = 0; trial < 5; ++trial) {
    const Vec psi = random_pure(rng, 2);
    const Vec psi3 = kron_vec_pow(psi, 3);
    const UnitaryEnsemble e = sample_ensemble(z2, 3, 0.7, 1000 + trial);
    const Mat generic = apply_ensemble(e, psi3 * psi3.adjoint());
    const Mat fast = apply_ensemble_pure(e, psi3);
    CHECK(max_abs(generic - fast) <= 1e-12);
  }
}

TEST_CASE("ensemble output entropy never drops") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(603);
  for (int trial = 0; trial < 8; ++trial) {
    const Mat tau = random_density(rng, 4).mat();
    const UnitaryEnsemble e =
        sample_ensemble(z2, 2, 0.5 + rng.uniform(), 700 + trial);
    CHECK(spectrum_entropy(apply_ensemble(e, tau)) >=
          spectrum_entropy(tau) - 1e-7);
  }
}

TEST_CASE("residual asymmetry: pinned values and linearity") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(604);

  const Mat sym = tensor_twirl(z2, 2, random_density(rng, 4).mat());
  CHECK(residual_asymmetry(z2, 2, sym) <= 1e-10);

  CHECK(residual_asymmetry(z2, 1, projector_on(plus_state())) ==
        doctest::Approx(1.0).epsilon(1e-10));

  // residual is exactly linear along mixtures with a symmetric state
  const Mat rho = random_density(rng, 4).mat();
  const double base = residual_asymmetry(z2, 2, rho);
  for (const double lambda : {0.1, 0.35, 0.8}) {
    const Mat mix = (1.0 - lambda) * sym + lambda * rho;
    CHECK(residual_asymmetry(z2, 2, mix) ==
          doctest::Approx(lambda * base).epsilon(1e-8));
  }
}

TEST_CASE("residual linearity survives any fixed ensemble") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(605);
  const Mat sym = tensor_twirl(z2, 2, random_density(rng, 4).mat());
  const Mat rho = random_density(rng, 4).mat();
  const UnitaryEnsemble e = sample_ensemble(z2, 2, 1.0, 31);
  const double base = residual_asymmetry(z2, 2, apply_ensemble(e, rho));
  for (const double lambda : {0.1, 0.5, 1.0}) {
    const Mat mix = (1.0 - lambda) * sym + lambda * rho;
    const double r = residual_asymmetry(z2, 2, apply_ensemble(e, mix));
    CHECK(r == doctest::Approx(lambda * base).epsilon(1e-7));
  }
}

TEST_CASE("membership sandwich around the nearest symmetric state") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat sigma = tensor_twirl(z2, 2, random_density(rng, 4).mat());
    const double t = 0.3 * rng.uniform();
    const Mat tau = (1.0 - t) * sigma + t * random_density(rng, 4).mat();
    const double to_sigma = trace_distance(tau, sigma);
    const double residual = residual_asymmetry(z2, 2, tau);
    // some symmetric state within eps exists whenever residual <= eps, and
    // conversely the residual is at most twice the best approximation
    CHECK(residual <= 2.0 * to_sigma + 1e-10);
    const Mat own_twirl = tensor_twirl(z2, 2, tau);
    CHECK(is_symmetric(z2, partial_trace(own_twirl, 2, 2, 0), 1e-7).symmetric);
    CHECK(trace_distance(tau, own_twirl) == doctest::Approx(residual));
  }
}

TEST_CASE("rate sweep: symmetric input needs no randomness") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(607);
  const DensityOperator sym(twirl_single(z2, random_density(rng, 2).mat()));
  const auto reports = rate_sweep(z2, sym, 3, {0.0, 0.5, 1.0}, 5, 11);
  for (const auto& r : reports)
    for (double v : r.residuals) CHECK(v <= 1e-7);
}

TEST_CASE("rate sweep: report shape, determinism, thread invariance") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator rho = DensityOperator::from_pure(amp_state(0.9));
  const auto a = rate_sweep(z2, rho, 4, {0.5, 0.25}, 6, 123, kDefaultDimCap, 1);
  REQUIRE(a.size() == 2);
  CHECK(a[0].rate == 0.25);  // sorted ascending
  CHECK(a[0].K == 2);        // ceil(2^{4 * 0.25}) = 2
  CHECK(a[1].K == 4);
  CHECK(a[0].trials == 6);
  for (const auto& rep : a) {
    for (double v : rep.residuals) {
      CHECK(v >= 0.0);
      CHECK(v <= 2.0);
    }
    CHECK(rep.max >= rep.median);
  }

  const auto b = rate_sweep(z2, rho, 4, {0.25, 0.5}, 6, 123, kDefaultDimCap, 2);
  REQUIRE(b.size() == a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].residuals == b[i].residuals);

  const auto c = rate_sweep(z2, rho, 4, {0.25, 0.5}, 6, 124);
  CHECK(a[0].residuals != c[0].residuals);
}

TEST_CASE("rate sweep: mixed-state path matches the pure path physics") {
  const GroupRep z2 = z2_qubit();
  // nearly pure mixed state behaves like the pure one
  Mat m = amp_state(0.9) * amp_state(0.9).adjoint();
  const DensityOperator mixed(0.999 * m + 0.001 * Mat::Identity(2, 2) / 2.0);
  REQUIRE_FALSE(mixed.is_pure());
  const auto reports = rate_sweep(z2, mixed, 3, {1.0}, 4, 5);
  for (double v : reports[0].residuals) {
    CHECK(v >= 0.0);
    CHECK(v <= 2.0);
  }
}

TEST_CASE("median residual is non-increasing as K doubles") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator rho = DensityOperator::from_pure(amp_state(0.9));
  const int n = 4;
  // rates giving K = 2, 4, 8, 16
  const auto reports =
      rate_sweep(z2, rho, n, {0.25, 0.5, 0.75, 1.0}, 30, 2024);
  REQUIRE(reports.size() == 4);
  for (std::size_t i = 1; i < reports.size(); ++i)
    CHECK(reports[i].median <= reports[i - 1].median + 1e-9);
}

TEST_CASE("exhaustive sweep point drives the residual to zero") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator plus = DensityOperator::from_pure(plus_state());
  const ProtocolReport r = exhaustive_sweep_point(z2, plus, 8);
  CHECK(r.K == 256);
  CHECK(r.residuals[0] <= 1e-10);
}

TEST_CASE("converse audit: exhaustive ensemble is tight") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator plus = DensityOperator::from_pure(plus_state());
  const UnitaryEnsemble e = exhaustive_ensemble(z2, 4);
  const ConverseAudit a = converse_audit(z2, plus, e);
  CHECK(a.K == 16);
  CHECK(a.log2_K_per_n == doctest::Approx(1.0));
  CHECK(a.S_out == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(a.S_twirl_out == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(a.S_in == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(a.eps_achieved <= 1e-9);
  CHECK(a.rate_lower_bound == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(a.concavity_holds);
}

TEST_CASE("converse audit: single unitary cannot symmetrize") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator rho = DensityOperator::from_pure(amp_state(0.8));
  const UnitaryEnsemble e = sample_ensemble(z2, 3, 0.0, 17);
  REQUIRE(e.size() == 1);
  const ConverseAudit a = converse_audit(z2, rho, e);
  CHECK(a.S_out == doctest::Approx(a.S_in).epsilon(1e-7));
  CHECK(a.eps_achieved > 0.1);  // pure output stays far from its twirl
}

TEST_CASE("converse audit: concavity link on random ensembles") {
  const GroupRep z2 = z2_qubit();
  SplitRng rng(608);
  for (int trial = 0; trial < 8; ++trial) {
    const DensityOperator rho = random_density(rng, 2);
    const UnitaryEnsemble e =
        sample_ensemble(z2, 3, 0.4 + 0.5 * rng.uniform(), 900 + trial);
    const ConverseAudit a = converse_audit(z2, rho, e);
    CHECK(a.concavity_holds);
    // every term in the average equals n S(T(rho)) by the invariance lemma
    CHECK(a.term_avg_entropy ==
          doctest::Approx(a.n_s_twirl_single).epsilon(1e-7));
    CHECK(a.S_twirl_out >= a.term_avg_entropy - 1e-7);
  }
}

TEST_CASE("chernoff trial: construction at a premise-satisfying size") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator rho = DensityOperator::from_pure(amp_state(0.9));
  const int n = 8;
  const double delta = 0.5, eps = 0.1;
  const ChernoffTrialReport r =
      chernoff_bound_trial(z2, rho, n, delta, 64, 2, eps, 321);

  // typical masses clear 1 - eps here, so the trace chain is in force
  CHECK(r.mass_typical >= 1.0 - eps);
  CHECK(r.mass_typical_twirl >= 1.0 - eps);
  CHECK(r.trace_X >= 1.0 - 2.0 * eps);
  CHECK(r.trace_Y >= 1.0 - 3.0 * eps);
  CHECK(r.lambda_min >= r.lambda_lower_bound);
  // trace chain internals
  CHECK(r.trace_X >= r.mass_typical_twirl - (1.0 - r.mass_typical) - 1e-10);
  CHECK(r.trace_Y >= r.trace_X - eps - 1e-10);
}

TEST_CASE("chernoff trial: frozen small-instance fields") {
  // n = 6, delta = 0.25: the twirl's typical set is exactly the six
  // single-excitation strings, each carrying 0.9^5 * 0.1.
  const GroupRep z2 = z2_qubit();
  const DensityOperator rho = DensityOperator::from_pure(amp_state(0.9));
  const ChernoffTrialReport r =
      chernoff_bound_trial(z2, rho, 6, 0.25, 160, 4, 0.1, 55);
  CHECK(r.D_hat == 6);
  CHECK(r.support_rank == 6);
  const double p_string = std::pow(0.9, 5) * 0.1;
  CHECK(r.mass_typical == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.mass_typical_twirl ==
        doctest::Approx(6.0 * p_string).epsilon(1e-12));
  CHECK(r.trace_X == doctest::Approx(6.0 * p_string).epsilon(1e-10));
  CHECK(r.trace_Y == doctest::Approx(6.0 * p_string).epsilon(1e-10));
  CHECK(r.lambda_min ==
        doctest::Approx(std::exp2(-1.5) * p_string).epsilon(1e-10));
  CHECK(r.lambda_min >= r.lambda_lower_bound);
}

TEST_CASE("chernoff trial: huge ensembles stop failing") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator rho = DensityOperator::from_pure(amp_state(0.9));
  // K far above the threshold scale 2^{n(D_G + 3 delta)} ~ 160
  const ChernoffTrialReport r =
      chernoff_bound_trial(z2, rho, 6, 0.25, 60000, 6, 0.1, 77);
  CHECK(r.empirical_failure_rate == 0.0);
}

TEST_CASE("chernoff trial: empirical rate respects a nontrivial bound") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator rho = DensityOperator::from_pure(amp_state(0.9));
  const int batches = 200;
  const ChernoffTrialReport r =
      chernoff_bound_trial(z2, rho, 4, 0.5, 6000, batches, 0.3, 88);
  REQUIRE(r.bound <= 1.0);  // this configuration makes the bound binding
  const double sigma =
      std::sqrt(std::max(r.bound * (1.0 - r.bound), 1e-12) / batches);
  CHECK(r.empirical_failure_rate <= r.bound + 3.0 * sigma);
}

TEST_CASE("protocol entry points respect the dimension cap") {
  const GroupRep z2 = z2_qubit();
  const DensityOperator plus = DensityOperator::from_pure(plus_state());
  CHECK_THROWS_AS(rate_sweep(z2, plus, 20, {0.5}, 2, 1), DimensionCapExceeded);
  CHECK_THROWS_AS(converse_audit(z2, plus, exhaustive_ensemble(z2, 3), 4),
                  DimensionCapExceeded);
  CHECK_THROWS_AS(chernoff_bound_trial(z2, plus, 20, 0.3, 8, 2, 0.1, 1),
                  DimensionCapExceeded);
}
