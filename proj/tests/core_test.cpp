#include <doctest.h>

#include <cmath>

#include "qsym/distance.hpp"
#include "qsym/entropy.hpp"
#include "qsym/inequalities.hpp"
#include "qsym/linalg.hpp"
#include "qsym/random.hpp"
#include "support.hpp"

using namespace qsym;
using namespace qsym::test;

TEST_CASE("hermitian_eig: identity and diagonal cases") {
  const EigResult id = hermitian_eig(Mat::Identity(2, 2));
  CHECK(id.values(0) == doctest::Approx(1.0));
  CHECK(id.values(1) == doctest::Approx(1.0));

  Mat z = Mat::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  const EigResult ez = hermitian_eig(z);
  CHECK(ez.values(0) == doctest::Approx(-1.0));  // ascending
  CHECK(ez.values(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig: random 8x8 reconstruction and unitarity") {
  SplitRng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat h = random_hermitian(rng, 8);
    const EigResult e = hermitian_eig(h);
    const Mat rebuilt =
        e.vectors * e.values.asDiagonal() * e.vectors.adjoint();
    CHECK(max_abs(rebuilt - h) <= 1e-9);
    CHECK(max_abs(e.vectors.adjoint() * e.vectors - Mat::Identity(8, 8)) <=
          1e-10 * 8);
    for (Eigen::Index i = 1; i < 8; ++i)
      CHECK(e.values(i) >= e.values(i - 1));
  }
}

TEST_CASE("hermitian_eig: rejects non-Hermitian input") {
  Mat m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(hermitian_eig(m), NonHermitianInput);
}

TEST_CASE("density operator validation") {
  CHECK_THROWS_AS(DensityOperator(Mat::Identity(2, 3)), DimensionMismatch);
  // trace 2
  CHECK_THROWS_AS(DensityOperator(Mat::Identity(2, 2)), NormalizationError);
  // negative eigenvalue beyond the clamping window
  Mat neg(2, 2);
  neg << 1.1, 0.0, 0.0, -0.1;
  CHECK_THROWS_AS(DensityOperator{neg}, NotPositiveSemidefinite);
  // tiny negative eigenvalue gets clamped and renormalized
  Mat tiny(2, 2);
  tiny << 1.0 + 5e-11, 0.0, 0.0, -5e-11;
  const DensityOperator ok(tiny);
  CHECK(ok.eigenvalues()(0) == 0.0);
  CHECK(ok.eigenvalues()(1) == doctest::Approx(1.0));
}

TEST_CASE("von Neumann entropy: pinned values") {
  CHECK(von_neumann_entropy(DensityOperator::from_pure(basis_state(2, 0))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(diag_state({0.5, 0.5})) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Direct Shannon formula as the oracle for a non-degenerate spectrum.
  const std::vector<double> spec = {0.5, 0.3, 0.2};
  double expected = 0.0;
  for (double p : spec) expected -= p * std::log2(p);
  CHECK(expected == doctest::Approx(1.48548).epsilon(1e-5));
  CHECK(von_neumann_entropy(diag_state(spec)) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("entropy bounds and unitary invariance on random states") {
  SplitRng rng(202);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.bounded(4));
    const DensityOperator rho = random_density(rng, d);
    const double s = von_neumann_entropy(rho);
    CHECK(s >= -1e-12);
    CHECK(s <= std::log2(static_cast<double>(d)) + 1e-12);

    const Mat u = random_unitary(rng, d);
    const DensityOperator rotated(u * rho.mat() * u.adjoint());
    CHECK(std::abs(s - von_neumann_entropy(rotated)) <= 1e-7);
  }
}

TEST_CASE("entropy concavity on random ensembles") {
  SplitRng rng(203);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.bounded(3));
    const DensityOperator a = random_density(rng, d);
    const DensityOperator b = random_density(rng, d);
    const double p = rng.uniform();
    const DensityOperator mix(p * a.mat() + (1.0 - p) * b.mat());
    CHECK(von_neumann_entropy(mix) >=
          p * von_neumann_entropy(a) + (1.0 - p) * von_neumann_entropy(b) -
              1e-7);
  }
}

TEST_CASE("entropy subadditivity on random bipartite states") {
  SplitRng rng(204);
  for (int trial = 0; trial < 15; ++trial) {
    const DensityOperator ab = random_density(rng, 6);
    const double s_ab = von_neumann_entropy(ab);
    const double s_a =
        spectrum_entropy(partial_trace(ab.mat(), 2, 3, 0));
    const double s_b =
        spectrum_entropy(partial_trace(ab.mat(), 2, 3, 1));
    CHECK(s_a + s_b >= s_ab - 1e-7);
  }
}

TEST_CASE("relative entropy: pinned values and support detection") {
  SplitRng rng(205);
  const DensityOperator rho = random_density(rng, 3);
  CHECK(relative_entropy(rho, rho).bits() ==
        doctest::Approx(0.0).epsilon(1e-9));

  const DensityOperator ket0 = DensityOperator::from_pure(basis_state(2, 0));
  CHECK(relative_entropy(ket0, diag_state({0.5, 0.5})).bits() ==
        doctest::Approx(1.0).epsilon(1e-12));

  const DensityOperator ket1 = DensityOperator::from_pure(basis_state(2, 1));
  CHECK(relative_entropy(ket0, ket1).is_infinite());
  CHECK_THROWS_AS(relative_entropy(ket0, rho), DimensionMismatch);
}

TEST_CASE("Klein inequality on random pairs") {
  SplitRng rng(206);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.bounded(3));
    const DensityOperator a = random_density(rng, d);
    const DensityOperator b = random_density(rng, d);
    const RelEntropy dab = relative_entropy(a, b);
    REQUIRE(!dab.is_infinite());
    CHECK(dab.bits() >= -1e-10);
    if (dab.bits() <= 1e-7) CHECK(trace_distance(a, b) <= 1e-3);
    if (trace_distance(a, b) <= 1e-9) CHECK(dab.bits() <= 1e-7);
  }
}

TEST_CASE("trace distance: pinned values") {
  const Mat p0 = projector_on(basis_state(2, 0));
  const Mat p1 = projector_on(basis_state(2, 1));
  CHECK(trace_distance(p0, p0) == doctest::Approx(0.0));
  CHECK(trace_distance(p0, p1) == doctest::Approx(2.0));
  CHECK(trace_distance(p0, Mat::Identity(2, 2) / 2.0) ==
        doctest::Approx(1.0));
}

TEST_CASE("trace distance triangle inequality on random triples") {
  SplitRng rng(207);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.bounded(3));
    const Mat a = random_density(rng, d).mat();
    const Mat b = random_density(rng, d).mat();
    const Mat c = random_density(rng, d).mat();
    CHECK(trace_distance(a, c) <=
          trace_distance(a, b) + trace_distance(b, c) + 1e-10);
  }
}

TEST_CASE("fannes_eta: pinned values and branch behavior") {
  CHECK(fannes_eta(0.0) == 0.0);
  CHECK(fannes_eta(1.0) == doctest::Approx(1.0 + 1.0 / M_E).epsilon(1e-12));
  CHECK_THROWS_AS(fannes_eta(-0.1), NegativeInput);

  // The base-2 first branch does not meet x + 1/e at the breakpoint: the
  // left limit exceeds the right branch by (log2(e) - 1)/e. Both branches
  // are envelopes; the jump is downward, never upward.
  const double x = 1.0 / M_E;
  const double left = x - x * std::log2(x);
  const double right = x + 1.0 / M_E;
  CHECK(left - right ==
        doctest::Approx((std::log2(M_E) - 1.0) / M_E).epsilon(1e-12));
  CHECK(fannes_eta(x) == doctest::Approx(right).epsilon(1e-12));
  CHECK(fannes_eta(x - 1e-9) > fannes_eta(x));
}

TEST_CASE("Fannes envelope on random pairs") {
  SplitRng rng(208);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.bounded(3));
    const DensityOperator a = random_density(rng, d);
    // mix of far and near pairs
    const DensityOperator b =
        trial % 2 == 0
            ? random_density(rng, d)
            : DensityOperator(0.9 * a.mat() +
                              0.1 * random_density(rng, d).mat());
    const double eps = trace_distance(a, b);
    const double lhs =
        std::abs(von_neumann_entropy(a) - von_neumann_entropy(b));
    CHECK(lhs <= fannes_eta(eps) * std::log2(static_cast<double>(d)) + 1e-7);
  }
}

TEST_CASE("gentle measurement: identity and eigenprojector cases") {
  SplitRng rng(209);
  const DensityOperator rho = random_density(rng, 2);
  const BoundCheck id_case =
      gentle_measurement_check(rho.mat(), Mat::Identity(2, 2), 0.0);
  CHECK(id_case.lhs <= 1e-10);
  CHECK(id_case.holds);

  const Vec psi = random_pure(rng, 4);
  const Mat pure = projector_on(psi);
  const BoundCheck self_case = gentle_measurement_check(pure, pure, 0.0);
  CHECK(self_case.lhs <= 1e-7);
  CHECK(self_case.holds);
}

TEST_CASE("gentle measurement: random effects hold the bound") {
  SplitRng rng(210);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.bounded(3));
    const DensityOperator rho = random_density(rng, d);
    const Mat x = random_projector(rng, d, 1 + rng.bounded(d));
    const double overlap = (rho.mat() * x).real().trace();
    if (overlap < 0.7) continue;
    const double eps = 1.0 - overlap + 1e-12;
    const BoundCheck c = gentle_measurement_check(rho.mat(), x, eps);
    CHECK(c.holds);
    ++checked;
  }
  CHECK(checked > 10);
  // violated overlap premise
  const DensityOperator rho = random_density(rng, 2);
  const Mat far = projector_on(basis_state(2, 0));
  CHECK_THROWS_AS(
      gentle_measurement_check(projector_on(basis_state(2, 1)), far, 0.01),
      PreconditionViolated);
}

TEST_CASE("corollary distance check") {
  SplitRng rng(211);
  const DensityOperator rho = random_density(rng, 2);
  const BoundCheck trivial = corollary_distance_check(
      rho.mat(), rho.mat(), Mat::Identity(2, 2), 0.0, 0.0);
  CHECK(trivial.lhs <= 1e-10);
  CHECK(trivial.bound == 0.0);

  // rho = sigma, projector keeps weight 0.9: eps2 = 0, bound 6 sqrt(0.2)
  Mat diag = Mat::Zero(2, 2);
  diag(0, 0) = 0.9;
  diag(1, 1) = 0.1;
  const Mat p0 = projector_on(basis_state(2, 0));
  const BoundCheck c = corollary_distance_check(diag, diag, p0, 0.1, 0.0);
  CHECK(c.lhs <= 1e-12);
  CHECK(c.bound == doctest::Approx(6.0 * std::sqrt(0.2)).epsilon(1e-12));
  CHECK(c.holds);

  // random 4-dim pairs with measured epsilons always satisfy the bound
  for (int trial = 0; trial < 30; ++trial) {
    const DensityOperator a = random_density(rng, 4);
    const DensityOperator b = random_density(rng, 4);
    const Mat proj = random_projector(rng, 4, 3);
    const double eps1 =
        std::max(0.0, 1.0 - (proj * a.mat() * proj).real().trace()) + 1e-12;
    const double eps2 =
        trace_distance(proj * a.mat() * proj, proj * b.mat() * proj) + 1e-12;
    const BoundCheck r =
        corollary_distance_check(a.mat(), b.mat(), proj, eps1, eps2);
    CHECK(r.holds);
  }
}

TEST_CASE("kron convention and operator ordering") {
  CHECK(max_abs(kron(Mat::Identity(2, 2), Mat::Identity(2, 2)) -
                Mat::Identity(4, 4)) == 0.0);

  // row convention (i1, i2) -> i1 * d2 + i2
  Mat a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 5.0, 6.0, 7.0;
  const Mat k = kron(a, b);
  CHECK(k(0, 1) == cplx(5.0, 0.0));   // a(0,0) b(0,1)
  CHECK(k(2, 0) == cplx(0.0, 0.0));   // a(1,0) b(0,0)
  CHECK(k(3, 2) == cplx(4.0 * 6.0, 0.0));

  CHECK(op_leq(Mat::Zero(2, 2), Mat::Identity(2, 2)));
  Mat lhs = Mat::Zero(2, 2), rhs = Mat::Zero(2, 2);
  lhs(0, 0) = 0.6;
  rhs(0, 0) = 0.5;
  rhs(1, 1) = 1.0;
  CHECK_FALSE(op_leq(lhs, rhs));  // difference has eigenvalue -0.1
  CHECK_THROWS_AS(op_leq(Mat::Zero(2, 2), Mat::Identity(3, 3)),
                  DimensionMismatch);
}

TEST_CASE("probability vector validation") {
  CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), NormalizationError);
  CHECK_THROWS_AS(ProbabilityVector({1.2, -0.2}), NegativeInput);
  const ProbabilityVector p({0.25, 0.75});
  CHECK(p[1] == doctest::Approx(0.75));
}
