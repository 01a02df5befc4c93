#include "qsym/random.hpp"

#include <Eigen/QR>

namespace qsym {

namespace {

Mat ginibre(SplitRng& rng, Eigen::Index d) {
  Mat g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      g(i, j) = cplx(rng.gaussian(), rng.gaussian());
  return g;
}

}  // namespace

Mat random_hermitian(SplitRng& rng, Eigen::Index d) {
  Mat g = ginibre(rng, d);
  return (g + g.adjoint()) / 2.0;
}

DensityOperator random_density(SplitRng& rng, Eigen::Index d) {
  Mat g = ginibre(rng, d);
  Mat rho = g * g.adjoint();
  rho /= rho.real().trace();
  return DensityOperator(rho);
}

Vec random_pure(SplitRng& rng, Eigen::Index d) {
  Vec v(d);
  for (Eigen::Index i = 0; i < d; ++i)
    v(i) = cplx(rng.gaussian(), rng.gaussian());
  return v / v.norm();
}

Mat random_unitary(SplitRng& rng, Eigen::Index d) {
  Mat g = ginibre(rng, d);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge so the distribution does not depend on QR conventions.
  for (Eigen::Index i = 0; i < d; ++i) {
    cplx rii = r(i, i);
    q.col(i) *= (std::abs(rii) > 0.0) ? rii / std::abs(rii) : cplx(1.0, 0.0);
  }
  return q;
}

Mat random_projector(SplitRng& rng, Eigen::Index d, Eigen::Index rank) {
  Mat u = random_unitary(rng, d);
  Mat p = Mat::Zero(d, d);
  for (Eigen::Index i = 0; i < rank; ++i)
    p += u.col(i) * u.col(i).adjoint();
  return (p + p.adjoint()) / 2.0;
}

}  // namespace qsym
