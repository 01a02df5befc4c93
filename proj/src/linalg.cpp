#include "qsym/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace qsym {

double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

namespace {

void check_hermitian_input(const Mat& m, const ToleranceConfig& tol,
                           const char* who) {
  if (m.rows() != m.cols())
    throw DimensionMismatch(std::string(who) + ": matrix is not square");
  if (!m.allFinite())
    throw NonHermitianInput(std::string(who) + ": non-finite entries");
  // Scale-relative check: products of large operators build up roundoff
  // proportionally to their magnitude.
  const double scale = std::max(1.0, max_abs(m));
  if (!is_hermitian(m, tol.herm * scale))
    throw NonHermitianInput(std::string(who) + ": matrix is not Hermitian");
}

}  // namespace

EigResult hermitian_eig(const Mat& m, const ToleranceConfig& tol) {
  check_hermitian_input(m, tol, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<Mat> solver(m);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("hermitian_eig: iteration cap exceeded");
  return EigResult{solver.eigenvalues(), solver.eigenvectors()};
}

RVec hermitian_eigenvalues(const Mat& m, const ToleranceConfig& tol) {
  check_hermitian_input(m, tol, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("hermitian_eigenvalues: iteration cap exceeded");
  return solver.eigenvalues();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron_pow(const Mat& a, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, a);
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Vec kron_vec_pow(const Vec& a, int n) {
  Vec out = Vec::Ones(1);
  for (int i = 0; i < n; ++i) out = kron_vec(out, a);
  return out;
}

bool op_leq(const Mat& a, const Mat& b, const ToleranceConfig& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("op_leq: operand dimensions differ");
  check_hermitian_input(a, tol, "op_leq");
  check_hermitian_input(b, tol, "op_leq");
  Mat diff = b - a;
  // Exactly diagonal differences (common for commuting pinched operators)
  // reduce to a scan of the diagonal.
  bool diagonal = true;
  for (Eigen::Index j = 0; j < diff.cols() && diagonal; ++j)
    for (Eigen::Index i = 0; i < diff.rows(); ++i)
      if (i != j && diff(i, j) != cplx(0.0, 0.0)) {
        diagonal = false;
        break;
      }
  double min_eig;
  if (diagonal) {
    min_eig = diff.diagonal().real().minCoeff();
  } else {
    min_eig = hermitian_eigenvalues(diff, tol)(0);
  }
  return min_eig >= -tol.eig;
}

Mat partial_trace(const Mat& m, Eigen::Index da, Eigen::Index db, int keep) {
  if (m.rows() != da * db || m.cols() != da * db)
    throw DimensionMismatch("partial_trace: dimension does not factor");
  if (keep == 0) {
    Mat out = Mat::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < db; ++k)
          out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  Mat out = Mat::Zero(db, db);
  for (Eigen::Index i = 0; i < db; ++i)
    for (Eigen::Index j = 0; j < db; ++j)
      for (Eigen::Index k = 0; k < da; ++k)
        out(i, j) += m(k * db + i, k * db + j);
  return out;
}

Mat matrix_sqrt_psd(const Mat& m, const ToleranceConfig& tol) {
  EigResult eig = hermitian_eig(m, tol);
  RVec vals = eig.values;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol.psd)
      throw NotPositiveSemidefinite(
          "matrix_sqrt_psd: eigenvalue " + std::to_string(vals(i)) +
          " below clamping window");
    if (vals(i) < 0.0) vals(i) = 0.0;
  }
  return eig.vectors * vals.cwiseSqrt().asDiagonal() * eig.vectors.adjoint();
}

}  // namespace qsym
