#include "qsym/twirl.hpp"

#include "qsym/distance.hpp"

namespace qsym {

namespace {

Eigen::Index factor_strides(int factor, int n, int d, Eigen::Index* lo_out) {
  Eigen::Index lo = 1, hi = 1;
  for (int i = factor + 1; i < n; ++i) lo *= d;
  for (int i = 0; i < factor; ++i) hi *= d;
  *lo_out = lo;
  return hi;
}

}  // namespace

Mat apply_factor_left(const Mat& u, const Mat& m, int factor, int n, int d) {
  Eigen::Index lo;
  const Eigen::Index hi = factor_strides(factor, n, d, &lo);
  Mat out = Mat::Zero(m.rows(), m.cols());
  for (Eigen::Index h = 0; h < hi; ++h) {
    const Eigen::Index base = h * d * lo;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const cplx coef = u(a, b);
        if (coef == cplx(0.0, 0.0)) continue;
        out.middleRows(base + a * lo, lo) +=
            coef * m.middleRows(base + b * lo, lo);
      }
  }
  return out;
}

Mat apply_factor_right(const Mat& m, const Mat& u, int factor, int n, int d) {
  Eigen::Index lo;
  const Eigen::Index hi = factor_strides(factor, n, d, &lo);
  Mat out = Mat::Zero(m.rows(), m.cols());
  for (Eigen::Index h = 0; h < hi; ++h) {
    const Eigen::Index base = h * d * lo;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const cplx coef = std::conj(u(a, b));
        if (coef == cplx(0.0, 0.0)) continue;
        out.middleCols(base + a * lo, lo) +=
            coef * m.middleCols(base + b * lo, lo);
      }
  }
  return out;
}

Mat conjugate_by_tuple(const std::vector<const Mat*>& us, Mat m, int d) {
  const int n = static_cast<int>(us.size());
  for (int i = 0; i < n; ++i) m = apply_factor_left(*us[i], m, i, n, d);
  for (int i = 0; i < n; ++i) m = apply_factor_right(m, *us[i], i, n, d);
  return m;
}

Vec apply_tuple_to_vec(const std::vector<const Mat*>& us, Vec v, int d) {
  const int n = static_cast<int>(us.size());
  for (int i = 0; i < n; ++i) {
    Mat col = apply_factor_left(*us[i], v, i, n, d);
    v = col.col(0);
  }
  return v;
}

Mat twirl_single(const GroupRep& rep, const Mat& tau) {
  if (tau.rows() != rep.dim() || tau.cols() != rep.dim())
    throw DimensionMismatch("twirl: operand dimension mismatch");
  Mat out = Mat::Zero(tau.rows(), tau.cols());
  for (int g = 0; g < rep.order(); ++g)
    out += rep.unitary(g) * tau * rep.unitary(g).adjoint();
  return out / static_cast<double>(rep.order());
}

Mat tensor_twirl(const GroupRep& rep, int n, const Mat& tau) {
  const int d = static_cast<int>(rep.dim());
  const auto expected = static_cast<Eigen::Index>(pow_dim(d, n));
  if (tau.rows() != expected || tau.cols() != expected)
    throw DimensionMismatch("tensor_twirl: operand dimension mismatch");
  Mat out = tau;
  for (int factor = 0; factor < n; ++factor) {
    Mat acc = Mat::Zero(out.rows(), out.cols());
    for (int g = 0; g < rep.order(); ++g) {
      Mat term = apply_factor_left(rep.unitary(g), out, factor, n, d);
      acc += apply_factor_right(term, rep.unitary(g), factor, n, d);
    }
    out = acc / static_cast<double>(rep.order());
  }
  return out;
}

TwirlChannel::TwirlChannel(GroupRep r, int n) : rep(std::move(r)), copies(n) {
  if (copies < 1) throw DimensionMismatch("TwirlChannel: copies must be >= 1");
}

Eigen::Index TwirlChannel::total_dim() const {
  return static_cast<Eigen::Index>(pow_dim(rep.dim(), copies));
}

Mat TwirlChannel::apply(const Mat& tau) const {
  return copies == 1 ? twirl_single(rep, tau)
                     : tensor_twirl(rep, copies, tau);
}

Mat twirl(const TwirlChannel& ch, const Mat& tau) { return ch.apply(tau); }

SymmetryWitness is_symmetric(const GroupRep& rep, const Mat& rho, double tol,
                             const ToleranceConfig& cfg) {
  if (rho.rows() != rep.dim() || rho.cols() != rep.dim())
    throw DimensionMismatch("is_symmetric: operand dimension mismatch");
  SymmetryWitness w;
  w.twirl_deviation = trace_distance(rho, twirl_single(rep, rho), cfg);
  w.symmetric = w.twirl_deviation <= tol;
  for (int g = 0; g < rep.order(); ++g) {
    const double dev = trace_distance(
        rep.unitary(g) * rho * rep.unitary(g).adjoint(), rho, cfg);
    if (dev > w.worst_deviation) {
      w.worst_deviation = dev;
      w.worst_element = g;
    }
  }
  return w;
}

std::vector<Mat> symmetric_basis(const GroupRep& rep,
                                 const ToleranceConfig& cfg) {
  const Eigen::Index d = rep.dim();
  std::vector<Mat> generators;
  generators.reserve(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Mat e = Mat::Zero(d, d);
    e(i, i) = 1.0;
    generators.push_back(e);
  }
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      Mat re = Mat::Zero(d, d), im = Mat::Zero(d, d);
      re(i, j) = re(j, i) = 1.0;
      im(i, j) = cplx(0.0, 1.0);
      im(j, i) = cplx(0.0, -1.0);
      generators.push_back(re);
      generators.push_back(im);
    }

  std::vector<Mat> basis;
  const double discard = cfg.eig * static_cast<double>(d);
  for (const Mat& gen : generators) {
    Mat v = twirl_single(rep, gen);
    // Two-pass Gram-Schmidt; the HS inner product of Hermitian operators
    // is real.
    for (int pass = 0; pass < 2; ++pass)
      for (const Mat& b : basis)
        v -= (b.adjoint() * v).trace().real() * b;
    const double norm = std::sqrt((v.adjoint() * v).trace().real());
    if (norm < discard) continue;
    v /= norm;
    v = (v + v.adjoint()) / 2.0;
    basis.push_back(std::move(v));
  }
  return basis;
}

PreservationWitness is_symmetry_preserving(const GroupRep& rep, const Mat& v,
                                           double tol,
                                           const ToleranceConfig& cfg) {
  if (v.rows() != rep.dim() || v.cols() != rep.dim())
    throw DimensionMismatch("is_symmetry_preserving: dimension mismatch");
  if (max_abs(v.adjoint() * v - Mat::Identity(v.rows(), v.cols())) >
      cfg.eig * v.rows())
    throw NonUnitaryInput("is_symmetry_preserving: input is not unitary");
  PreservationWitness w;
  const std::vector<Mat> basis = symmetric_basis(rep, cfg);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Mat moved = v * basis[k] * v.adjoint();
    const double dev = trace_distance(twirl_single(rep, moved), moved, cfg);
    if (dev > w.worst_deviation) {
      w.worst_deviation = dev;
      w.worst_basis_index = static_cast<int>(k);
    }
  }
  w.preserving = w.worst_deviation <= tol;
  return w;
}

}  // namespace qsym
