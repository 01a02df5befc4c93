#include "qsym/ref.hpp"

#include <cmath>

#include "qsym/distance.hpp"

namespace qsym {

double ref_closed_form(const GroupRep& rep, const DensityOperator& rho,
                       const ToleranceConfig& cfg) {
  if (rho.dim() != rep.dim())
    throw DimensionMismatch("ref_closed_form: dimension mismatch");
  return spectrum_entropy(twirl_single(rep, rho.mat()), cfg) -
         von_neumann_entropy(rho);
}

namespace {

// Gibbs state of H with H confined to the fixed-point algebra; stays
// strictly positive, which keeps D(rho||sigma) finite along the descent.
Mat gibbs(const Mat& h, const ToleranceConfig& cfg, double* log_z) {
  EigResult eig = hermitian_eig(h, cfg);
  const double shift = eig.values.maxCoeff();
  RVec w = (eig.values.array() - shift).exp();
  const double z = w.sum();
  *log_z = std::log(z) + shift;
  return eig.vectors * (w / z).asDiagonal() * eig.vectors.adjoint();
}

// D(rho || sigma(H)) in bits for sigma = exp(H)/Z: the entropy term of rho
// is constant along the descent, so the objective is
// (log Z - Tr[rho H]) / ln 2 - S(rho).
double objective_bits(const Mat& rho, double s_rho, const Mat& h,
                      double log_z) {
  const double tr_rho_h = (rho * h).real().trace();
  return (log_z - tr_rho_h) / M_LN2 - s_rho;
}

// D(a || b) in bits for a full-rank b; a may be singular.
double rel_entropy_bits(const Mat& a, const Mat& b,
                        const ToleranceConfig& cfg) {
  const EigResult eb = hermitian_eig(b, cfg);
  const Mat a_in_b = eb.vectors.adjoint() * a * eb.vectors;
  double cross = 0.0;
  for (Eigen::Index i = 0; i < eb.values.size(); ++i)
    cross -= a_in_b(i, i).real() * std::log2(std::max(eb.values(i), 1e-300));
  return cross - spectrum_entropy(a, cfg);
}

}  // namespace

RefResult ref_variational(const GroupRep& rep, const DensityOperator& rho,
                          int max_iter, double tol,
                          const ToleranceConfig& cfg) {
  if (rho.dim() != rep.dim())
    throw DimensionMismatch("ref_variational: dimension mismatch");
  const Eigen::Index d = rep.dim();
  const double s_rho = von_neumann_entropy(rho);
  const Mat target = twirl_single(rep, rho.mat());

  RefResult out;
  out.closed_form = spectrum_entropy(target, cfg) - s_rho;

  // H = 0 is the maximally mixed symmetric state, an interior start.
  Mat h = Mat::Zero(d, d);
  double log_z = 0.0;
  Mat sigma = gibbs(h, cfg, &log_z);
  double f = objective_bits(rho.mat(), s_rho, h, log_z);

  // Exact distance to optimal: for sigma in the fixed-point algebra the
  // objective splits as D(rho||sigma) = D(rho||T(rho)) + D(T(rho)||sigma),
  // so the second term certifies the remaining gap without consulting the
  // closed form's value.
  double cert = rel_entropy_bits(target, sigma, cfg);
  bool converged = cert <= tol;

  int iter = 0;
  for (; iter < max_iter && !converged; ++iter) {
    // HS gradient of the objective restricted to the fixed-point space.
    const Mat grad = (sigma - target) / M_LN2;

    double step = 1.0;
    bool accepted = false;
    Mat h_next, sigma_next;
    double f_next = f, log_z_next = 0.0;
    while (step > 1e-18) {
      h_next = twirl_single(rep, h - step * grad);  // projection is exact
      sigma_next = gibbs(h_next, cfg, &log_z_next);
      f_next = objective_bits(rho.mat(), s_rho, h_next, log_z_next);
      if (f_next < f) {
        accepted = true;
        break;
      }
      step /= 2.0;
    }
    if (!accepted) break;  // stalled at numerical precision
    const double improvement = f - f_next;
    h = std::move(h_next);
    sigma = std::move(sigma_next);
    f = f_next;
    cert = rel_entropy_bits(target, sigma, cfg);
    if (cert <= tol) {
      converged = true;
      ++iter;
      break;
    }
    if (improvement < tol / 10.0) {
      ++iter;
      break;
    }
  }

  out.variational = f;
  out.gap = std::abs(out.closed_form - out.variational);
  out.minimizer = sigma;
  out.minimizer_twirl_distance = trace_distance(sigma, target, cfg);
  out.iterations = iter;
  out.converged = converged;
  return out;
}

EntropyInvarianceCheck lemma_entropy_invariance_check(
    const GroupRep& rep, const DensityOperator& rho, const Mat& v,
    const ToleranceConfig& cfg) {
  const PreservationWitness w = is_symmetry_preserving(rep, v, cfg.test, cfg);
  if (!w.preserving)
    throw NotSymmetryPreserving(
        "lemma_entropy_invariance_check: V moves basis element " +
        std::to_string(w.worst_basis_index) + " off the symmetric set by " +
        std::to_string(w.worst_deviation));
  EntropyInvarianceCheck out;
  const Mat rotated = v * rho.mat() * v.adjoint();
  out.lhs = spectrum_entropy(twirl_single(rep, rotated), cfg);
  out.rhs = spectrum_entropy(twirl_single(rep, rho.mat()), cfg);
  out.holds = std::abs(out.lhs - out.rhs) <= cfg.test;
  return out;
}

CollectiveRefSeries collective_ref_series(const GroupRep& rep,
                                          const DensityOperator& rho,
                                          int n_max, std::uint64_t dim_cap,
                                          const ToleranceConfig& cfg) {
  if (rho.dim() != rep.dim())
    throw DimensionMismatch("collective_ref_series: dimension mismatch");
  if (n_max < 1)
    throw DimensionMismatch("collective_ref_series: n_max must be >= 1");
  if (pow_dim(rep.dim(), n_max) > dim_cap)
    throw DimensionCapExceeded("collective_ref_series: dim^" +
                               std::to_string(n_max) + " exceeds cap " +
                               std::to_string(dim_cap));
  CollectiveRefSeries series;
  const double s_rho = von_neumann_entropy(rho);
  for (int n = 1; n <= n_max; ++n) {
    const Mat rho_n = kron_pow(rho.mat(), n);
    Mat collective = Mat::Zero(rho_n.rows(), rho_n.cols());
    for (int g = 0; g < rep.order(); ++g) {
      const Mat u_n = kron_pow(rep.unitary(g), n);
      collective += u_n * rho_n * u_n.adjoint();
    }
    collective /= static_cast<double>(rep.order());

    const double s_collective = spectrum_entropy(collective, cfg);
    const double s_product =
        spectrum_entropy(tensor_twirl(rep, n, rho_n), cfg);
    series.n_values.push_back(n);
    series.per_copy_values.push_back((s_collective - n * s_rho) / n);
    series.product_per_copy_values.push_back((s_product - n * s_rho) / n);
  }
  return series;
}

}  // namespace qsym
