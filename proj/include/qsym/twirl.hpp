#pragma once

#include "qsym/group.hpp"

namespace qsym {

/// Left-multiply factor `factor` of an n-fold tensor-product operator by the
/// d x d matrix u. The operand has d^n rows; columns are untouched.
Mat apply_factor_left(const Mat& u, const Mat& m, int factor, int n, int d);

/// Right-multiply factor `factor` by u^dag.
Mat apply_factor_right(const Mat& m, const Mat& u, int factor, int n, int d);

/// (u_0 (x) ... (x) u_{n-1}) m (same)^dag, built factor-wise so the full
/// tensor-product unitary is never materialized.
Mat conjugate_by_tuple(const std::vector<const Mat*>& us, Mat m, int d);

Vec apply_tuple_to_vec(const std::vector<const Mat*>& us, Vec v, int d);

/// Uniform group average of conjugations on a single copy.
Mat twirl_single(const GroupRep& rep, const Mat& tau);

/// Product twirl on n copies, applied one factor at a time. Equals the
/// |G|^n-tuple average but costs |G| * n structured products.
Mat tensor_twirl(const GroupRep& rep, int n, const Mat& tau);

/// The twirl as a named channel: uniform average over conjugations by the
/// representation, acting on `copies` tensor factors.
struct TwirlChannel {
  GroupRep rep;
  int copies = 1;

  TwirlChannel(GroupRep r, int n = 1);
  Eigen::Index total_dim() const;
  Mat apply(const Mat& tau) const;
};

Mat twirl(const TwirlChannel& ch, const Mat& tau);

struct SymmetryWitness {
  bool symmetric = false;
  double twirl_deviation = 0.0;    // ||rho - T(rho)||_1, the decision value
  int worst_element = 0;           // argmax_g ||U_g rho U_g^dag - rho||_1
  double worst_deviation = 0.0;
};

/// Invariance test under the whole group, with the twirl distance as the
/// decision criterion and the per-element maximum as the witness.
SymmetryWitness is_symmetric(const GroupRep& rep, const Mat& rho, double tol,
                             const ToleranceConfig& cfg = default_tols());

/// Orthonormal (Hilbert-Schmidt) Hermitian basis of the twirl's fixed-point
/// operator space, obtained by twirling a Hermitian generator set and
/// discarding near-null vectors.
std::vector<Mat> symmetric_basis(const GroupRep& rep,
                                 const ToleranceConfig& cfg = default_tols());

struct PreservationWitness {
  bool preserving = false;
  int worst_basis_index = 0;
  double worst_deviation = 0.0;
};

/// Does V map every symmetric operator to a symmetric operator? Linearity
/// makes checking the fixed-point basis sufficient.
PreservationWitness is_symmetry_preserving(
    const GroupRep& rep, const Mat& v, double tol,
    const ToleranceConfig& cfg = default_tols());

}  // namespace qsym
