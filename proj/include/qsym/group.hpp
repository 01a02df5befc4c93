#pragma once

#include <vector>

#include "qsym/linalg.hpp"

namespace qsym {

/// Finite group given by its multiplication table. Construction verifies
/// closure, the identity and inverse laws, and associativity (exhaustively
/// for order <= 64, on 10 * order^2 deterministic random triples above).
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int>> table);
  static FiniteGroup cyclic(int order);

  int order() const { return order_; }
  int mult(int g, int h) const { return table_[g][h]; }
  int identity() const { return identity_; }
  int inverse(int g) const { return inverse_[g]; }

 private:
  FiniteGroup() = default;
  int order_ = 0;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Verified unitary representation g -> U_g. Unitarity of every element and
/// the homomorphism law are checked on construction (all pairs for
/// order <= 64, sampled pairs above); projective families fail the
/// homomorphism check and are rejected.
class GroupRep {
 public:
  GroupRep(FiniteGroup group, std::vector<Mat> unitaries,
           const ToleranceConfig& tol = default_tols());

  const FiniteGroup& group() const { return group_; }
  int order() const { return group_.order(); }
  Eigen::Index dim() const { return dim_; }
  const Mat& unitary(int g) const { return unitaries_[g]; }

 private:
  FiniteGroup group_;
  Eigen::Index dim_ = 0;
  std::vector<Mat> unitaries_;
};

/// Z_d acting diagonally, U_g = diag(exp(2 pi i charges_j g / d)).
/// The representation dimension is charges.size().
GroupRep make_cyclic_rep(int d, const std::vector<int>& charges,
                         const ToleranceConfig& tol = default_tols());

/// User-supplied group: multiplication table plus one unitary per element.
GroupRep make_explicit_rep(std::vector<std::vector<int>> mult_table,
                           std::vector<Mat> unitaries,
                           const ToleranceConfig& tol = default_tols());

}  // namespace qsym
