#pragma once

#include <optional>
#include <vector>

#include "qsym/density.hpp"

namespace qsym {

/// Entropy-typical sequences of a (possibly degeneracy-weighted) source.
///
/// Symbols carry a probability q_j and an integer multiplicity m_j (the
/// number of identical source letters folded into the symbol); the plain
/// classical set has all multiplicities equal to one. A sequence is typical
/// when its probability prod q_{x_i} lies within 2^{+-n delta} of 2^{-n H}.
/// Mass and cardinality are exact type-class sums, so no enumeration is
/// needed even at n ~ 10^4; the explicit sequence list is only filled when
/// the alphabet power fits under the enumeration cap.
struct TypicalIndexSet {
  int n = 0;
  double delta = 0.0;
  std::vector<double> symbol_probs;
  std::vector<int> multiplicities;
  double entropy_bits = 0.0;  // H of the weighted source
  double total_mass = 0.0;
  double log2_cardinality = 0.0;  // -inf when the set is empty
  double cardinality = 0.0;       // dimension-weighted count; may be huge
  bool cardinality_exact = false; // fits integer arithmetic (< 2^53)
  std::vector<std::vector<std::uint8_t>> sequences;
  bool enumerated = false;

  /// log2 prod q_{x_i}; -inf when a zero-probability symbol occurs.
  double log2_prob(const std::vector<std::uint8_t>& seq) const;
  bool contains(const std::vector<std::uint8_t>& seq) const;
};

inline constexpr std::uint64_t kDefaultEnumCap = 1u << 20;

TypicalIndexSet typical_set(const ProbabilityVector& p, int n, double delta,
                            std::uint64_t enum_cap = kDefaultEnumCap);

/// Weighted variant used by the subspace construction.
TypicalIndexSet typical_set_weighted(const std::vector<double>& probs,
                                     const std::vector<int>& multiplicities,
                                     int n, double delta,
                                     std::uint64_t enum_cap = kDefaultEnumCap);

/// Projector onto the span of typical eigenvector tensor products of
/// rho^{(x) n}. Eigenvalues within tol.eig of each other are merged into a
/// single symbol before the classical reduction. The dense projector (and
/// its sandwich with rho^{(x) n}) is materialized only when d^n fits under
/// the dimension cap; the classical index set is always available.
class TypicalProjector {
 public:
  TypicalProjector(const DensityOperator& rho, int n, double delta,
                   std::uint64_t dim_cap = kDefaultDimCap,
                   const ToleranceConfig& cfg = default_tols());

  int n() const { return n_; }
  double delta() const { return delta_; }
  const TypicalIndexSet& index_set() const { return set_; }
  std::uint64_t rank() const { return rank_; }

  /// Tr[Pi rho^n Pi], by the classical identity equal to the set mass.
  double mass() const { return set_.total_mass; }

  bool materialized() const { return materialized_; }

  /// Dense projector; throws DimensionCapExceeded when not materialized.
  const Mat& matrix() const;

  /// Columns span the typical subspace (D x rank, orthonormal).
  const Mat& basis() const;

  /// Eigenvalue of rho^{(x) n} attached to each basis column.
  const std::vector<double>& column_probs() const;

  /// Pi rho^{(x) n} Pi assembled from the basis, no dense rho^n needed.
  Mat sandwiched_state() const;

 private:
  int n_;
  double delta_;
  TypicalIndexSet set_;
  std::uint64_t rank_ = 0;
  bool materialized_ = false;
  Mat matrix_;
  Mat basis_;
  std::vector<double> column_probs_;
};

}  // namespace qsym
