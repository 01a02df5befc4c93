#pragma once

#include "qsym/density.hpp"
#include "qsym/rng.hpp"

namespace qsym {

Mat random_hermitian(SplitRng& rng, Eigen::Index d);

/// Full-rank state from the Ginibre ensemble, G G^dag / Tr.
DensityOperator random_density(SplitRng& rng, Eigen::Index d);

/// Haar-ish random unit vector (Gaussian entries, normalized).
Vec random_pure(SplitRng& rng, Eigen::Index d);

/// Haar random unitary via QR with phase-fixed diagonal.
Mat random_unitary(SplitRng& rng, Eigen::Index d);

/// Rank-r orthogonal projector drawn from a random unitary frame.
Mat random_projector(SplitRng& rng, Eigen::Index d, Eigen::Index rank);

}  // namespace qsym
