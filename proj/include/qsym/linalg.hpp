#pragma once

#include "qsym/errors.hpp"
#include "qsym/types.hpp"

namespace qsym {

struct EigResult {
  RVec values;  // ascending
  Mat vectors;  // unitary, columns are eigenvectors
};

double max_abs(const Mat& m);

bool is_hermitian(const Mat& m, double tol);

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending.
/// Throws NonHermitianInput if the symmetry check fails and NoConvergence
/// if the underlying iteration does not terminate.
EigResult hermitian_eig(const Mat& m,
                        const ToleranceConfig& tol = default_tols());

/// Eigenvalues only (ascending); cheaper when no basis is needed.
RVec hermitian_eigenvalues(const Mat& m,
                           const ToleranceConfig& tol = default_tols());

/// Tensor product with row convention (i1, i2) -> i1 * dim(B) + i2.
Mat kron(const Mat& a, const Mat& b);

/// n-fold tensor power.
Mat kron_pow(const Mat& a, int n);

Vec kron_vec(const Vec& a, const Vec& b);
Vec kron_vec_pow(const Vec& a, int n);

/// Loewner partial order test: A <= B iff min eig(B - A) >= -tol.eig.
/// Both inputs must be Hermitian and of equal dimension.
bool op_leq(const Mat& a, const Mat& b,
            const ToleranceConfig& tol = default_tols());

/// Reduced state of a bipartite operator on C^{da} (x) C^{db}.
/// keep = 0 retains the first factor, keep = 1 the second.
Mat partial_trace(const Mat& m, Eigen::Index da, Eigen::Index db, int keep);

/// Principal square root of a PSD Hermitian matrix; eigenvalues within
/// [-tol.psd, 0) are clamped to zero first.
Mat matrix_sqrt_psd(const Mat& m,
                    const ToleranceConfig& tol = default_tols());

}  // namespace qsym
