#pragma once

#include "qsym/density.hpp"

namespace qsym {

/// Relative entropy value in bits, with infinity kept as an explicit tag so
/// it never leaks into downstream arithmetic.
class RelEntropy {
 public:
  static RelEntropy finite(double bits) { return RelEntropy(bits, false); }
  static RelEntropy infinity() { return RelEntropy(0.0, true); }

  bool is_infinite() const { return infinite_; }

  /// Finite value in bits; throws if the tag is infinity.
  double bits() const {
    if (infinite_)
      throw Error("RelEntropy: arithmetic access to an infinite value");
    return bits_;
  }

 private:
  RelEntropy(double b, bool inf) : bits_(b), infinite_(inf) {}
  double bits_;
  bool infinite_;
};

/// -sum p log2 p over the entries, with 0 log 0 := 0.
double shannon_entropy(const ProbabilityVector& p);
double shannon_entropy(const RVec& p);

/// Von Neumann entropy in bits. Result lies in [0, log2 dim].
double von_neumann_entropy(const DensityOperator& rho);

/// Entropy of a raw Hermitian unit-trace operator: eigenvalues within
/// [-tol.psd, 0) are clamped before the Shannon sum. Spares the caller a
/// full DensityOperator round trip for operators that are states by
/// construction (twirl outputs, ensemble mixtures).
double spectrum_entropy(const Mat& state,
                        const ToleranceConfig& tol = default_tols());

/// D(rho || sigma) in bits, evaluated in sigma's eigenbasis. Infinite when
/// sigma's near-null directions (eigenvalue < tol.psd) carry rho-weight
/// above tol.test.
RelEntropy relative_entropy(const DensityOperator& rho,
                            const DensityOperator& sigma,
                            const ToleranceConfig& tol = default_tols());

/// Continuity envelope used with the entropy difference bound
/// |S(rho) - S(sigma)| <= eta(||rho - sigma||_1) * log2(d).
/// First branch evaluated in base 2; the 1/e breakpoint and +1/e offset are
/// kept from the natural-log form, so the envelope is deliberately slack
/// (and discontinuous) at the breakpoint rather than tight.
double fannes_eta(double x);

}  // namespace qsym
