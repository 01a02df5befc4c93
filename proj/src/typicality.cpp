#include "qsym/typicality.hpp"

#include <cmath>
#include <limits>

namespace qsym {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct TypeClassAccumulator {
  int n;
  double n_h;       // n * H, bits
  double n_delta;   // n * delta
  const std::vector<double>* log2_q;  // per positive symbol
  const std::vector<double>* ln_mq;   // ln(m_j q_j)
  const std::vector<double>* ln_m;    // ln(m_j)
  long double mass = 0.0L;
  long double count = 0.0L;

  bool type_is_typical(double log2_prob) const {
    return -log2_prob >= n_h - n_delta - 0.0 &&
           -log2_prob <= n_h + n_delta + 0.0;
  }

  // Walk all count vectors (k_0,...,k_{m-1}) with sum n. Carries the
  // partial multinomial coefficient and per-class weights so each leaf is
  // O(1). binom is kept exact (integral long double) by the stepwise
  // C(r, k) product.
  void walk(std::size_t sym, int remaining, double log2_prob,
            long double binom, long double mass_w, long double count_w) {
    const std::size_t m = log2_q->size();
    if (sym + 1 == m) {
      const int k = remaining;
      const double lp = log2_prob + k * (*log2_q)[sym];
      if (!type_is_typical(lp)) return;
      mass += binom * mass_w * std::exp((long double)k * (*ln_mq)[sym]);
      count += binom * count_w * std::exp((long double)k * (*ln_m)[sym]);
      return;
    }
    long double choose = 1.0L;  // C(remaining, k) built incrementally
    for (int k = 0; k <= remaining; ++k) {
      if (k > 0) {
        choose *= (long double)(remaining - k + 1);
        choose /= (long double)k;
      }
      walk(sym + 1, remaining - k, log2_prob + k * (*log2_q)[sym],
           binom * choose,
           mass_w * std::exp((long double)k * (*ln_mq)[sym]),
           count_w * std::exp((long double)k * (*ln_m)[sym]));
    }
  }
};

// Number of compositions of n into m parts, saturating.
long double composition_count(int n, std::size_t m) {
  long double c = 1.0L;
  for (std::size_t i = 1; i < m; ++i) {
    c *= (long double)(n + i);
    c /= (long double)i;
    if (c > 1e18L) return 1e18L;
  }
  return c;
}

}  // namespace

double TypicalIndexSet::log2_prob(const std::vector<std::uint8_t>& seq) const {
  double lp = 0.0;
  for (std::uint8_t s : seq) {
    const double q = symbol_probs.at(s);
    if (q <= 0.0) return kNegInf;
    lp += std::log2(q);
  }
  return lp;
}

bool TypicalIndexSet::contains(const std::vector<std::uint8_t>& seq) const {
  if (static_cast<int>(seq.size()) != n) return false;
  const double lp = log2_prob(seq);
  if (lp == kNegInf) return false;
  return -lp >= n * (entropy_bits - delta) && -lp <= n * (entropy_bits + delta);
}

TypicalIndexSet typical_set_weighted(const std::vector<double>& probs,
                                     const std::vector<int>& multiplicities,
                                     int n, double delta,
                                     std::uint64_t enum_cap) {
  if (n < 1) throw Error("typical_set: n must be >= 1");
  if (delta <= 0.0) throw Error("typical_set: delta must be > 0");
  if (probs.size() != multiplicities.size())
    throw DimensionMismatch("typical_set: probs/multiplicities size mismatch");

  TypicalIndexSet set;
  set.n = n;
  set.delta = delta;
  set.symbol_probs = probs;
  set.multiplicities = multiplicities;

  double h = 0.0;
  for (std::size_t j = 0; j < probs.size(); ++j)
    if (probs[j] > 0.0)
      h -= multiplicities[j] * probs[j] * std::log2(probs[j]);
  set.entropy_bits = h;

  // Zero-probability symbols only ever appear with count zero in a typical
  // sequence, so the type-class walk runs over the positive alphabet.
  std::vector<double> log2_q, ln_mq, ln_m;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    if (probs[j] <= 0.0) continue;
    log2_q.push_back(std::log2(probs[j]));
    ln_mq.push_back(std::log(multiplicities[j] * probs[j]));
    ln_m.push_back(std::log((double)multiplicities[j]));
  }
  if (log2_q.empty())
    throw NormalizationError("typical_set: no positive-probability symbol");

  if (composition_count(n, log2_q.size()) > 5e6L)
    throw Error("typical_set: type-class family too large for exact sums");

  TypeClassAccumulator acc;
  acc.n = n;
  acc.n_h = n * h;
  acc.n_delta = n * delta;
  acc.log2_q = &log2_q;
  acc.ln_mq = &ln_mq;
  acc.ln_m = &ln_m;
  acc.walk(0, n, 0.0, 1.0L, 1.0L, 1.0L);

  set.total_mass = static_cast<double>(acc.mass);
  set.cardinality = static_cast<double>(acc.count);
  set.cardinality_exact = acc.count < 9.0e15L;
  set.log2_cardinality =
      acc.count > 0.0L ? static_cast<double>(std::log2(acc.count)) : kNegInf;

  // Explicit list, only when the full sequence space is small.
  const std::size_t alphabet = probs.size();
  if (pow_dim(alphabet, n) <= enum_cap) {
    std::vector<std::uint8_t> seq(n, 0);
    while (true) {
      if (set.contains(seq)) set.sequences.push_back(seq);
      int pos = n - 1;
      while (pos >= 0 && seq[pos] + 1u == alphabet) seq[pos--] = 0;
      if (pos < 0) break;
      ++seq[pos];
    }
    set.enumerated = true;
  }
  return set;
}

TypicalIndexSet typical_set(const ProbabilityVector& p, int n, double delta,
                            std::uint64_t enum_cap) {
  return typical_set_weighted(p.probs(), std::vector<int>(p.size(), 1), n,
                              delta, enum_cap);
}

TypicalProjector::TypicalProjector(const DensityOperator& rho, int n,
                                   double delta, std::uint64_t dim_cap,
                                   const ToleranceConfig& cfg)
    : n_(n), delta_(delta) {
  const EigResult eig = hermitian_eig(rho.mat(), cfg);
  const Eigen::Index d = rho.dim();

  // Merge eigenvalues that agree within tol into one symbol so the
  // classical reduction does not depend on how roundoff split a
  // degenerate level.
  std::vector<double> vals(d);
  for (Eigen::Index i = 0; i < d; ++i) vals[i] = std::max(0.0, eig.values(i));
  std::vector<int> merged_of(d);
  std::vector<double> q;
  std::vector<int> mult;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (i > 0 && vals[i] - vals[i - 1] <= cfg.eig) {
      const int g = merged_of[i - 1];
      merged_of[i] = g;
      q[g] = (q[g] * mult[g] + vals[i]) / (mult[g] + 1);
      ++mult[g];
    } else {
      merged_of[i] = static_cast<int>(q.size());
      q.push_back(vals[i]);
      mult.push_back(1);
    }
  }
  double total = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) total += mult[j] * q[j];
  for (double& v : q) v /= total;

  set_ = typical_set_weighted(q, mult, n, delta);
  if (!set_.cardinality_exact)
    throw Error("typical_projector: subspace dimension overflows");
  rank_ = static_cast<std::uint64_t>(set_.cardinality + 0.5);

  const std::uint64_t big_dim = pow_dim(d, n);
  if (big_dim > dim_cap) return;  // classical description only

  // Enumerate original eigenvector sequences whose merged image is
  // typical; each contributes one orthonormal basis column.
  const auto big = static_cast<Eigen::Index>(big_dim);
  basis_ = Mat(big, static_cast<Eigen::Index>(rank_));
  column_probs_.reserve(rank_);
  std::vector<int> seq(n, 0);
  Eigen::Index col = 0;
  while (true) {
    double lp = 0.0;
    bool dead = false;
    for (int i = 0; i < n; ++i) {
      const double p = q[merged_of[seq[i]]];
      if (p <= 0.0) {
        dead = true;
        break;
      }
      lp += std::log2(p);
    }
    const bool typical =
        !dead && -lp >= n * (set_.entropy_bits - delta) &&
        -lp <= n * (set_.entropy_bits + delta);
    if (typical) {
      Vec w = Vec::Ones(1);
      for (int i = 0; i < n; ++i) w = kron_vec(w, eig.vectors.col(seq[i]));
      basis_.col(col++) = w;
      column_probs_.push_back(std::exp2(lp));
    }
    int pos = n - 1;
    while (pos >= 0 && seq[pos] + 1 == d) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  if (col != static_cast<Eigen::Index>(rank_))
    throw Error("typical_projector: rank mismatch between classical count "
                "and enumerated basis");
  matrix_ = basis_ * basis_.adjoint();
  matrix_ = (matrix_ + matrix_.adjoint()) / 2.0;
  materialized_ = true;
}

const Mat& TypicalProjector::matrix() const {
  if (!materialized_)
    throw DimensionCapExceeded(
        "typical_projector: materialization above the dimension cap");
  return matrix_;
}

const Mat& TypicalProjector::basis() const {
  if (!materialized_)
    throw DimensionCapExceeded(
        "typical_projector: materialization above the dimension cap");
  return basis_;
}

const std::vector<double>& TypicalProjector::column_probs() const {
  if (!materialized_)
    throw DimensionCapExceeded(
        "typical_projector: materialization above the dimension cap");
  return column_probs_;
}

Mat TypicalProjector::sandwiched_state() const {
  const Mat& b = basis();
  Eigen::VectorXd w =
      Eigen::Map<const Eigen::VectorXd>(column_probs_.data(),
                                        static_cast<Eigen::Index>(rank_));
  Mat out = b * w.asDiagonal() * b.adjoint();
  return (out + out.adjoint()) / 2.0;
}

}  // namespace qsym
