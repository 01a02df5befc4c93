#pragma once

#include <vector>

#include "qsym/density.hpp"
#include "qsym/group.hpp"
#include "qsym/random.hpp"

namespace qsym::test {

inline Vec basis_state(Eigen::Index d, Eigen::Index i) {
  Vec v = Vec::Zero(d);
  v(i) = 1.0;
  return v;
}

inline Mat projector_on(const Vec& v) { return v * v.adjoint(); }

inline Vec plus_state() {
  Vec v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

inline DensityOperator diag_state(const std::vector<double>& probs) {
  Mat m = Mat::Zero(probs.size(), probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) m(i, i) = probs[i];
  return DensityOperator(m);
}

inline GroupRep z2_qubit() { return make_cyclic_rep(2, {0, 1}); }

inline Vec amp_state(double p0) {
  Vec v(2);
  v << std::sqrt(p0), std::sqrt(1.0 - p0);
  return v;
}

// S3 acting on a qutrit by permutation matrices: an explicit non-abelian
// representation with an honestly verified table.
inline GroupRep s3_qutrit() {
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  auto compose = [&](int a, int b) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    for (std::size_t j = 0; j < perms.size(); ++j)
      if (perms[j] == c) return static_cast<int>(j);
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) table[a][b] = compose(a, b);
  std::vector<Mat> us;
  for (const auto& p : perms) {
    Mat u = Mat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) u(p[i], i) = 1.0;
    us.push_back(u);
  }
  return make_explicit_rep(std::move(table), std::move(us));
}

}  // namespace qsym::test
