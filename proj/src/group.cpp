#include "qsym/group.hpp"

#include <cmath>

#include "qsym/rng.hpp"

namespace qsym {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.order_ = static_cast<int>(table.size());
  if (g.order_ <= 0) throw ClosureViolation("group: empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g.order_)
      throw ClosureViolation("group: table is not square");
    for (int v : row)
      if (v < 0 || v >= g.order_)
        throw ClosureViolation("group: table entry " + std::to_string(v) +
                               " out of range");
  }
  g.table_ = std::move(table);

  g.identity_ = -1;
  for (int e = 0; e < g.order_; ++e) {
    bool ok = true;
    for (int h = 0; h < g.order_ && ok; ++h)
      ok = (g.table_[e][h] == h) && (g.table_[h][e] == h);
    if (ok) {
      g.identity_ = e;
      break;
    }
  }
  if (g.identity_ < 0)
    throw ClosureViolation("group: no two-sided identity element");

  g.inverse_.assign(g.order_, -1);
  for (int a = 0; a < g.order_; ++a) {
    for (int b = 0; b < g.order_; ++b) {
      if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0)
      throw ClosureViolation("group: element " + std::to_string(a) +
                             " has no two-sided inverse");
  }

  auto assoc = [&](int a, int b, int c) {
    return g.table_[g.table_[a][b]][c] == g.table_[a][g.table_[b][c]];
  };
  if (g.order_ <= 64) {
    for (int a = 0; a < g.order_; ++a)
      for (int b = 0; b < g.order_; ++b)
        for (int c = 0; c < g.order_; ++c)
          if (!assoc(a, b, c))
            throw ClosureViolation("group: associativity fails at (" +
                                   std::to_string(a) + "," +
                                   std::to_string(b) + "," +
                                   std::to_string(c) + ")");
  } else {
    // O(order^3) is prohibitive; spot-check deterministic random triples.
    SplitRng rng(0x61737363u);
    const std::uint64_t samples =
        10ull * static_cast<std::uint64_t>(g.order_) * g.order_;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const int a = static_cast<int>(rng.bounded(g.order_));
      const int b = static_cast<int>(rng.bounded(g.order_));
      const int c = static_cast<int>(rng.bounded(g.order_));
      if (!assoc(a, b, c))
        throw ClosureViolation("group: associativity fails at sampled (" +
                               std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
    }
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int order) {
  if (order < 1) throw ClosureViolation("cyclic group: order must be >= 1");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  return from_table(std::move(table));
}

GroupRep::GroupRep(FiniteGroup group, std::vector<Mat> unitaries,
                   const ToleranceConfig& tol)
    : group_(std::move(group)), unitaries_(std::move(unitaries)) {
  const int n = group_.order();
  if (static_cast<int>(unitaries_.size()) != n)
    throw DimensionMismatch("rep: table and unitary list sizes disagree");
  dim_ = unitaries_[0].rows();
  if (dim_ < 1) throw DimensionMismatch("rep: empty unitary");
  for (const Mat& u : unitaries_) {
    if (u.rows() != dim_ || u.cols() != dim_)
      throw DimensionMismatch("rep: unitaries have mixed dimensions");
    if (max_abs(u.adjoint() * u - Mat::Identity(dim_, dim_)) > tol.eig * dim_)
      throw NonUnitaryElement("rep: element is not unitary");
  }
  if (max_abs(unitaries_[group_.identity()] - Mat::Identity(dim_, dim_)) >
      tol.eig * dim_)
    throw HomomorphismViolation("rep: identity element is not I");

  auto pair_dev = [&](int a, int b) {
    return max_abs(unitaries_[a] * unitaries_[b] -
                   unitaries_[group_.mult(a, b)]);
  };
  double worst = 0.0;
  int worst_a = 0, worst_b = 0;
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const double dev = pair_dev(a, b);
        if (dev > worst) {
          worst = dev;
          worst_a = a;
          worst_b = b;
        }
      }
  } else {
    SplitRng rng(0x686f6d6fu);
    const std::uint64_t samples = 10ull * static_cast<std::uint64_t>(n) * n;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const int a = static_cast<int>(rng.bounded(n));
      const int b = static_cast<int>(rng.bounded(n));
      const double dev = pair_dev(a, b);
      if (dev > worst) {
        worst = dev;
        worst_a = a;
        worst_b = b;
      }
    }
  }
  if (worst > tol.eig * dim_)
    throw HomomorphismViolation(
        "rep: U_g U_h != U_{gh}, worst pair (" + std::to_string(worst_a) +
        "," + std::to_string(worst_b) + ") deviates by " +
        std::to_string(worst));
}

GroupRep make_cyclic_rep(int d, const std::vector<int>& charges,
                         const ToleranceConfig& tol) {
  if (d < 2) throw ClosureViolation("make_cyclic_rep: d must be >= 2");
  if (charges.empty())
    throw DimensionMismatch("make_cyclic_rep: empty charge list");
  const auto dim = static_cast<Eigen::Index>(charges.size());
  std::vector<Mat> us;
  us.reserve(d);
  for (int g = 0; g < d; ++g) {
    Mat u = Mat::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double phase = 2.0 * M_PI * charges[j] * g / d;
      u(j, j) = cplx(std::cos(phase), std::sin(phase));
    }
    us.push_back(std::move(u));
  }
  return GroupRep(FiniteGroup::cyclic(d), std::move(us), tol);
}

GroupRep make_explicit_rep(std::vector<std::vector<int>> mult_table,
                           std::vector<Mat> unitaries,
                           const ToleranceConfig& tol) {
  return GroupRep(FiniteGroup::from_table(std::move(mult_table)),
                  std::move(unitaries), tol);
}

}  // namespace qsym
