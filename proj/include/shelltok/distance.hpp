// Copyright 2026 The shelltok Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "shelltok/mesh.hpp"

namespace shelltok {

/// Squared Euclidean distance with a fixed evaluation order, so every caller
/// that uses it gets bit-identical results.
template <typename Scalar>
inline Scalar squared_distance(Scalar ax, Scalar ay, Scalar az, Scalar bx, Scalar by, Scalar bz) {
  const Scalar dx = ax - bx, dy = ay - by, dz = az - bz;
  return dx * dx + dy * dy + dz * dz;
}

/// Static 3-d tree for exact nearest-neighbor distance queries.
template <typename Scalar>
class KdTree {
 public:
  template <typename Derived>
  explicit KdTree(const Eigen::MatrixBase<Derived>& points) : points_(points.template cast<Scalar>()) {
    order_.resize(static_cast<std::size_t>(points_.rows()));
    std::iota(order_.begin(), order_.end(), Eigen::Index{0});
    nodes_.reserve(order_.size());
    if (!order_.empty()) root_ = build(0, order_.size(), 0);
  }

  /// Smallest squared distance from (x, y, z) to any stored point.
  Scalar nearest_squared(Scalar x, Scalar y, Scalar z) const {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    if (root_ >= 0) search(root_, x, y, z, best);
    return best;
  }

 private:
  struct Node {
    Eigen::Index point;
    int axis;
    int left = -1, right = -1;
  };

  int build(std::size_t lo, std::size_t hi, int depth) {
    if (lo >= hi) return -1;
    const int axis = depth % 3;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(lo),
                     order_.begin() + static_cast<std::ptrdiff_t>(mid),
                     order_.begin() + static_cast<std::ptrdiff_t>(hi),
                     [&](Eigen::Index a, Eigen::Index b) {
                       return points_(a, axis) < points_(b, axis) ||
                              (points_(a, axis) == points_(b, axis) && a < b);
                     });
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({order_[mid], axis});
    const int left = build(lo, mid, depth + 1);
    const int right = build(mid + 1, hi, depth + 1);
    nodes_[static_cast<std::size_t>(id)].left = left;
    nodes_[static_cast<std::size_t>(id)].right = right;
    return id;
  }

  void search(int id, Scalar x, Scalar y, Scalar z, Scalar& best) const {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    const Eigen::Index p = n.point;
    best = std::min(best, squared_distance(x, y, z, points_(p, 0), points_(p, 1), points_(p, 2)));
    const Scalar q = n.axis == 0 ? x : (n.axis == 1 ? y : z);
    // Pruning with diff^2 > best is exact: the rounded sum of squares can
    // never undercut the rounded square of one term.
    const Scalar diff = q - points_(p, n.axis);
    const int near = diff < 0 ? n.left : n.right;
    const int far = diff < 0 ? n.right : n.left;
    if (near >= 0) search(near, x, y, z, best);
    if (far >= 0 && !(diff * diff > best)) search(far, x, y, z, best);
  }

  PositionMatrix<Scalar> points_;
  std::vector<Eigen::Index> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// Chamfer = mean over a of min_b |a - b| plus mean over b of min_a |a - b|
/// (Euclidean, not squared). Hausdorff = the larger of the two directed
/// maxima.
struct DistanceMetrics {
  double chamfer = 0;
  double hausdorff = 0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
};

/// Per-point nearest distance from every row of `from` to the set `to`.
template <typename DerivedA, typename DerivedB>
std::vector<double> nearest_distances(const Eigen::MatrixBase<DerivedA>& from,
                                      const Eigen::MatrixBase<DerivedB>& to) {
  const KdTree<double> tree(to);
  std::vector<double> out(static_cast<std::size_t>(from.rows()));
  for (Eigen::Index i = 0; i < from.rows(); ++i)
    out[static_cast<std::size_t>(i)] = std::sqrt(tree.nearest_squared(
        static_cast<double>(from(i, 0)), static_cast<double>(from(i, 1)), static_cast<double>(from(i, 2))));
  return out;
}

/// Exact Chamfer and Hausdorff distances between two point sets (rows are
/// points). Throws Error when either set is empty.
template <typename DerivedA, typename DerivedB>
DistanceMetrics chamfer_hausdorff(const Eigen::MatrixBase<DerivedA>& a,
                                  const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() == 0 || b.rows() == 0) throw Error("distance between empty point sets");
  const std::vector<double> ab = nearest_distances(a, b);
  const std::vector<double> ba = nearest_distances(b, a);
  double sum_ab = 0, sum_ba = 0, max_ab = 0, max_ba = 0;
  for (double d : ab) {
    sum_ab += d;
    max_ab = std::max(max_ab, d);
  }
  for (double d : ba) {
    sum_ba += d;
    max_ba = std::max(max_ba, d);
  }
  DistanceMetrics m;
  m.chamfer = sum_ab / static_cast<double>(ab.size()) + sum_ba / static_cast<double>(ba.size());
  m.hausdorff = std::max(max_ab, max_ba);
  m.sample_count = static_cast<std::size_t>(std::max(a.rows(), b.rows()));
  return m;
}

}  // namespace shelltok
