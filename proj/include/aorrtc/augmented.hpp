#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "aorrtc/space.hpp"

namespace aorrtc {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

using VertexId = std::uint32_t;

/// A vertex of the (n+1)-dimensional augmented search space: configuration
/// plus cost-to-come within its tree.
struct AugmentedVertex {
  VertexId id = 0;
  Configuration x_v;
  double c_v = 0.0;
  std::optional<VertexId> parent;
};

struct MetricWeights {
  double w_x = 1.0;
  double w_c = 1.0;
};

/// Weighted squared distance in the augmented space. An infinite query cost
/// degenerates to configuration-only distance.
inline double augmented_distance(const AugmentedVertex& v, const Configuration& x,
                                 double c, const MetricWeights& w) {
  const double dx = squared_distance(x, v.x_v);
  if (std::isinf(c)) return w.w_x * dx;
  const double dc = c - v.c_v;
  return w.w_x * dx + w.w_c * dc * dc;
}

/// One of the two bidirectional trees. Vertices are append-only and every
/// non-root vertex satisfies c_v = c_parent + cost(x_parent, x_v).
class SearchTree {
 public:
  explicit SearchTree(Configuration root) {
    vertices_.push_back(AugmentedVertex{0, std::move(root), 0.0, std::nullopt});
  }

  const AugmentedVertex& root() const { return vertices_.front(); }
  const AugmentedVertex& vertex(VertexId id) const { return vertices_.at(id); }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<AugmentedVertex>& vertices() const { return vertices_; }

  /// Appends a vertex with parent link; enforces the cost recurrence.
  const AugmentedVertex& insert(Configuration x, double c, VertexId parent) {
    if (parent >= vertices_.size()) {
      throw std::invalid_argument("SearchTree::insert: unknown parent id");
    }
    const AugmentedVertex& p = vertices_[parent];
    const double expected = p.c_v + cost(p.x_v, x);
    const double scale = std::max(1.0, std::abs(expected));
    if (std::abs(c - expected) > 1e-9 * scale) {
      throw std::invalid_argument("SearchTree::insert: cost recurrence violated");
    }
    const auto id = static_cast<VertexId>(vertices_.size());
    vertices_.push_back(AugmentedVertex{id, std::move(x), c, parent});
    return vertices_.back();
  }

  /// Argmin of the augmented distance over vertices passing the cost filter
  /// c_v + chat(x_v, x) < c. Ties break toward the lowest id. Linear scan;
  /// exactly correct for the coupled filter.
  std::optional<VertexId> nearest(const Configuration& x, double c,
                                  const MetricWeights& w) const {
    const bool unbounded = std::isinf(c);
    std::optional<VertexId> best;
    double best_d = std::numeric_limits<double>::max();
    for (const AugmentedVertex& v : vertices_) {
      if (!unbounded && !(v.c_v + cost(v.x_v, x) < c)) continue;
      const double d = augmented_distance(v, x, c, w);
      if (d < best_d) {
        best_d = d;
        best = v.id;
      }
    }
    return best;
  }

  /// Root-to-vertex configuration sequence.
  Path path_to_root(VertexId id) const {
    Path rev;
    std::optional<VertexId> cur = id;
    while (cur) {
      const AugmentedVertex& v = vertices_.at(*cur);
      rev.push_back(v.x_v);
      cur = v.parent;
    }
    return Path(rev.rbegin(), rev.rend());
  }

  /// Debug dump: one `id, parent, c_v, coords...` row per vertex.
  void dump_csv(std::ostream& os) const {
    for (const AugmentedVertex& v : vertices_) {
      os << v.id << ',' << (v.parent ? static_cast<long>(*v.parent) : -1) << ','
         << v.c_v;
      for (double coord : v.x_v) os << ',' << coord;
      os << '\n';
    }
  }

 private:
  std::vector<AugmentedVertex> vertices_;
};

/// Joins the two trees at the bridge vertices into a start-to-goal path.
/// The bridges must share a configuration or be one edge apart.
inline Path extract_path(const SearchTree& start_tree, const SearchTree& goal_tree,
                         VertexId bridge_start, VertexId bridge_goal) {
  if (&start_tree == &goal_tree) {
    throw std::invalid_argument("extract_path: bridges in the same tree");
  }
  Path path = start_tree.path_to_root(bridge_start);
  Path tail = goal_tree.path_to_root(bridge_goal);
  auto it = tail.rbegin();
  if (!path.empty() && it != tail.rend() && path.back() == *it) ++it;
  for (; it != tail.rend(); ++it) path.push_back(*it);
  return path;
}

}  // namespace aorrtc
