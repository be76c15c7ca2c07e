#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include "aorrtc/geometry.hpp"
#include "aorrtc/space.hpp"

namespace aorrtc {

/// Axis-aligned box obstacle in n dimensions. Containment is strict: points
/// on the boundary count as valid (X_valid is closed).
struct BoxObstacle {
  std::vector<double> min;
  std::vector<double> max;

  bool contains(const Configuration& x) const {
    for (std::size_t i = 0; i < min.size(); ++i) {
      if (x[i] <= min[i] || x[i] >= max[i]) return false;
    }
    return true;
  }
};

struct SphereObstacle {
  std::vector<double> center;
  double radius = 0.0;

  bool contains(const Configuration& x) const {
    return squared_distance(x, center) < radius * radius;
  }
};

struct SegmentObstacle {
  geom::Vec2 a;
  geom::Vec2 b;
};

/// Point robot in a box/sphere obstacle field; covers 2D, 3D, and n-D
/// hypercube worlds alike.
struct PointWorld {
  std::size_t dimension = 0;
  std::vector<BoxObstacle> boxes;
  std::vector<SphereObstacle> spheres;
};

/// Planar arm with revolute joints at the origin; a configuration is the
/// vector of joint angles and validity means no link segment touches an
/// obstacle. No self-collision check is performed.
struct PlanarArmWorld {
  std::vector<double> link_lengths;
  std::vector<BoxObstacle> boxes;        // 2D boxes in the workspace
  std::vector<SegmentObstacle> segments;

  /// Joint positions from the base, angles accumulated along the chain.
  std::vector<geom::Vec2> forward_kinematics(const Configuration& angles) const {
    std::vector<geom::Vec2> joints;
    joints.reserve(link_lengths.size() + 1);
    joints.push_back({0.0, 0.0});
    double theta = 0.0;
    geom::Vec2 p{0.0, 0.0};
    for (std::size_t i = 0; i < link_lengths.size(); ++i) {
      theta += angles[i];
      p.x += link_lengths[i] * std::cos(theta);
      p.y += link_lengths[i] * std::sin(theta);
      joints.push_back(p);
    }
    return joints;
  }
};

struct World {
  std::variant<PointWorld, PlanarArmWorld> value;

  std::size_t dimension() const {
    if (const auto* pw = std::get_if<PointWorld>(&value)) return pw->dimension;
    return std::get<PlanarArmWorld>(value).link_lengths.size();
  }

  bool is_arm() const { return std::holds_alternative<PlanarArmWorld>(value); }
};

inline bool is_valid(const PointWorld& world, const Configuration& x) {
  for (const auto& b : world.boxes) {
    if (b.contains(x)) return false;
  }
  for (const auto& s : world.spheres) {
    if (s.contains(x)) return false;
  }
  return true;
}

inline bool is_valid(const PlanarArmWorld& world, const Configuration& angles) {
  const auto joints = world.forward_kinematics(angles);
  for (std::size_t i = 1; i < joints.size(); ++i) {
    const geom::Vec2& a = joints[i - 1];
    const geom::Vec2& b = joints[i];
    for (const auto& box : world.boxes) {
      const geom::Vec2 lo{box.min[0], box.min[1]};
      const geom::Vec2 hi{box.max[0], box.max[1]};
      if (geom::segment_intersects_box(a, b, lo, hi)) return false;
    }
    for (const auto& seg : world.segments) {
      if (geom::segments_intersect(a, b, seg.a, seg.b)) return false;
    }
  }
  return true;
}

/// Membership in X_valid.
inline bool is_valid(const World& world, const Configuration& x) {
  if (x.size() != world.dimension()) {
    throw std::invalid_argument("is_valid: dimension mismatch");
  }
  return std::visit([&](const auto& w) { return is_valid(w, x); }, world.value);
}

/// Discretized straight-edge check: every interpolated configuration at
/// spacing <= resolution, endpoints included, must be valid. Clearances
/// below the resolution are not certified.
inline bool validate(const World& world, const Configuration& x_a,
                     const Configuration& x_b, double resolution) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("validate: resolution must be positive");
  }
  const double d = cost(x_a, x_b);
  const auto steps = static_cast<std::size_t>(std::ceil(d / resolution));
  if (!is_valid(world, x_a)) return false;
  if (steps == 0) return true;
  for (std::size_t i = 1; i <= steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    if (!is_valid(world, interpolate(x_a, x_b, t))) return false;
  }
  return true;
}

/// Re-validates a whole waypoint path at the given resolution.
inline bool validate_path(const World& world, const Path& path,
                          double resolution) {
  if (path.empty()) return false;
  if (path.size() == 1) return is_valid(world, path.front());
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!validate(world, path[i - 1], path[i], resolution)) return false;
  }
  return true;
}

}  // namespace aorrtc
