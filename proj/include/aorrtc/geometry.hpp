#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace aorrtc::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool on_segment(const Vec2& p, const Vec2& q, const Vec2& r) {
  return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) &&
         std::min(p.y, r.y) <= q.y && q.y <= std::max(p.y, r.y);
}

/// Proper or touching intersection of segments [p1,p2] and [p3,p4].
inline bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& p3,
                               const Vec2& p4) {
  const double d1 = cross(p3, p4, p1);
  const double d2 = cross(p3, p4, p2);
  const double d3 = cross(p1, p2, p3);
  const double d4 = cross(p1, p2, p4);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(p3, p1, p4)) return true;
  if (d2 == 0 && on_segment(p3, p2, p4)) return true;
  if (d3 == 0 && on_segment(p1, p3, p2)) return true;
  if (d4 == 0 && on_segment(p1, p4, p2)) return true;
  return false;
}

/// Slab test: does segment [a,b] intersect the axis-aligned box [lo,hi]?
inline bool segment_intersects_box(const Vec2& a, const Vec2& b, const Vec2& lo,
                                   const Vec2& hi) {
  double t0 = 0.0;
  double t1 = 1.0;
  const std::array<double, 2> p0{a.x, a.y};
  const std::array<double, 2> p1{b.x, b.y};
  const std::array<double, 2> bl{lo.x, lo.y};
  const std::array<double, 2> bh{hi.x, hi.y};
  for (int i = 0; i < 2; ++i) {
    const double d = p1[i] - p0[i];
    if (d == 0.0) {
      if (p0[i] < bl[i] || p0[i] > bh[i]) return false;
      continue;
    }
    double ta = (bl[i] - p0[i]) / d;
    double tb = (bh[i] - p0[i]) / d;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return false;
  }
  return true;
}

}  // namespace aorrtc::geom
