#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "aorrtc/problem.hpp"

namespace aorrtc {

namespace detail {

using nlohmann::json;

inline void require_fields(const json& j, const std::vector<std::string>& allowed,
                           const std::string& where) {
  if (!j.is_object()) {
    throw std::invalid_argument(where + ": expected an object");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const auto& a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::invalid_argument(where + ": unknown field '" + key + "'");
    }
  }
}

inline std::vector<double> parse_reals(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(where + ": expected a non-empty array of reals");
  }
  return j.get<std::vector<double>>();
}

inline BoxObstacle parse_box(const json& j, std::size_t dim) {
  require_fields(j, {"type", "min", "max"}, "box obstacle");
  BoxObstacle b{parse_reals(j.at("min"), "box.min"),
                parse_reals(j.at("max"), "box.max")};
  if (b.min.size() != dim || b.max.size() != dim) {
    throw std::invalid_argument("box obstacle: dimension mismatch");
  }
  return b;
}

inline SphereObstacle parse_sphere(const json& j, std::size_t dim) {
  require_fields(j, {"type", "center", "radius"}, "sphere obstacle");
  SphereObstacle s{parse_reals(j.at("center"), "sphere.center"),
                   j.at("radius").get<double>()};
  if (s.center.size() != dim) {
    throw std::invalid_argument("sphere obstacle: dimension mismatch");
  }
  if (!(s.radius > 0.0) || !std::isfinite(s.radius)) {
    throw std::invalid_argument("sphere obstacle: radius must be positive");
  }
  return s;
}

inline SegmentObstacle parse_segment(const json& j) {
  require_fields(j, {"type", "a", "b"}, "segment obstacle");
  const auto a = parse_reals(j.at("a"), "segment.a");
  const auto b = parse_reals(j.at("b"), "segment.b");
  if (a.size() != 2 || b.size() != 2) {
    throw std::invalid_argument("segment obstacle: endpoints must be 2D");
  }
  return SegmentObstacle{{a[0], a[1]}, {b[0], b[1]}};
}

inline World parse_world(const json& j, std::size_t dim) {
  require_fields(j, {"type", "obstacles", "link_lengths"}, "world");
  const std::string type = j.at("type").get<std::string>();
  if (type == "point") {
    PointWorld w;
    w.dimension = dim;
    for (const auto& obs : j.value("obstacles", json::array())) {
      const std::string ot = obs.at("type").get<std::string>();
      if (ot == "box") {
        w.boxes.push_back(parse_box(obs, dim));
      } else if (ot == "sphere") {
        w.spheres.push_back(parse_sphere(obs, dim));
      } else {
        throw std::invalid_argument("point world: unknown obstacle type '" + ot +
                                    "'");
      }
    }
    return World{w};
  }
  if (type == "planar_arm") {
    PlanarArmWorld w;
    w.link_lengths = parse_reals(j.at("link_lengths"), "world.link_lengths");
    for (double len : w.link_lengths) {
      if (!(len > 0.0)) {
        throw std::invalid_argument("planar arm: link lengths must be positive");
      }
    }
    if (w.link_lengths.size() != dim) {
      throw std::invalid_argument("planar arm: link count must equal dimension");
    }
    for (const auto& obs : j.value("obstacles", json::array())) {
      const std::string ot = obs.at("type").get<std::string>();
      if (ot == "box") {
        w.boxes.push_back(parse_box(obs, 2));
      } else if (ot == "segment") {
        w.segments.push_back(parse_segment(obs));
      } else {
        throw std::invalid_argument("arm world: unknown obstacle type '" + ot +
                                    "'");
      }
    }
    return World{w};
  }
  throw std::invalid_argument("world: unknown type '" + type + "'");
}

}  // namespace detail

/// Parses a problem document. Unknown fields are rejected.
inline Problem parse_problem(const nlohmann::json& j,
                             const std::string& name = "") {
  using detail::require_fields;
  require_fields(j, {"name", "space", "world", "start", "goal"}, "problem");
  const auto& js = j.at("space");
  require_fields(js, {"dimension", "lower", "upper"}, "space");
  const auto dim = js.at("dimension").get<std::size_t>();
  ConfigurationSpace space(detail::parse_reals(js.at("lower"), "space.lower"),
                           detail::parse_reals(js.at("upper"), "space.upper"));
  if (space.dimension != dim) {
    throw std::invalid_argument("space: dimension does not match bounds");
  }
  Problem p;
  p.space = std::move(space);
  p.world = detail::parse_world(j.at("world"), dim);
  p.start = detail::parse_reals(j.at("start"), "start");
  p.goal = detail::parse_reals(j.at("goal"), "goal");
  p.name = j.value("name", name);
  p.check();
  return p;
}

inline Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open problem file: " + path.string());
  }
  nlohmann::json j;
  in >> j;
  return parse_problem(j, path.stem().string());
}

}  // namespace aorrtc
