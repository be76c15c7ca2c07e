#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "aorrtc/space.hpp"
#include "aorrtc/world.hpp"

namespace aorrtc {

struct Problem {
  ConfigurationSpace space;
  World world;
  Configuration start;
  Configuration goal;
  std::string name;

  /// Throws if the endpoints are out of bounds or in collision.
  void check() const {
    if (start.size() != space.dimension || goal.size() != space.dimension) {
      throw std::invalid_argument("Problem: endpoint dimension mismatch");
    }
    if (world.dimension() != space.dimension) {
      throw std::invalid_argument("Problem: world dimension mismatch");
    }
    if (!space.contains(start) || !space.contains(goal)) {
      throw std::invalid_argument("Problem: endpoint out of bounds");
    }
    if (!is_valid(world, start)) {
      throw std::invalid_argument("Problem: start configuration in collision");
    }
    if (!is_valid(world, goal)) {
      throw std::invalid_argument("Problem: goal configuration in collision");
    }
  }
};

}  // namespace aorrtc
