#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace aorrtc;
using aorrtc::testing::centered_box;
using aorrtc::testing::free_square;

namespace {

SimplifyConfig cfg_for(const Problem& p) {
  SimplifyConfig cfg;
  cfg.resolution = 0.01 * p.space.diagonal();
  return cfg;
}

Path random_free_path(const Problem& p, Rng& rng, std::size_t waypoints) {
  const double res = cfg_for(p).resolution;
  while (true) {  // restart when a partial path paints itself into a corner
    Path path;
    path.push_back(p.start);
    bool ok = true;
    for (std::size_t i = 0; ok && i + 2 < waypoints; ++i) {
      const bool last = (i + 3 == waypoints);
      ok = false;
      for (int attempt = 0; attempt < 200; ++attempt) {
        const Configuration x = sample_uniform(p.space, rng);
        if (is_valid(p.world, x) && validate(p.world, path.back(), x, res) &&
            (!last || validate(p.world, x, p.goal, res))) {
          path.push_back(x);
          ok = true;
          break;
        }
      }
    }
    if (!ok) continue;
    path.push_back(p.goal);
    return path;
  }
}

}  // namespace

TEST_CASE("shortcut straightens a zig-zag in free space") {
  const Problem p = free_square();
  Path path{{0.0, 0.0}, {0.5, 0.4}, {1.0, 0.0}};
  Rng rng(1);
  const Path out = shortcut(path, p.world, cfg_for(p), rng);
  CHECK(path_cost(out) == Catch::Approx(1.0).epsilon(1e-6));
  CHECK(out.front() == path.front());
  CHECK(out.back() == path.back());
}

TEST_CASE("shortcut leaves an already-straight path unchanged in cost") {
  const Problem p = free_square();
  Path path{{0.0, 0.5}, {0.5, 0.5}, {1.0, 0.5}};
  Rng rng(2);
  const Path out = shortcut(path, p.world, cfg_for(p), rng);
  CHECK(path_cost(out) == Catch::Approx(1.0));
}

TEST_CASE("shortcut never increases cost and keeps paths collision-free") {
  const Problem p = centered_box();
  Rng rng(3);
  const SimplifyConfig cfg = cfg_for(p);
  for (int i = 0; i < 200; ++i) {
    const Path path = random_free_path(p, rng, 6);
    const double before = path_cost(path);
    const Path out = shortcut(path, p.world, cfg, rng);
    CHECK(path_cost(out) <= before + 1e-9);
    CHECK(validate_path(p.world, out, cfg.resolution));
    CHECK(out.front() == path.front());
    CHECK(out.back() == path.back());
  }
}

TEST_CASE("bspline smoothing cuts a free-space right angle") {
  const Problem p = free_square();
  Path path{{0.0, 0.0}, {0.5, 0.5}, {1.0, 0.0}};
  const Path out = bspline_smooth(path, p.world, cfg_for(p));
  CHECK(out.size() == 4);
  CHECK(path_cost(out) < path_cost(path));
  CHECK(out.front() == path.front());
  CHECK(out.back() == path.back());
}

TEST_CASE("bspline smoothing leaves a 2-waypoint path unchanged") {
  const Problem p = free_square();
  Path path{{0.0, 0.0}, {1.0, 1.0}};
  CHECK(bspline_smooth(path, p.world, cfg_for(p)) == path);
}

TEST_CASE("corner flush against an obstacle is retained") {
  const Problem p = centered_box();
  // Corner exactly at the box corner (0.25, 0.75); the 1/4-3/4 cut edge
  // would pass through the box.
  Path path{{0.05, 0.5}, {0.25, 0.75}, {0.5, 0.8}};
  REQUIRE(validate_path(p.world, path, 0.005));
  const Path out = bspline_smooth(path, p.world, cfg_for(p));
  CHECK(validate_path(p.world, out, cfg_for(p).resolution));
  // The cut at this corner collides, so the waypoint must survive.
  bool corner_kept = false;
  for (const auto& x : out) {
    if (x == Configuration{0.25, 0.75}) corner_kept = true;
  }
  CHECK(corner_kept);
}

TEST_CASE("simplify reaches the straight line in free space") {
  const Problem p = free_square();
  Path path{p.start, {0.3, 0.8}, {0.6, 0.2}, p.goal};
  Rng rng(4);
  const Path out = simplify(path, p.world, cfg_for(p), rng);
  CHECK(path_cost(out) <= cost(p.start, p.goal) * 1.001);
}

TEST_CASE("simplify is monotone and nearly idempotent") {
  const Problem p = centered_box();
  Rng rng(5);
  const SimplifyConfig cfg = cfg_for(p);
  std::vector<double> improvements;
  for (int i = 0; i < 100; ++i) {
    const Path path = random_free_path(p, rng, 6);
    const Path once = simplify(path, p.world, cfg, rng);
    CHECK(path_cost(once) <= path_cost(path) + 1e-9);
    const Path twice = simplify(once, p.world, cfg, rng);
    CHECK(path_cost(twice) <= path_cost(once) + 1e-9);
    if (path_cost(once) > 1e-12) {
      improvements.push_back((path_cost(once) - path_cost(twice)) /
                             path_cost(once));
    }
  }
  CHECK(median(improvements) < 0.01);
}

TEST_CASE("simplify preserves endpoints bit-exactly") {
  const Problem p = centered_box();
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const Path path = random_free_path(p, rng, 5);
    const Path out = simplify(path, p.world, cfg_for(p), rng);
    CHECK(out.front() == path.front());
    CHECK(out.back() == path.back());
  }
}

TEST_CASE("a deadline truncates simplification without corrupting the path") {
  const Problem p = centered_box();
  Rng rng(7);
  const Path path = random_free_path(p, rng, 8);
  TickClock clock(1.0);  // every query advances a full second
  const Path out = simplify(path, p.world, cfg_for(p), rng, &clock, 0.5);
  CHECK(validate_path(p.world, out, cfg_for(p).resolution));
  CHECK(path_cost(out) <= path_cost(path) + 1e-9);
}
