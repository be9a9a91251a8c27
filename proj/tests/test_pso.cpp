#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"

using namespace agrifleet;

namespace {

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double rosenbrock2(std::span<const double> x) {
  const double a = 1.0 - x[0];
  const double b = x[1] - x[0] * x[0];
  return a * a + 100.0 * b * b;
}

PsoConfig box(std::vector<std::array<double, 2>> bounds, int swarm, int iters,
              std::uint64_t seed) {
  PsoConfig cfg;
  cfg.bounds = std::move(bounds);
  cfg.swarm_size = swarm;
  cfg.iterations = iters;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("sphere minimum is found to high precision") {
  const PsoResult r = pso_minimize(sphere, box({{-5, 5}, {-5, 5}, {-5, 5}}, 30, 200, 1));
  CHECK(r.best_value < 1e-4);
  for (double v : r.best_position) CHECK(std::abs(v) < 0.1);
}

TEST_CASE("one-dimensional quadratic lands on its vertex") {
  auto f = [](std::span<const double> x) { return (x[0] - 2.0) * (x[0] - 2.0); };
  const PsoResult r = pso_minimize(f, box({{0, 5}}, 30, 200, 2));
  CHECK(std::abs(r.best_position[0] - 2.0) < 1e-3);
}

TEST_CASE("rosenbrock valley, threshold cross-checked by a dense grid") {
  // grid oracle: confirm values below the threshold exist inside the box
  double grid_best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 400; ++i) {
    for (int j = 0; j <= 400; ++j) {
      const double x[2] = {-2.0 + i / 100.0, -2.0 + j / 100.0};
      grid_best = std::min(grid_best, rosenbrock2(std::span<const double>(x, 2)));
    }
  }
  CHECK(grid_best < 1e-2);

  const PsoResult r = pso_minimize(rosenbrock2, box({{-2, 2}, {-2, 2}}, 40, 500, 3));
  CHECK(r.best_value < 1e-2);
  CHECK(std::abs(r.best_position[0] - 1.0) < 0.15);
  CHECK(std::abs(r.best_position[1] - 1.0) < 0.15);
}

TEST_CASE("gbest history never increases") {
  for (std::uint64_t seed : {1ull, 7ull, 42ull, 1234ull}) {
    const PsoResult r = pso_minimize(sphere, box({{-5, 5}, {-5, 5}}, 20, 100, seed));
    REQUIRE(r.history.size() == 100);
    for (std::size_t i = 1; i < r.history.size(); ++i)
      CHECK(r.history[i] <= r.history[i - 1]);
    CHECK(r.history.back() == r.best_value);
  }
}

TEST_CASE("identical seed gives identical runs") {
  const PsoConfig cfg = box({{-5, 5}, {-5, 5}}, 25, 150, 77);
  const PsoResult a = pso_minimize(sphere, cfg);
  const PsoResult b = pso_minimize(sphere, cfg);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_position == b.best_position);
  CHECK(a.history == b.history);
}

TEST_CASE("every evaluated position stays inside the box") {
  bool in_box = true;
  auto checked_sphere = [&](std::span<const double> x) {
    if (x[0] < -1.0 || x[0] > 2.0 || x[1] < 0.5 || x[1] > 3.0) in_box = false;
    return sphere(x);
  };
  const PsoResult r = pso_minimize(checked_sphere, box({{-1, 2}, {0.5, 3}}, 25, 100, 5));
  CHECK(in_box);
  CHECK(r.best_position[0] >= -1.0);
  CHECK(r.best_position[0] <= 2.0);
  CHECK(r.best_position[1] >= 0.5);
  CHECK(r.best_position[1] <= 3.0);
}

TEST_CASE("a degenerate dimension stays pinned") {
  const PsoResult r = pso_minimize(sphere, box({{3, 3}, {-5, 5}}, 20, 50, 6));
  CHECK(r.best_position[0] == 3.0);
}

TEST_CASE("non-finite objective values are penalized, not propagated") {
  auto partial = [](std::span<const double> x) {
    if (x[0] < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (x[0] - 1.0) * (x[0] - 1.0);
  };
  const PsoResult r = pso_minimize(partial, box({{-5, 5}}, 30, 200, 8));
  CHECK(std::isfinite(r.best_value));
  CHECK(std::abs(r.best_position[0] - 1.0) < 1e-2);

  auto hopeless = [](std::span<const double>) { return std::numeric_limits<double>::infinity(); };
  const PsoResult swamp = pso_minimize(hopeless, box({{0, 1}}, 10, 20, 9));
  CHECK(std::isinf(swamp.best_value));
  REQUIRE(swamp.best_position.size() == 1);  // still reports a position
}

TEST_CASE("config validation") {
  PsoConfig cfg = box({{0, 1}}, 1, 10, 0);
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg = box({{1, 0}}, 10, 10, 0);
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg = box({{0, 1}}, 10, 0, 0);
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg = box({{0, 1}}, 10, 10, 0);
  cfg.velocity_clamp = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}
