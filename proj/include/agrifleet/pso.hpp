// Global-best particle swarm optimization over a bounded box. Deterministic
// for a fixed seed; pbest/gbest merges happen in particle-index order, so
// objective evaluations could run concurrently without changing the result.
#pragma once

#include <array>
#include <cstdint>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "agrifleet/sim.hpp"

namespace agrifleet {

struct PsoConfig {
  int swarm_size = 40;
  int iterations = 200;
  double inertia_w = 0.729;
  double cognitive_c1 = 1.49445;
  double social_c2 = 1.49445;
  std::vector<std::array<double, 2>> bounds;  // {low, high} per dimension
  std::uint64_t seed = 0;
  double velocity_clamp = 0.5;  // fraction of each dimension's range

  void validate() const {
    if (swarm_size < 2) throw std::domain_error("pso: swarm size must be >= 2");
    if (iterations < 1) throw std::domain_error("pso: iterations must be >= 1");
    if (bounds.empty()) throw std::domain_error("pso: bounds must be nonempty");
    for (const auto& b : bounds)
      if (!(b[0] <= b[1])) throw std::domain_error("pso: each bound needs low <= high");
    if (!(velocity_clamp > 0.0) || velocity_clamp > 1.0)
      throw std::domain_error("pso: velocity clamp must be in (0, 1]");
  }
};

struct PsoResult {
  std::vector<double> best_position;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> history;  // gbest value after each iteration sweep
};

// Minimizes `objective` (callable on std::span<const double>) over the box.
// Non-finite objective values are treated as +infinity, never propagated.
template <class F>
PsoResult pso_minimize(F&& objective, const PsoConfig& cfg) {
  cfg.validate();
  const std::size_t dims = cfg.bounds.size();
  const std::size_t n = static_cast<std::size_t>(cfg.swarm_size);

  auto eval = [&](const std::vector<double>& x) {
    const double v = objective(std::span<const double>(x));
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  detail::Rng rng(cfg.seed);
  std::vector<std::vector<double>> pos(n, std::vector<double>(dims));
  std::vector<std::vector<double>> vel(n, std::vector<double>(dims));
  std::vector<double> vmax(dims);
  for (std::size_t d = 0; d < dims; ++d)
    vmax[d] = cfg.velocity_clamp * (cfg.bounds[d][1] - cfg.bounds[d][0]);

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t d = 0; d < dims; ++d)
      pos[p][d] = rng.uniform(cfg.bounds[d][0], cfg.bounds[d][1]);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t d = 0; d < dims; ++d) vel[p][d] = rng.uniform(-vmax[d], vmax[d]);

  std::vector<std::vector<double>> pbest = pos;
  std::vector<double> pbest_value(n);
  PsoResult result;
  for (std::size_t p = 0; p < n; ++p) {
    pbest_value[p] = eval(pos[p]);
    if (pbest_value[p] < result.best_value) {
      result.best_value = pbest_value[p];
      result.best_position = pos[p];
    }
  }
  if (result.best_position.empty()) result.best_position = pos[0];  // all-infeasible swarm

  result.history.reserve(cfg.iterations);
  for (int iter = 0; iter < cfg.iterations; ++iter) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t d = 0; d < dims; ++d) {
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        double v = cfg.inertia_w * vel[p][d] +
                   cfg.cognitive_c1 * r1 * (pbest[p][d] - pos[p][d]) +
                   cfg.social_c2 * r2 * (result.best_position[d] - pos[p][d]);
        v = std::clamp(v, -vmax[d], vmax[d]);
        vel[p][d] = v;
        pos[p][d] = std::clamp(pos[p][d] + v, cfg.bounds[d][0], cfg.bounds[d][1]);
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      const double value = eval(pos[p]);
      if (value < pbest_value[p]) {
        pbest_value[p] = value;
        pbest[p] = pos[p];
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (pbest_value[p] < result.best_value) {
        result.best_value = pbest_value[p];
        result.best_position = pbest[p];
      }
    }
    result.history.push_back(result.best_value);
  }
  return result;
}

}  // namespace agrifleet
