// Fleet-design optimizer: PSO over (robot_count, packs_per_robot, speed)
// minimizing total job cost with an additive penalty for missing the
// deadline. Integer dimensions are continuous-relaxed and rounded at
// evaluation; the returned design is re-simulated exactly.
#pragma once

#include <cmath>
#include <limits>

#include "agrifleet/pso.hpp"
#include "agrifleet/scenario.hpp"

namespace agrifleet {

struct FleetDesign {
  int robot_count = 1;
  int packs_per_robot = 1;
  double speed_kmh = 0.0;
};

struct OptimizeResult {
  FleetDesign design;
  double cost_usd = std::numeric_limits<double>::infinity();
  double makespan_h = std::numeric_limits<double>::infinity();
  bool feasible = false;
  std::vector<double> history;
};

namespace detail {

inline int decode_int(double x, const std::array<double, 2>& bound) {
  const int lo = static_cast<int>(std::ceil(bound[0] - 1e-9));
  const int hi = static_cast<int>(std::floor(bound[1] + 1e-9));
  const int v = static_cast<int>(std::llround(x));
  return std::clamp(v, lo, hi);
}

}  // namespace detail

// Simulates one candidate design against the scenario's pso section.
// The operator model rides along only for crewed (diesel) fleets.
inline SimResult simulate_design(const Scenario& scenario, const FleetDesign& design) {
  if (!scenario.pso) throw std::invalid_argument("scenario has no pso section");
  const MachineSpec& machine = scenario.machine(scenario.pso->machine);
  ImplementSpec impl = scenario.implement().with_bottoms(scenario.pso->bottoms);
  impl.typical_speed_kmh = design.speed_kmh;
  SimConfig cfg = scenario.sim ? scenario.sim->config : SimConfig{};
  cfg.stochastic = false;
  cfg.fleet_size = design.robot_count;
  cfg.packs_per_robot = design.packs_per_robot;
  const OperatorCostModel* op =
      machine.drivetrain == Drivetrain::diesel_mechanical ? scenario.operator_or_null() : nullptr;
  return simulate(scenario.field, machine, impl, cfg, op, scenario.prices_or_null());
}

inline FleetDesign decode_design(std::span<const double> x, const PsoConfig& cfg) {
  FleetDesign d;
  d.robot_count = detail::decode_int(x[0], cfg.bounds[0]);
  d.packs_per_robot = detail::decode_int(x[1], cfg.bounds[1]);
  d.speed_kmh = std::clamp(x[2], cfg.bounds[2][0], cfg.bounds[2][1]);
  return d;
}

inline OptimizeResult optimize_fleet(const Scenario& scenario, double deadline_h,
                                     const PsoConfig& cfg) {
  if (!scenario.pso) throw std::invalid_argument("optimize_fleet: scenario has no pso section");
  if (!(deadline_h > 0.0)) throw std::domain_error("optimize_fleet: deadline must be > 0");
  if (cfg.bounds.size() != 3)
    throw std::domain_error("optimize_fleet: bounds must cover robot_count, packs, speed");
  const double penalty = scenario.pso->penalty_usd_per_h;

  auto objective = [&](std::span<const double> x) -> double {
    const FleetDesign d = decode_design(x, cfg);
    try {
      const SimResult r = simulate_design(scenario, d);
      const double violation = std::max(0.0, r.makespan_h - deadline_h);
      return r.total_cost_usd + penalty * violation;
    } catch (const std::exception&) {
      return std::numeric_limits<double>::infinity();  // infeasible point
    }
  };

  const PsoResult pso = pso_minimize(objective, cfg);

  OptimizeResult out;
  out.design = decode_design(std::span<const double>(pso.best_position), cfg);
  out.history = pso.history;
  try {
    const SimResult r = simulate_design(scenario, out.design);
    out.cost_usd = r.total_cost_usd;
    out.makespan_h = r.makespan_h;
    out.feasible = r.makespan_h <= deadline_h + 1e-9;
  } catch (const std::exception&) {
    out.feasible = false;
  }
  return out;
}

}  // namespace agrifleet
