// Discrete-event coverage simulation: a fleet of identical machines plows a
// rectangular field decomposed into parallel strips, with battery-swap pauses
// and optional seeded stochastic perturbation of speed and soil factor.
//
// Scheduling is greedy: a free machine claims the lowest-index unassigned
// strip; ties between machines break toward the lower id. Strip work time is
// strip area over the machine's field capacity, so the aggregate-capacity
// lower bound is tight whenever strips divide evenly. Battery drain is
// counted in operating hours against the pack's claimed autonomy.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "agrifleet/cost.hpp"
#include "agrifleet/fleet.hpp"

namespace agrifleet {

struct FieldSpec {
  double length_m = 0.0;
  double width_m = 0.0;
  double op_efficiency = 0.0;

  double area_ha() const { return length_m * width_m / 10000.0; }

  void validate() const {
    if (length_m < 0.0 || width_m < 0.0)
      throw std::domain_error("field: dimensions must be >= 0");
    if (!(op_efficiency > 0.0) || op_efficiency > 1.0)
      throw std::domain_error("field: operational efficiency must be in (0, 1]");
  }
};

struct Strip {
  int index = 0;
  double width_m = 0.0;
  double length_m = 0.0;
  std::optional<int> assigned_robot;
  bool plowed = false;
  bool reversed = false;  // boustrophedon: odd strips run the other way
  double start_h = 0.0;
  double end_h = 0.0;

  double area_ha() const { return width_m * length_m / 10000.0; }
};

struct SimConfig {
  int fleet_size = 1;
  int packs_per_robot = 1;
  std::optional<double> swap_duration_h;  // absent: machine battery default
  bool stochastic = false;
  std::uint64_t seed = 0;
  int monte_carlo_runs = 1;
  double fi_variation = 0.0;     // relative spread, uniform within +-value
  double speed_variation = 0.0;  // relative spread, uniform within +-value

  void validate() const {
    if (fleet_size < 1) throw std::domain_error("sim: fleet size must be >= 1");
    if (packs_per_robot < 1) throw std::domain_error("sim: packs per robot must be >= 1");
    if (swap_duration_h && *swap_duration_h < 0.0)
      throw std::domain_error("sim: swap duration must be >= 0");
    if (fi_variation < 0.0 || fi_variation > 0.5 || speed_variation < 0.0 || speed_variation > 0.5)
      throw std::domain_error("sim: variation spreads must be in [0, 0.5]");
    if (monte_carlo_runs < 1) throw std::domain_error("sim: monte carlo runs must be >= 1");
  }
};

struct SwapEvent {
  int robot = 0;
  double time_h = 0.0;
  double duration_h = 0.0;
};

struct StripLoad {
  int strip = 0;
  double max_load_n = 0.0;
};

struct SimResult {
  double makespan_h = 0.0;
  double total_area_ha = 0.0;
  std::vector<double> per_robot_busy_hours;
  std::vector<double> per_robot_finish_h;
  std::vector<SwapEvent> swap_events;
  double total_energy_or_fuel = 0.0;  // kWh for electric machines, L for diesel
  double total_cost_usd = 0.0;
  std::vector<StripLoad> strip_loads;
  std::vector<Strip> strips;
  double speed_kmh = 0.0;       // effective speed, after any perturbation
  double soil_factor_fi = 0.0;  // effective soil factor, after any perturbation
  double draft_n = 0.0;         // per-machine draft at the operating point
  double power_demand_kw = 0.0;
  std::uint64_t seed = 0;
};

// Cuts the field across its width into ceil(width / cut_width) strips; the
// last strip absorbs the remainder. Adjacent strips alternate direction.
inline std::vector<Strip> decompose_field(const FieldSpec& field, double cut_width_m) {
  field.validate();
  if (!(cut_width_m > 0.0)) throw std::domain_error("decompose_field: cut width must be > 0");
  const int count = static_cast<int>(std::ceil(field.width_m / cut_width_m - 1e-9));
  std::vector<Strip> strips;
  strips.reserve(count < 0 ? 0 : count);
  for (int i = 0; i < count; ++i) {
    Strip s;
    s.index = i;
    s.width_m = (i + 1 < count) ? cut_width_m : field.width_m - cut_width_m * (count - 1);
    s.length_m = field.length_m;
    s.reversed = (i % 2) == 1;
    strips.push_back(s);
  }
  return strips;
}

namespace detail {

// Stable 64-bit mix (splitmix64 step); used to derive per-run seeds so run
// results do not depend on evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// mt19937_64 with a bit-stable uniform; the standard pins the engine's output
// sequence but not the distributions', so the mapping is done by hand.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform01() { return (gen() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

}  // namespace detail

// Runs one coverage job. Throws std::domain_error when the configuration has
// work to do but zero capacity to do it, std::invalid_argument for a diesel
// machine without a price book.
inline SimResult simulate(const FieldSpec& field, const MachineSpec& machine,
                          const ImplementSpec& impl, const SimConfig& cfg,
                          const OperatorCostModel* operator_model = nullptr,
                          const PriceBook* prices = nullptr) {
  field.validate();
  machine.validate();
  impl.validate();
  cfg.validate();

  ImplementSpec effective = impl;
  double speed_kmh = impl.typical_speed_kmh;
  if (cfg.stochastic) {
    detail::Rng rng(cfg.seed);
    effective.soil_factor_fi *= 1.0 + rng.uniform(-cfg.fi_variation, cfg.fi_variation);
    speed_kmh *= 1.0 + rng.uniform(-cfg.speed_variation, cfg.speed_variation);
  }

  SimResult result;
  result.seed = cfg.seed;
  result.speed_kmh = speed_kmh;
  result.soil_factor_fi = effective.soil_factor_fi;
  result.strips = decompose_field(field, effective.width_m);
  result.per_robot_busy_hours.assign(cfg.fleet_size, 0.0);
  result.per_robot_finish_h.assign(cfg.fleet_size, 0.0);

  const double capacity = field_capacity(speed_kmh, effective.width_m, field.op_efficiency);
  if (field.area_ha() > 0.0 && !(capacity > 0.0))
    throw std::domain_error("simulate: configuration has zero field capacity");

  const bool electric = machine.battery.has_value();
  const double pack_budget_h =
      electric ? cfg.packs_per_robot * machine.battery->autonomy_per_pack_h
               : std::numeric_limits<double>::infinity();
  const double swap_h =
      electric ? cfg.swap_duration_h.value_or(machine.battery->swap_duration_h) : 0.0;
  const double load_n = ground_load(machine.mass_kg);

  std::vector<double> budget(cfg.fleet_size, pack_budget_h);

  // (next free time, robot id); ties resolve to the lower id
  using Slot = std::pair<double, int>;
  std::priority_queue<Slot, std::vector<Slot>, std::greater<Slot>> free_at;
  for (int r = 0; r < cfg.fleet_size; ++r) free_at.emplace(0.0, r);

  constexpr double kEps = 1e-9;  // hours; absorbs float noise at pack boundaries
  std::size_t next_strip = 0;
  while (!free_at.empty() && next_strip < result.strips.size()) {
    auto [t, r] = free_at.top();
    free_at.pop();
    Strip& strip = result.strips[next_strip++];
    strip.assigned_robot = r;
    strip.start_h = t;
    double remaining = capacity > 0.0 ? strip.area_ha() / capacity : 0.0;
    result.per_robot_busy_hours[r] += remaining;
    while (remaining > budget[r] + kEps) {
      t += budget[r];
      remaining -= budget[r];
      result.swap_events.push_back({r, t, swap_h});
      t += swap_h;
      budget[r] = pack_budget_h;
    }
    t += remaining;
    budget[r] = std::max(0.0, budget[r] - remaining);
    strip.end_h = t;
    strip.plowed = true;
    result.strip_loads.push_back({strip.index, load_n});
    result.total_area_ha += strip.area_ha();
    result.per_robot_finish_h[r] = t;
    free_at.emplace(t, r);
  }

  for (double finish : result.per_robot_finish_h)
    result.makespan_h = std::max(result.makespan_h, finish);
  std::sort(result.swap_events.begin(), result.swap_events.end(),
            [](const SwapEvent& a, const SwapEvent& b) {
              return a.time_h != b.time_h ? a.time_h < b.time_h : a.robot < b.robot;
            });

  double busy_total = 0.0;
  for (double b : result.per_robot_busy_hours) busy_total += b;
  if (electric) {
    const double drain_kw = pack_energy(*machine.battery) / machine.battery->autonomy_per_pack_h;
    result.total_energy_or_fuel = busy_total * drain_kw;
  } else {
    result.total_energy_or_fuel =
        busy_total * hourly_fuel_use(machine.rated_power_kw, machine.fuel->pto_power_ratio_x);
  }

  result.draft_n = draft_force(effective, speed_kmh);
  result.power_demand_kw = nominal_power(result.draft_n, speed_kmh, machine.transfer_efficiency);

  const CostBreakdown hourly =
      fleet_hourly_cost(machine, cfg.fleet_size, cfg.packs_per_robot, operator_model, prices);
  result.total_cost_usd = hourly.total_usd_h * result.makespan_h;
  return result;
}

struct McStats {
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct MonteCarloSummary {
  int runs = 0;
  std::uint64_t seed = 0;
  McStats makespan_h;
  McStats cost_usd;
};

namespace detail {

inline McStats stats_of(const std::vector<double>& xs) {
  McStats s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / xs.size();
  if (s.min == s.max || xs.size() < 2) return s;  // degenerate: exactly zero spread
  double sq = 0.0;
  for (double x : xs) sq += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(sq / (xs.size() - 1));
  return s;
}

}  // namespace detail

// Repeats the simulation with independent per-run perturbations of speed and
// soil factor. Run i draws from mix_seed(cfg.seed, i), so the summary does
// not depend on execution order.
inline MonteCarloSummary monte_carlo(const FieldSpec& field, const MachineSpec& machine,
                                     const ImplementSpec& impl, const SimConfig& cfg,
                                     const OperatorCostModel* operator_model = nullptr,
                                     const PriceBook* prices = nullptr) {
  cfg.validate();
  std::vector<double> makespans, costs;
  makespans.reserve(cfg.monte_carlo_runs);
  costs.reserve(cfg.monte_carlo_runs);
  for (int i = 0; i < cfg.monte_carlo_runs; ++i) {
    SimConfig run_cfg = cfg;
    run_cfg.stochastic = true;
    run_cfg.seed = detail::mix_seed(cfg.seed, static_cast<std::uint64_t>(i));
    const SimResult r = simulate(field, machine, impl, run_cfg, operator_model, prices);
    makespans.push_back(r.makespan_h);
    costs.push_back(r.total_cost_usd);
  }
  MonteCarloSummary summary;
  summary.runs = cfg.monte_carlo_runs;
  summary.seed = cfg.seed;
  summary.makespan_h = detail::stats_of(makespans);
  summary.cost_usd = detail::stats_of(costs);
  return summary;
}

// Per-strip maximum ground load for a completed run: every plowed strip saw
// exactly one pass of the given machine.
inline std::vector<StripLoad> compaction_summary(const SimResult& result,
                                                 const MachineSpec& machine,
                                                 double g = kDefaultGravity) {
  std::vector<StripLoad> table;
  const double load = ground_load(machine.mass_kg, g);
  for (const Strip& s : result.strips)
    if (s.plowed) table.push_back({s.index, load});
  return table;
}

}  // namespace agrifleet
