// Shared fixtures and independent oracles for the test suites. The oracles
// here deliberately re-derive results through a different route than the
// library (linear scans instead of the event queue, closed-form capacity
// math, exhaustive enumeration) so they can catch the implementation lying.
#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "agrifleet/optimize.hpp"
#include "agrifleet/scenario.hpp"

namespace testutil {

using namespace agrifleet;

inline ImplementSpec plow_bottom() {
  ImplementSpec impl;
  impl.name = "marchesan_arr2_moldboard";
  impl.coeff_a = 652;
  impl.coeff_b = 0;
  impl.coeff_c = 5.1;
  impl.soil_factor_fi = 1.0;
  impl.width_m = 0.4;
  impl.depth_cm = 35;
  impl.typical_speed_kmh = 5;
  return impl;
}

inline MachineSpec jd_8730r() {
  MachineSpec m;
  m.name = "jd_8730r";
  m.drivetrain = Drivetrain::diesel_mechanical;
  m.rated_power_kw = 272;
  m.max_power_kw = 300;
  m.mass_kg = 19805;
  m.transfer_efficiency = 0.539;
  m.purchase_price_usd = 355400.0;
  m.fuel = FuelModel{1.0};
  return m;
}

inline MachineSpec trse(double autonomy_h = 2.5, double swap_h = 0.25) {
  MachineSpec m;
  m.name = "trse";
  m.drivetrain = Drivetrain::electric_tracked;
  m.rated_power_kw = 20;
  m.mass_kg = 700;
  m.transfer_efficiency = 0.764;
  m.purchase_price_usd = 25316.0;
  BatteryModel b;
  b.packs_fitted = 1;
  b.cells_per_pack = 4;
  b.cell_voltage_v = 12;
  b.cell_capacity_ah = 220;
  b.autonomy_per_pack_h = autonomy_h;
  b.swap_duration_h = swap_h;
  b.electric_cost_per_hour_usd = 2.72;
  m.battery = b;
  return m;
}

inline MachineSpec trse_unlimited() { return trse(1e9, 0.0); }

inline FieldSpec field(double length_m, double width_m, double ef = 0.7) {
  FieldSpec f;
  f.length_m = length_m;
  f.width_m = width_m;
  f.op_efficiency = ef;
  return f;
}

inline OperatorCostModel paper_operator() {
  OperatorCostModel op;
  op.monthly_salary_usd = 361.53;
  op.charges_rate = 0.70;
  op.insurance_monthly_usd = 13.90;
  op.training_monthly_usd = 6.27;
  op.hours_divisor = 40;
  return op;
}

inline PriceBook paper_prices() {
  PriceBook pb;
  pb.diesel_usd_per_l = 0.77;
  pb.exchange_rate_brl_per_usd = 4.16;
  return pb;
}

// The full bundled comparison problem, built in code: 7 ha field laid out as
// 10 swarm strips (17,500 m x 4 m), TRSE swarm vs JD tractor.
inline Scenario paper_scenario() {
  Scenario sc;
  sc.implements = {plow_bottom()};
  sc.machines = {jd_8730r(), trse()};
  sc.implement_ref = "marchesan_arr2_moldboard";
  sc.field = field(17500, 4);
  ComparisonSpec cmp;
  cmp.large_machine = "jd_8730r";
  cmp.large_bottoms = 10;
  cmp.swarm_machine = "trse";
  cmp.swarm_bottoms = 1;
  cmp.swarm_packs_in_use = 1;
  sc.comparison = cmp;
  sc.operator_model = paper_operator();
  sc.prices = paper_prices();
  SimSection sim;
  sim.machine = "trse";
  sim.bottoms = 1;
  sim.config.fleet_size = 10;
  sim.config.packs_per_robot = 2;
  sim.config.swap_duration_h = 0.25;
  sim.config.seed = 42;
  sc.sim = sim;
  PsoSection pso;
  pso.machine = "trse";
  pso.bottoms = 1;
  pso.config.swarm_size = 40;
  pso.config.iterations = 150;
  pso.config.bounds = {{1, 30}, {1, 3}, {5, 5}};
  pso.config.seed = 7;
  pso.deadline_h = 5.0;
  sc.pso = pso;
  return sc;
}

// Hand list-schedule: robots claim strip work items in order as they free up
// (lowest-id robot on ties), pausing swap_h whenever the pack budget runs out
// mid-item. Linear argmin scan, no event queue.
inline double oracle_makespan(const std::vector<double>& strip_hours, int fleet,
                              double budget_h = std::numeric_limits<double>::infinity(),
                              double swap_h = 0.0) {
  std::vector<double> free_at(fleet, 0.0), budget(fleet, budget_h);
  for (double work : strip_hours) {
    int r = 0;
    for (int i = 1; i < fleet; ++i)
      if (free_at[i] < free_at[r]) r = i;
    while (work > budget[r] + 1e-9) {
      free_at[r] += budget[r];
      work -= budget[r];
      free_at[r] += swap_h;
      budget[r] = budget_h;
    }
    free_at[r] += work;
    budget[r] -= work;
  }
  return *std::max_element(free_at.begin(), free_at.end());
}

// --- randomized simulation scenarios and property checks ---------------------

struct SimCase {
  FieldSpec field;
  MachineSpec machine;
  ImplementSpec impl;
  SimConfig cfg;
};

inline SimCase random_sim_case(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SimCase c;
  c.impl = plow_bottom();
  c.impl.width_m = 0.2 + 0.8 * u(gen);
  c.impl.typical_speed_kmh = 2.0 + 6.0 * u(gen);
  c.field = field(50 + 950 * u(gen), 0.5 + 15.0 * u(gen), 0.4 + 0.59 * u(gen));
  c.machine = u(gen) < 0.6 ? trse(0.5 + 4.5 * u(gen), 0.5 * u(gen)) : trse_unlimited();
  c.cfg.fleet_size = 1 + static_cast<int>(u(gen) * 8);
  c.cfg.packs_per_robot = 1 + static_cast<int>(u(gen) * 2);
  c.cfg.seed = gen();
  return c;
}

inline bool sim_results_identical(const SimResult& a, const SimResult& b) {
  if (a.makespan_h != b.makespan_h || a.total_area_ha != b.total_area_ha ||
      a.total_energy_or_fuel != b.total_energy_or_fuel || a.total_cost_usd != b.total_cost_usd ||
      a.speed_kmh != b.speed_kmh || a.soil_factor_fi != b.soil_factor_fi ||
      a.draft_n != b.draft_n || a.power_demand_kw != b.power_demand_kw || a.seed != b.seed)
    return false;
  if (a.per_robot_busy_hours != b.per_robot_busy_hours ||
      a.per_robot_finish_h != b.per_robot_finish_h)
    return false;
  if (a.swap_events.size() != b.swap_events.size()) return false;
  for (std::size_t i = 0; i < a.swap_events.size(); ++i)
    if (a.swap_events[i].robot != b.swap_events[i].robot ||
        a.swap_events[i].time_h != b.swap_events[i].time_h ||
        a.swap_events[i].duration_h != b.swap_events[i].duration_h)
      return false;
  if (a.strips.size() != b.strips.size()) return false;
  for (std::size_t i = 0; i < a.strips.size(); ++i)
    if (a.strips[i].assigned_robot != b.strips[i].assigned_robot ||
        a.strips[i].plowed != b.strips[i].plowed || a.strips[i].start_h != b.strips[i].start_h ||
        a.strips[i].end_h != b.strips[i].end_h)
      return false;
  return true;
}

struct PropertyViolations {
  int conservation = 0;
  int lower_bound = 0;
  int assignment = 0;
  int monotonic = 0;
  int determinism = 0;
  int battery_clock = 0;
  int total() const {
    return conservation + lower_bound + assignment + monotonic + determinism + battery_clock;
  }
};

inline void check_sim_properties(const SimCase& c, PropertyViolations& v) {
  const SimResult r1 = simulate(c.field, c.machine, c.impl, c.cfg);
  const SimResult r2 = simulate(c.field, c.machine, c.impl, c.cfg);
  if (!sim_results_identical(r1, r2)) ++v.determinism;

  double plowed_area = 0.0;
  for (const Strip& s : r1.strips)
    if (s.plowed) plowed_area += s.area_ha();
  if (std::abs(plowed_area - c.field.area_ha()) > 1e-6 ||
      std::abs(r1.total_area_ha - c.field.area_ha()) > 1e-6)
    ++v.conservation;

  const double capacity =
      field_capacity(c.impl.typical_speed_kmh, c.impl.width_m, c.field.op_efficiency);
  if (capacity > 0 &&
      r1.makespan_h < c.field.area_ha() / (capacity * c.cfg.fleet_size) - 1e-9)
    ++v.lower_bound;

  // every strip plowed by exactly one robot; a robot's strips never overlap
  std::vector<std::vector<std::pair<double, double>>> intervals(c.cfg.fleet_size);
  bool assignment_ok = true;
  for (const Strip& s : r1.strips) {
    if (!s.plowed || !s.assigned_robot || *s.assigned_robot < 0 ||
        *s.assigned_robot >= c.cfg.fleet_size) {
      assignment_ok = false;
      break;
    }
    intervals[*s.assigned_robot].push_back({s.start_h, s.end_h});
  }
  if (assignment_ok) {
    for (auto& iv : intervals) {
      std::sort(iv.begin(), iv.end());
      for (std::size_t i = 1; i < iv.size(); ++i)
        if (iv[i].first < iv[i - 1].second - 1e-9) assignment_ok = false;
    }
  }
  if (!assignment_ok) ++v.assignment;

  SimConfig bigger = c.cfg;
  bigger.fleet_size += 1;
  const SimResult r3 = simulate(c.field, c.machine, c.impl, bigger);
  if (r3.makespan_h > r1.makespan_h + 1e-9) ++v.monotonic;

  if (c.machine.battery) {
    const double budget = c.cfg.packs_per_robot * c.machine.battery->autonomy_per_pack_h;
    bool clock_ok = true;
    for (int r = 0; r < c.cfg.fleet_size; ++r) {
      double segment_start = 0.0;
      for (const SwapEvent& e : r1.swap_events) {
        if (e.robot != r) continue;
        if (e.time_h - segment_start > budget + 1e-6) clock_ok = false;
        segment_start = e.time_h + e.duration_h;
      }
      if (r1.per_robot_finish_h[r] - segment_start > budget + 1e-6) clock_ok = false;
    }
    if (!clock_ok) ++v.battery_clock;
  }
}

// Exhaustive enumeration over the integer design grid at fixed speed; the
// independent route to the optimum the PSO is expected to find.
struct EnumBest {
  FleetDesign design;
  double objective = std::numeric_limits<double>::infinity();
};

inline EnumBest enumerate_designs(const Scenario& sc, double deadline_h, double speed_kmh,
                                  int robots_lo, int robots_hi, int packs_lo, int packs_hi) {
  EnumBest best;
  const double penalty = sc.pso->penalty_usd_per_h;
  for (int n = robots_lo; n <= robots_hi; ++n) {
    for (int p = packs_lo; p <= packs_hi; ++p) {
      FleetDesign d{n, p, speed_kmh};
      double value = std::numeric_limits<double>::infinity();
      try {
        const SimResult r = simulate_design(sc, d);
        value = r.total_cost_usd + penalty * std::max(0.0, r.makespan_h - deadline_h);
      } catch (const std::exception&) {
      }
      if (value < best.objective) {
        best.objective = value;
        best.design = d;
      }
    }
  }
  return best;
}

}  // namespace testutil
