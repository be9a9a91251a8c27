// Command-line front end: compare / simulate / audit / optimize over a
// scenario file, with a human-readable report on stdout and reproducible CSV
// files under --out. Exit codes: 0 success, 1 infeasible or failed analysis,
// 2 input error.
#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "agrifleet/csv.hpp"
#include "agrifleet/optimize.hpp"
#include "agrifleet/scenario.hpp"

namespace agrifleet::cli {

struct Options {
  std::string scenario_path;
  std::string out_dir;  // empty: no files
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  std::string format = "report";

  bool want_files() const { return !out_dir.empty(); }
  std::string out_path(const std::string& name) const {
    return (std::filesystem::path(out_dir) / name).string();
  }
};

namespace detail {

inline void print_line(std::ostream& os, const std::string& label, const std::string& value,
                       const std::string& unit = "") {
  os << "  " << label << "  ";
  for (std::size_t i = label.size() + 2; i < 38; ++i) os << ' ';
  os << value;
  if (!unit.empty()) os << ' ' << unit;
  os << '\n';
}

}  // namespace detail

// --- compare -----------------------------------------------------------------

struct ComparisonFigures {
  const MachineSpec* large = nullptr;
  const MachineSpec* swarm = nullptr;
  double speed_kmh = 0.0;
  double width_large_m = 0.0, width_swarm_m = 0.0;
  double draft_large_n = 0.0, draft_swarm_n = 0.0;
  double power_large_kw = 0.0, power_swarm_kw = 0.0;
  EquivalenceReport equivalence;
  std::optional<double> cf_l_kwh;       // diesel large side only
  std::optional<double> fuel_l_h;
  CostBreakdown large_cost{0, 0};
  CostBreakdown swarm_cost{0, 0};       // at the scenario's packs_in_use
  std::optional<CostBreakdown> swarm_cost_two_pack;
  double acquisition_delta_usd = 0.0;
  double cost_ratio = 0.0;              // large total / swarm total
  std::optional<double> cost_ratio_two_pack;
};

inline ComparisonFigures compute_comparison(const Scenario& sc) {
  if (!sc.comparison) throw std::invalid_argument("scenario has no comparison section");
  const ComparisonSpec& cmp = *sc.comparison;
  ComparisonFigures f;
  f.large = &sc.machine(cmp.large_machine);
  f.swarm = &sc.machine(cmp.swarm_machine);
  const ImplementSpec base = sc.implement();
  const ImplementSpec impl_large = base.with_bottoms(cmp.large_bottoms);
  const ImplementSpec impl_swarm = base.with_bottoms(cmp.swarm_bottoms);
  f.speed_kmh = base.typical_speed_kmh;
  f.width_large_m = impl_large.width_m;
  f.width_swarm_m = impl_swarm.width_m;
  f.draft_large_n = draft_force(impl_large, f.speed_kmh);
  f.draft_swarm_n = draft_force(impl_swarm, f.speed_kmh);
  f.power_large_kw = nominal_power(f.draft_large_n, f.speed_kmh, f.large->transfer_efficiency);
  f.power_swarm_kw = nominal_power(f.draft_swarm_n, f.speed_kmh, f.swarm->transfer_efficiency);
  f.equivalence = equivalence_report(
      field_capacity(f.speed_kmh, impl_large.width_m, sc.field.op_efficiency),
      field_capacity(f.speed_kmh, impl_swarm.width_m, sc.field.op_efficiency), f.large->mass_kg,
      f.swarm->mass_kg);
  const int fleet = f.equivalence.required_fleet;

  if (f.large->fuel) {
    f.cf_l_kwh = specific_fuel_consumption(f.large->fuel->pto_power_ratio_x);
    f.fuel_l_h = hourly_fuel_use(f.large->rated_power_kw, f.large->fuel->pto_power_ratio_x);
  }
  const int large_packs = f.large->battery ? f.large->battery->packs_fitted : 1;
  f.large_cost = fleet_hourly_cost(*f.large, 1, large_packs, sc.operator_or_null(),
                                   sc.prices_or_null());
  f.swarm_cost = fleet_hourly_cost(*f.swarm, fleet, cmp.swarm_packs_in_use, nullptr,
                                   sc.prices_or_null());
  if (f.swarm->battery) {
    f.swarm_cost_two_pack = fleet_hourly_cost(*f.swarm, fleet, 2, nullptr, sc.prices_or_null());
    f.cost_ratio_two_pack = f.large_cost.total_usd_h / f.swarm_cost_two_pack->total_usd_h;
  }
  f.cost_ratio = f.large_cost.total_usd_h / f.swarm_cost.total_usd_h;

  f.acquisition_delta_usd =
      acquisition_delta(f.large->purchase_price_usd, f.swarm->purchase_price_usd, fleet);
  return f;
}

inline void write_compare_csv(const ComparisonFigures& f, csv::Writer& w) {
  w.row({"metric", "value"});
  w.row({"speed_kmh", csv::num(f.speed_kmh)});
  w.row({"draft_large_n", csv::num(f.draft_large_n)});
  w.row({"draft_swarm_n", csv::num(f.draft_swarm_n)});
  w.row({"nominal_power_large_kw", csv::num(f.power_large_kw)});
  w.row({"nominal_power_swarm_kw", csv::num(f.power_swarm_kw)});
  w.row({"field_capacity_large_ha_h", csv::num(f.equivalence.capacity_large_ha_h)});
  w.row({"field_capacity_swarm_ha_h", csv::num(f.equivalence.capacity_small_ha_h)});
  w.row({"equivalent_fleet_size", csv::num(f.equivalence.required_fleet)});
  if (f.cf_l_kwh) w.row({"specific_fuel_consumption_l_kwh", csv::num(*f.cf_l_kwh)});
  if (f.fuel_l_h) w.row({"hourly_fuel_use_l_h", csv::num(*f.fuel_l_h)});
  w.row({"acquisition_delta_usd", csv::num(f.acquisition_delta_usd)});
  w.row({"weight_ratio", csv::num(f.equivalence.weight_ratio)});
  w.row({"ground_load_large_n", csv::num(f.equivalence.ground_load_large_n)});
  w.row({"ground_load_swarm_n", csv::num(f.equivalence.ground_load_small_n)});
  w.row({"cost_ratio_large_over_swarm", csv::num(f.cost_ratio)});
  if (f.cost_ratio_two_pack)
    w.row({"cost_ratio_large_over_swarm_two_pack", csv::num(*f.cost_ratio_two_pack)});
}

inline void write_costs_csv(const ComparisonFigures& f, csv::Writer& w) {
  w.row({"item", "usd_per_hour"});
  w.row({"large_fuel_or_energy", csv::num(f.large_cost.fuel_or_energy_usd_h)});
  w.row({"large_operator", csv::num(f.large_cost.operator_usd_h)});
  w.row({"large_total", csv::num(f.large_cost.total_usd_h)});
  w.row({"swarm_fleet_fuel_or_energy", csv::num(f.swarm_cost.fuel_or_energy_usd_h)});
  w.row({"swarm_fleet_total", csv::num(f.swarm_cost.total_usd_h)});
  if (f.swarm_cost_two_pack)
    w.row({"swarm_fleet_total_two_pack", csv::num(f.swarm_cost_two_pack->total_usd_h)});
}

inline int cmd_compare(const Scenario& sc, const Options& opts) {
  const ComparisonFigures f = compute_comparison(sc);

  if (opts.want_files()) {
    csv::Writer w(opts.out_path("compare.csv"));
    write_compare_csv(f, w);
    csv::Writer wc(opts.out_path("costs.csv"));
    write_costs_csv(f, wc);
  }

  if (opts.format == "csv") {
    std::cout << "metric,value\n";
    std::cout << "draft_large_n," << csv::num(f.draft_large_n) << "\n"
              << "draft_swarm_n," << csv::num(f.draft_swarm_n) << "\n"
              << "nominal_power_large_kw," << csv::num(f.power_large_kw) << "\n"
              << "nominal_power_swarm_kw," << csv::num(f.power_swarm_kw) << "\n"
              << "field_capacity_large_ha_h," << csv::num(f.equivalence.capacity_large_ha_h) << "\n"
              << "field_capacity_swarm_ha_h," << csv::num(f.equivalence.capacity_small_ha_h) << "\n"
              << "equivalent_fleet_size," << csv::num(f.equivalence.required_fleet) << "\n"
              << "large_total_usd_h," << csv::num(f.large_cost.total_usd_h) << "\n"
              << "swarm_fleet_total_usd_h," << csv::num(f.swarm_cost.total_usd_h) << "\n"
              << "acquisition_delta_usd," << csv::num(f.acquisition_delta_usd) << "\n"
              << "weight_ratio," << csv::num(f.equivalence.weight_ratio) << "\n"
              << "ground_load_large_n," << csv::num(f.equivalence.ground_load_large_n) << "\n"
              << "ground_load_swarm_n," << csv::num(f.equivalence.ground_load_small_n) << "\n";
    return 0;
  }

  std::ostream& os = std::cout;
  os << "== " << f.large->name << " vs " << f.equivalence.required_fleet << " x " << f.swarm->name << " ==\n";
  detail::print_line(os, "speed", csv::fixed(f.speed_kmh, 2), "km/h");
  detail::print_line(os, "cutting width (large / swarm)",
                     csv::fixed(f.width_large_m, 2) + " / " + csv::fixed(f.width_swarm_m, 2), "m");
  detail::print_line(os, "draft (large / swarm)",
                     csv::fixed(f.draft_large_n, 2) + " / " + csv::fixed(f.draft_swarm_n, 2), "N");
  detail::print_line(os, "nominal power (large / swarm)",
                     csv::fixed(f.power_large_kw, 2) + " / " + csv::fixed(f.power_swarm_kw, 2),
                     "kW");
  detail::print_line(os, "field capacity (large / swarm)",
                     csv::fixed(f.equivalence.capacity_large_ha_h, 3) + " / " + csv::fixed(f.equivalence.capacity_small_ha_h, 3),
                     "ha/h");
  detail::print_line(os, "equivalent fleet size", std::to_string(f.equivalence.required_fleet));
  if (f.cf_l_kwh)
    detail::print_line(os, "specific fuel consumption", csv::fixed(*f.cf_l_kwh, 4), "L/kWh");
  if (f.fuel_l_h) detail::print_line(os, "hourly fuel use", csv::fixed(*f.fuel_l_h, 2), "L/h");
  detail::print_line(os, "large fuel/energy cost", csv::fixed(f.large_cost.fuel_or_energy_usd_h, 2),
                     "USD/h");
  detail::print_line(os, "large operator cost", csv::fixed(f.large_cost.operator_usd_h, 2),
                     "USD/h");
  detail::print_line(os, "large total cost", csv::fixed(f.large_cost.total_usd_h, 2), "USD/h");
  detail::print_line(os, "swarm fleet total cost", csv::fixed(f.swarm_cost.total_usd_h, 2),
                     "USD/h");
  if (f.swarm_cost_two_pack)
    detail::print_line(os, "swarm fleet total, two packs",
                       csv::fixed(f.swarm_cost_two_pack->total_usd_h, 2), "USD/h");
  detail::print_line(os, "cost ratio large/swarm", csv::fixed(f.cost_ratio, 2));
  if (f.cost_ratio_two_pack)
    detail::print_line(os, "cost ratio, two packs", csv::fixed(*f.cost_ratio_two_pack, 2));
  detail::print_line(os, "acquisition delta", csv::fixed(f.acquisition_delta_usd, 2), "USD");
  detail::print_line(os, "weight ratio", csv::fixed(f.equivalence.weight_ratio, 2));
  detail::print_line(os, "ground load (large / swarm)",
                     csv::fixed(f.equivalence.ground_load_large_n, 2) + " / " +
                         csv::fixed(f.equivalence.ground_load_small_n, 2),
                     "N");
  return 0;
}

// --- simulate ----------------------------------------------------------------

inline int cmd_simulate(const Scenario& sc, const Options& opts) {
  if (!sc.sim) throw std::invalid_argument("scenario has no sim section");
  const SimSection& section = *sc.sim;
  const MachineSpec& machine = sc.machine(section.machine);
  const ImplementSpec impl = sc.implement().with_bottoms(section.bottoms);
  SimConfig cfg = section.config;
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.runs) cfg.monte_carlo_runs = *opts.runs;

  const OperatorCostModel* op =
      machine.drivetrain == Drivetrain::diesel_mechanical ? sc.operator_or_null() : nullptr;
  const SimResult r = simulate(sc.field, machine, impl, cfg, op, sc.prices_or_null());

  std::optional<MonteCarloSummary> mc;
  if (cfg.stochastic && cfg.monte_carlo_runs > 1)
    mc = monte_carlo(sc.field, machine, impl, cfg, op, sc.prices_or_null());

  double busy_total = 0.0;
  for (double b : r.per_robot_busy_hours) busy_total += b;

  auto write_summary = [&](csv::Writer& w) {
    w.row({"key", "value"});
    w.row({"machine", machine.name});
    w.row({"fleet_size", csv::num(cfg.fleet_size)});
    w.row({"packs_per_robot", csv::num(cfg.packs_per_robot)});
    w.row({"seed", csv::num(std::uint64_t{r.seed})});
    w.row({"makespan_h", csv::num(r.makespan_h)});
    w.row({"total_area_ha", csv::num(r.total_area_ha)});
    w.row({"busy_hours_total", csv::num(busy_total)});
    w.row({"swap_count", csv::num(static_cast<int>(r.swap_events.size()))});
    w.row({machine.battery ? "total_energy_kwh" : "total_fuel_l", csv::num(r.total_energy_or_fuel)});
    w.row({"total_cost_usd", csv::num(r.total_cost_usd)});
    w.row({"speed_kmh", csv::num(r.speed_kmh)});
    w.row({"soil_factor_fi", csv::num(r.soil_factor_fi)});
    w.row({"draft_n", csv::num(r.draft_n)});
    w.row({"power_demand_kw", csv::num(r.power_demand_kw)});
  };

  if (opts.want_files()) {
    csv::Writer events(opts.out_path("events.csv"));
    events.row({"robot", "time_h", "duration_h"});
    for (const auto& e : r.swap_events)
      events.row({csv::num(e.robot), csv::num(e.time_h), csv::num(e.duration_h)});

    csv::Writer strips(opts.out_path("strips.csv"));
    strips.row({"strip", "width_m", "length_m", "reversed", "robot", "start_h", "end_h", "area_ha",
                "max_load_n"});
    for (const auto& s : r.strips) {
      const double load = s.plowed ? ground_load(machine.mass_kg) : 0.0;
      strips.row({csv::num(s.index), csv::num(s.width_m), csv::num(s.length_m),
                  s.reversed ? "1" : "0", s.assigned_robot ? csv::num(*s.assigned_robot) : "",
                  csv::num(s.start_h), csv::num(s.end_h), csv::num(s.area_ha()), csv::num(load)});
    }

    csv::Writer summary(opts.out_path("summary.csv"));
    write_summary(summary);

    if (mc) {
      csv::Writer w(opts.out_path("mc.csv"));
      w.row({"metric", "mean", "stddev", "min", "max"});
      w.row({"makespan_h", csv::num(mc->makespan_h.mean), csv::num(mc->makespan_h.stddev),
             csv::num(mc->makespan_h.min), csv::num(mc->makespan_h.max)});
      w.row({"cost_usd", csv::num(mc->cost_usd.mean), csv::num(mc->cost_usd.stddev),
             csv::num(mc->cost_usd.min), csv::num(mc->cost_usd.max)});
    }
  }

  if (opts.format == "csv") {
    std::cout << "key,value\n"
              << "seed," << csv::num(std::uint64_t{r.seed}) << "\n"
              << "makespan_h," << csv::num(r.makespan_h) << "\n"
              << "total_area_ha," << csv::num(r.total_area_ha) << "\n"
              << "total_cost_usd," << csv::num(r.total_cost_usd) << "\n";
    return 0;
  }

  std::ostream& os = std::cout;
  os << "== simulation: " << cfg.fleet_size << " x " << machine.name << " ==\n";
  detail::print_line(os, "seed", csv::num(std::uint64_t{r.seed}));
  detail::print_line(os, "strips", std::to_string(r.strips.size()));
  detail::print_line(os, "makespan", csv::fixed(r.makespan_h, 3), "h");
  detail::print_line(os, "area plowed", csv::fixed(r.total_area_ha, 4), "ha");
  detail::print_line(os, "busy hours (fleet)", csv::fixed(busy_total, 3), "h");
  detail::print_line(os, "battery swaps", std::to_string(r.swap_events.size()));
  detail::print_line(os, machine.battery ? "energy drawn" : "fuel burned",
                     csv::fixed(r.total_energy_or_fuel, 2), machine.battery ? "kWh" : "L");
  detail::print_line(os, "job cost", csv::fixed(r.total_cost_usd, 2), "USD");
  detail::print_line(os, "speed", csv::fixed(r.speed_kmh, 3), "km/h");
  detail::print_line(os, "draft per machine", csv::fixed(r.draft_n, 2), "N");
  detail::print_line(os, "power demand per machine", csv::fixed(r.power_demand_kw, 2), "kW");
  if (mc) {
    os << "== monte carlo (" << mc->runs << " runs, seed " << mc->seed << ") ==\n";
    detail::print_line(os, "makespan mean/stddev",
                       csv::fixed(mc->makespan_h.mean, 3) + " / " +
                           csv::fixed(mc->makespan_h.stddev, 4),
                       "h");
    detail::print_line(os, "makespan min/max",
                       csv::fixed(mc->makespan_h.min, 3) + " / " + csv::fixed(mc->makespan_h.max, 3),
                       "h");
    detail::print_line(os, "cost mean/stddev",
                       csv::fixed(mc->cost_usd.mean, 2) + " / " + csv::fixed(mc->cost_usd.stddev, 3),
                       "USD");
  }
  return 0;
}

// --- audit -------------------------------------------------------------------

inline int cmd_audit(const Scenario& sc, const Options& opts) {
  if (!sc.bom) throw std::invalid_argument("scenario has no bom catalog");
  const BomReport report = bom_rollup(sc.bom->lines, sc.bom->declared_total_usd);

  // energy audit target: the electric machine of the comparison, else the sim
  // machine if electric
  const MachineSpec* electric = nullptr;
  int bottoms = 1;
  if (sc.comparison && sc.machine(sc.comparison->swarm_machine).battery) {
    electric = &sc.machine(sc.comparison->swarm_machine);
    bottoms = sc.comparison->swarm_bottoms;
  } else if (sc.sim && sc.machine(sc.sim->machine).battery) {
    electric = &sc.machine(sc.sim->machine);
    bottoms = sc.sim->bottoms;
  }
  std::optional<EnergyAudit> audit;
  if (electric) {
    const ImplementSpec impl = sc.implement().with_bottoms(bottoms);
    const double draft = draft_force(impl, impl.typical_speed_kmh);
    const double power = nominal_power(draft, impl.typical_speed_kmh, electric->transfer_efficiency);
    audit = energy_audit(*electric, power);
  }

  auto is_flagged = [&](const BomLine& line) {
    for (const auto& d : report.line_discrepancies)
      if (d.component == line.component) return true;
    return false;
  };

  if (opts.want_files()) {
    csv::Writer bom(opts.out_path("bom.csv"));
    bom.row({"component", "quantity", "unit_value_usd", "line_value_usd", "product_usd", "flagged"});
    for (const auto& line : sc.bom->lines)
      bom.row({line.component, csv::num(line.quantity), csv::num(line.unit_value_usd),
               csv::num(line.line_value_usd), csv::num(line.quantity * line.unit_value_usd),
               is_flagged(line) ? "1" : "0"});

    csv::Writer w(opts.out_path("audit.csv"));
    w.row({"key", "value"});
    w.row({"bom_computed_total_usd", csv::num(report.computed_total_usd)});
    w.row({"bom_declared_total_usd", csv::num(report.declared_total_usd)});
    w.row({"bom_total_discrepancy_usd", csv::num(report.total_discrepancy_usd)});
    w.row({"bom_flagged_lines", csv::num(static_cast<int>(report.line_discrepancies.size()))});
    if (audit) {
      w.row({"pack_energy_kwh", csv::num(audit->pack_energy_kwh)});
      w.row({"required_power_kw", csv::num(audit->required_power_kw)});
      w.row({"claimed_autonomy_h", csv::num(audit->claimed_autonomy_h)});
      w.row({"required_energy_kwh", csv::num(audit->required_energy_kwh)});
      w.row({"energy_feasible", audit->feasible ? "1" : "0"});
      w.row({"shortfall_kwh", csv::num(audit->shortfall_kwh)});
    }
  }

  if (opts.format == "csv") {
    std::cout << "key,value\n"
              << "bom_computed_total_usd," << csv::num(report.computed_total_usd) << "\n"
              << "bom_declared_total_usd," << csv::num(report.declared_total_usd) << "\n"
              << "bom_total_discrepancy_usd," << csv::num(report.total_discrepancy_usd) << "\n";
    if (audit) {
      std::cout << "pack_energy_kwh," << csv::num(audit->pack_energy_kwh) << "\n"
                << "required_energy_kwh," << csv::num(audit->required_energy_kwh) << "\n"
                << "energy_feasible," << (audit->feasible ? "1" : "0") << "\n"
                << "shortfall_kwh," << csv::num(audit->shortfall_kwh) << "\n";
    }
    return 0;
  }

  std::ostream& os = std::cout;
  os << "== bill-of-materials audit ==\n";
  detail::print_line(os, "computed line-sum", csv::fixed(report.computed_total_usd, 2), "USD");
  detail::print_line(os, "declared total", csv::fixed(report.declared_total_usd, 2), "USD");
  detail::print_line(os, "total discrepancy", csv::fixed(report.total_discrepancy_usd, 2), "USD");
  for (const auto& d : report.line_discrepancies)
    detail::print_line(os, "line mismatch: " + d.component,
                       csv::fixed(d.product_usd, 2) + " vs printed " + csv::fixed(d.printed_usd, 2),
                       "USD");
  if (audit) {
    os << "== battery energy audit: " << electric->name << " ==\n";
    detail::print_line(os, "pack energy", csv::fixed(audit->pack_energy_kwh, 2), "kWh");
    detail::print_line(os, "required power", csv::fixed(audit->required_power_kw, 2), "kW");
    detail::print_line(os, "claimed autonomy", csv::fixed(audit->claimed_autonomy_h, 2), "h");
    detail::print_line(os, "required energy", csv::fixed(audit->required_energy_kwh, 2), "kWh");
    detail::print_line(os, "feasible", audit->feasible ? "yes" : "no");
    detail::print_line(os, "shortfall", csv::fixed(audit->shortfall_kwh, 2), "kWh");
  }
  return 0;
}

// --- optimize ----------------------------------------------------------------

inline int cmd_optimize(const Scenario& sc, const Options& opts) {
  if (!sc.pso) throw std::invalid_argument("scenario has no pso section");
  PsoConfig cfg = sc.pso->config;
  if (opts.seed) cfg.seed = *opts.seed;

  const OptimizeResult result = optimize_fleet(sc, sc.pso->deadline_h, cfg);

  if (opts.want_files()) {
    csv::Writer history(opts.out_path("history.csv"));
    history.row({"iteration", "best_value"});
    for (std::size_t i = 0; i < result.history.size(); ++i)
      history.row({csv::num(static_cast<int>(i)), csv::num(result.history[i])});

    csv::Writer design(opts.out_path("design.csv"));
    design.row({"key", "value"});
    design.row({"robot_count", csv::num(result.design.robot_count)});
    design.row({"packs_per_robot", csv::num(result.design.packs_per_robot)});
    design.row({"speed_kmh", csv::num(result.design.speed_kmh)});
    design.row({"cost_usd", csv::num(result.cost_usd)});
    design.row({"makespan_h", csv::num(result.makespan_h)});
    design.row({"feasible", result.feasible ? "1" : "0"});
    design.row({"deadline_h", csv::num(sc.pso->deadline_h)});
    design.row({"seed", csv::num(std::uint64_t{cfg.seed})});
  }

  if (opts.format == "csv") {
    std::cout << "key,value\n"
              << "robot_count," << csv::num(result.design.robot_count) << "\n"
              << "packs_per_robot," << csv::num(result.design.packs_per_robot) << "\n"
              << "speed_kmh," << csv::num(result.design.speed_kmh) << "\n"
              << "cost_usd," << csv::num(result.cost_usd) << "\n"
              << "makespan_h," << csv::num(result.makespan_h) << "\n"
              << "feasible," << (result.feasible ? "1" : "0") << "\n";
  } else {
    std::ostream& os = std::cout;
    os << "== fleet optimization ==\n";
    detail::print_line(os, "seed", csv::num(std::uint64_t{cfg.seed}));
    detail::print_line(os, "robot count", std::to_string(result.design.robot_count));
    detail::print_line(os, "packs per robot", std::to_string(result.design.packs_per_robot));
    detail::print_line(os, "speed", csv::fixed(result.design.speed_kmh, 3), "km/h");
    detail::print_line(os, "makespan", csv::fixed(result.makespan_h, 3), "h");
    detail::print_line(os, "job cost", csv::fixed(result.cost_usd, 2), "USD");
    detail::print_line(os, "deadline", csv::fixed(sc.pso->deadline_h, 3), "h");
    detail::print_line(os, "feasible", result.feasible ? "yes" : "no");
  }
  return result.feasible ? 0 : 1;
}

// --- entry point ---------------------------------------------------------------

inline int run(int argc, const char* const* argv) {
  CLI::App app{"fleet planning for plowing: tractor-vs-swarm comparison, coverage simulation, "
               "BOM/energy audits and PSO fleet optimization"};
  app.require_subcommand(1);

  Options opts;
  std::uint64_t seed_value = 0;
  int runs_value = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", opts.scenario_path, "scenario JSON file")->required();
    sub->add_option("--out", opts.out_dir, "directory to write CSV outputs into");
    sub->add_option("--seed", seed_value, "override the scenario seed");
    sub->add_option("--runs", runs_value, "override the monte carlo run count");
    sub->add_option("--format", opts.format, "stdout format: report or csv")
        ->check(CLI::IsMember({"report", "csv"}));
  };

  CLI::App* compare = app.add_subcommand("compare", "reproduce the tractor-vs-swarm comparison");
  CLI::App* simulate = app.add_subcommand("simulate", "run the strip-coverage simulation");
  CLI::App* audit = app.add_subcommand("audit", "BOM rollup and battery energy audit");
  CLI::App* optimize = app.add_subcommand("optimize", "PSO fleet-design optimization");
  for (CLI::App* sub : {compare, simulate, audit, optimize}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* parsed = app.get_subcommands().front();
  if (parsed->count("--seed") > 0) opts.seed = seed_value;
  if (parsed->count("--runs") > 0) opts.runs = runs_value;

  Scenario sc;
  try {
    sc = load_scenario(opts.scenario_path);
    if (opts.want_files()) std::filesystem::create_directories(opts.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (compare->parsed()) return cmd_compare(sc, opts);
    if (simulate->parsed()) return cmd_simulate(sc, opts);
    if (audit->parsed()) return cmd_audit(sc, opts);
    return cmd_optimize(sc, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "analysis failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace agrifleet::cli
