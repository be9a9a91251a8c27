// Scenario files: one JSON document that references the implement/machine
// catalogs and carries the field, prices, operator, simulation and optimizer
// sections. Keys carry unit suffixes (speed_kmh, width_m, depth_cm, mass_kg)
// so a value in the wrong unit is a visible schema error, not a silent one.
#pragma once

#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <string>

#include <json.hpp>

#include "agrifleet/cost.hpp"
#include "agrifleet/machine.hpp"
#include "agrifleet/pso.hpp"
#include "agrifleet/sim.hpp"

namespace agrifleet {

struct ComparisonSpec {
  std::string large_machine;
  std::string swarm_machine;
  int large_bottoms = 1;
  int swarm_bottoms = 1;
  int swarm_packs_in_use = 1;
};

struct SimSection {
  std::string machine;
  int bottoms = 1;
  SimConfig config;
};

struct PsoSection {
  std::string machine;
  int bottoms = 1;
  PsoConfig config;
  double deadline_h = std::numeric_limits<double>::infinity();
  double penalty_usd_per_h = 1e6;
};

struct Scenario {
  std::vector<ImplementSpec> implements;
  std::vector<MachineSpec> machines;
  std::optional<BomFile> bom;
  std::string implement_ref;
  FieldSpec field;
  std::optional<ComparisonSpec> comparison;
  std::optional<OperatorCostModel> operator_model;
  std::optional<PriceBook> prices;
  std::optional<SimSection> sim;
  std::optional<PsoSection> pso;

  const ImplementSpec& implement() const { return find_implement(implements, implement_ref); }
  const MachineSpec& machine(const std::string& name) const { return find_machine(machines, name); }
  const OperatorCostModel* operator_or_null() const {
    return operator_model ? &*operator_model : nullptr;
  }
  const PriceBook* prices_or_null() const { return prices ? &*prices : nullptr; }
};

namespace detail {

inline std::string resolve_path(const std::filesystem::path& base_dir, const std::string& rel) {
  std::filesystem::path p(rel);
  return p.is_absolute() ? p.string() : (base_dir / p).string();
}

inline SimConfig sim_config_from_json(const nlohmann::json& j) {
  SimConfig cfg;
  cfg.fleet_size = j.value("fleet_size", 1);
  cfg.packs_per_robot = j.value("packs_per_robot", 1);
  if (j.contains("swap_duration_h")) cfg.swap_duration_h = j.at("swap_duration_h").get<double>();
  cfg.stochastic = j.value("stochastic", false);
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.monte_carlo_runs = j.value("monte_carlo_runs", 1);
  cfg.fi_variation = j.value("fi_variation", 0.0);
  cfg.speed_variation = j.value("speed_variation", 0.0);
  cfg.validate();
  return cfg;
}

inline PsoConfig pso_config_from_json(const nlohmann::json& j) {
  PsoConfig cfg;
  cfg.swarm_size = j.value("swarm_size", cfg.swarm_size);
  cfg.iterations = j.value("iterations", cfg.iterations);
  cfg.inertia_w = j.value("inertia_w", cfg.inertia_w);
  cfg.cognitive_c1 = j.value("cognitive_c1", cfg.cognitive_c1);
  cfg.social_c2 = j.value("social_c2", cfg.social_c2);
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.velocity_clamp = j.value("velocity_clamp", cfg.velocity_clamp);
  const auto& jb = j.at("bounds");
  // fixed decision-vector layout: robot_count, packs_per_robot, speed_kmh
  for (const char* key : {"robot_count", "packs_per_robot", "speed_kmh"}) {
    const auto& pair = jb.at(key);
    cfg.bounds.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
  }
  cfg.validate();
  return cfg;
}

}  // namespace detail

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  const auto base_dir = std::filesystem::path(path).parent_path();

  Scenario sc;
  const auto& cat = j.at("catalogs");
  sc.implements = load_implement_table(
      detail::resolve_path(base_dir, cat.at("implements").get<std::string>()));
  sc.machines =
      load_machine_catalog(detail::resolve_path(base_dir, cat.at("machines").get<std::string>()));
  if (cat.contains("bom"))
    sc.bom = load_bom(detail::resolve_path(base_dir, cat.at("bom").get<std::string>()));

  sc.implement_ref = j.at("implement").get<std::string>();
  find_implement(sc.implements, sc.implement_ref);  // fail fast on a dangling reference

  const auto& jf = j.at("field");
  sc.field.length_m = jf.at("length_m").get<double>();
  sc.field.width_m = jf.at("width_m").get<double>();
  sc.field.op_efficiency = jf.at("op_efficiency").get<double>();
  sc.field.validate();

  if (j.contains("comparison")) {
    const auto& jc = j.at("comparison");
    ComparisonSpec cmp;
    cmp.large_machine = jc.at("large_machine").get<std::string>();
    cmp.swarm_machine = jc.at("swarm_machine").get<std::string>();
    cmp.large_bottoms = jc.value("large_bottoms", 1);
    cmp.swarm_bottoms = jc.value("swarm_bottoms", 1);
    cmp.swarm_packs_in_use = jc.value("swarm_packs_in_use", 1);
    find_machine(sc.machines, cmp.large_machine);
    find_machine(sc.machines, cmp.swarm_machine);
    sc.comparison = cmp;
  }

  if (j.contains("prices")) {
    PriceBook pb;
    pb.diesel_usd_per_l = j.at("prices").at("diesel_usd_per_l").get<double>();
    pb.exchange_rate_brl_per_usd = j.at("prices").at("exchange_rate_brl_per_usd").get<double>();
    pb.validate();
    sc.prices = pb;
  }

  if (j.contains("operator")) {
    const auto& jo = j.at("operator");
    OperatorCostModel op;
    op.monthly_salary_usd = jo.at("monthly_salary_usd").get<double>();
    op.charges_rate = jo.at("charges_rate").get<double>();
    op.insurance_monthly_usd = jo.at("insurance_monthly_usd").get<double>();
    op.training_monthly_usd = jo.at("training_monthly_usd").get<double>();
    op.hours_divisor = jo.value("hours_divisor", 40.0);
    op.validate();
    sc.operator_model = op;
  }

  if (j.contains("sim")) {
    const auto& js = j.at("sim");
    SimSection sim;
    sim.machine = js.at("machine").get<std::string>();
    sim.bottoms = js.value("bottoms", 1);
    sim.config = detail::sim_config_from_json(js);
    find_machine(sc.machines, sim.machine);
    sc.sim = sim;
  }

  if (j.contains("pso")) {
    const auto& jp = j.at("pso");
    PsoSection pso;
    pso.machine = jp.at("machine").get<std::string>();
    pso.bottoms = jp.value("bottoms", 1);
    pso.config = detail::pso_config_from_json(jp);
    if (jp.contains("deadline_h")) pso.deadline_h = jp.at("deadline_h").get<double>();
    pso.penalty_usd_per_h = jp.value("penalty_usd_per_h", 1e6);
    find_machine(sc.machines, pso.machine);
    sc.pso = pso;
  }

  return sc;
}

}  // namespace agrifleet
