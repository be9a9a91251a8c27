// Fleet equivalence and feasibility: how many small robots match one large
// tractor, per-pass ground loads, and the battery-energy audit.
#pragma once

#include <cmath>
#include <stdexcept>

#include "agrifleet/machine.hpp"

namespace agrifleet {

// Gravitational acceleration used for ground loads unless overridden. The
// published load figures (19,805 kg -> 198,050 N) are stated at g = 10.
inline constexpr double kDefaultGravity = 10.0;

struct EquivalenceReport {
  int required_fleet = 0;
  double capacity_large_ha_h = 0.0;
  double capacity_small_ha_h = 0.0;
  double weight_ratio = 0.0;
  double ground_load_large_n = 0.0;
  double ground_load_small_n = 0.0;
};

struct EnergyAudit {
  double pack_energy_kwh = 0.0;
  double required_power_kw = 0.0;
  double claimed_autonomy_h = 0.0;
  double required_energy_kwh = 0.0;  // required power * claimed autonomy
  bool feasible = false;             // pack energy >= required energy
  double shortfall_kwh = 0.0;        // 0 when feasible
};

// Smallest fleet whose aggregate capacity covers the large machine's.
// Ceiling with a 1e-9 guard so exact ratios don't round up on float noise.
inline int equivalent_fleet_size(double capacity_large_ha_h, double capacity_small_ha_h) {
  if (!(capacity_large_ha_h > 0.0) || !(capacity_small_ha_h > 0.0))
    throw std::domain_error("equivalent_fleet_size: capacities must be > 0");
  const double ratio = capacity_large_ha_h / capacity_small_ha_h;
  const int fleet = static_cast<int>(std::ceil(ratio - 1e-9));
  return fleet < 1 ? 1 : fleet;
}

// Per-pass normal load on the soil, N.
inline double ground_load(double mass_kg, double g = kDefaultGravity) {
  if (mass_kg < 0.0) throw std::domain_error("ground_load: mass must be >= 0");
  if (!(g > 0.0)) throw std::domain_error("ground_load: g must be > 0");
  return mass_kg * g;
}

// Large-tractor mass over the whole fleet's mass.
inline double weight_ratio(double tractor_mass_kg, double robot_mass_kg, int fleet_size) {
  if (!(tractor_mass_kg > 0.0) || !(robot_mass_kg > 0.0) || fleet_size < 1)
    throw std::domain_error("weight_ratio: masses must be > 0 and fleet >= 1");
  return tractor_mass_kg / (robot_mass_kg * fleet_size);
}

// Full equivalence picture between one large machine and a fleet of small
// ones: fleet size from the capacity ratio, total-weight ratio and per-pass
// ground loads.
inline EquivalenceReport equivalence_report(double capacity_large_ha_h,
                                            double capacity_small_ha_h, double tractor_mass_kg,
                                            double robot_mass_kg, double g = kDefaultGravity) {
  EquivalenceReport report;
  report.capacity_large_ha_h = capacity_large_ha_h;
  report.capacity_small_ha_h = capacity_small_ha_h;
  report.required_fleet = equivalent_fleet_size(capacity_large_ha_h, capacity_small_ha_h);
  report.weight_ratio = weight_ratio(tractor_mass_kg, robot_mass_kg, report.required_fleet);
  report.ground_load_large_n = ground_load(tractor_mass_kg, g);
  report.ground_load_small_n = ground_load(robot_mass_kg, g);
  return report;
}

// Checks one pack's claimed autonomy against the energy the stated power
// demand would actually draw over that time.
inline EnergyAudit energy_audit(const MachineSpec& machine, double required_power_kw) {
  machine.validate();
  if (!machine.battery)
    throw std::invalid_argument("energy_audit: machine '" + machine.name + "' has no battery model");
  if (required_power_kw < 0.0)
    throw std::domain_error("energy_audit: required power must be >= 0");
  EnergyAudit audit;
  audit.pack_energy_kwh = pack_energy(*machine.battery);
  audit.required_power_kw = required_power_kw;
  audit.claimed_autonomy_h = machine.battery->autonomy_per_pack_h;
  audit.required_energy_kwh = required_power_kw * audit.claimed_autonomy_h;
  audit.feasible = audit.pack_energy_kwh >= audit.required_energy_kwh;
  audit.shortfall_kwh = audit.feasible ? 0.0 : audit.required_energy_kwh - audit.pack_energy_kwh;
  return audit;
}

}  // namespace agrifleet
