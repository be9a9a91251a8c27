// Hourly operating-cost models: diesel fuel + operator for crewed tractors,
// flat per-pack electricity for the robot fleet, and acquisition deltas.
#pragma once

#include <stdexcept>

#include "agrifleet/machine.hpp"

namespace agrifleet {

// Monthly operator cost components, hourly-ized by hours_divisor.
struct OperatorCostModel {
  double monthly_salary_usd = 0.0;
  double charges_rate = 0.0;  // fraction of salary
  double insurance_monthly_usd = 0.0;
  double training_monthly_usd = 0.0;
  double hours_divisor = 40.0;

  void validate() const {
    if (monthly_salary_usd < 0.0 || charges_rate < 0.0 || insurance_monthly_usd < 0.0 ||
        training_monthly_usd < 0.0)
      throw std::domain_error("operator model: components must be >= 0");
    if (!(hours_divisor > 0.0)) throw std::domain_error("operator model: hours divisor must be > 0");
  }
};

struct PriceBook {
  double diesel_usd_per_l = 0.0;
  double exchange_rate_brl_per_usd = 0.0;

  void validate() const {
    if (!(diesel_usd_per_l >= 0.0) || !(exchange_rate_brl_per_usd > 0.0))
      throw std::domain_error("price book: diesel price must be >= 0, exchange rate > 0");
  }
};

// total is always the sum of the parts; there is no other way to build one.
struct CostBreakdown {
  double fuel_or_energy_usd_h;
  double operator_usd_h;
  double total_usd_h;

  CostBreakdown(double fuel_or_energy, double operator_cost)
      : fuel_or_energy_usd_h(fuel_or_energy),
        operator_usd_h(operator_cost),
        total_usd_h(fuel_or_energy + operator_cost) {}
};

// (salary * (1 + charges) + insurance + training) / hours.
inline double operator_hourly_cost(const OperatorCostModel& m) {
  m.validate();
  return (m.monthly_salary_usd * (1.0 + m.charges_rate) + m.insurance_monthly_usd +
          m.training_monthly_usd) /
         m.hours_divisor;
}

inline double diesel_hourly_cost(const MachineSpec& machine, const PriceBook& prices) {
  machine.validate();
  prices.validate();
  if (!machine.fuel)
    throw std::invalid_argument("diesel_hourly_cost: machine '" + machine.name +
                                "' has no fuel model");
  return hourly_fuel_use(machine.rated_power_kw, machine.fuel->pto_power_ratio_x) *
         prices.diesel_usd_per_l;
}

// Flat grid-charging cost per operating hour, per pack in use.
inline double electric_hourly_cost(const MachineSpec& machine, int packs_in_use) {
  machine.validate();
  if (!machine.battery)
    throw std::invalid_argument("electric_hourly_cost: machine '" + machine.name +
                                "' has no battery model");
  if (packs_in_use < 1) throw std::domain_error("electric_hourly_cost: packs in use must be >= 1");
  return machine.battery->electric_cost_per_hour_usd * packs_in_use;
}

// Per-machine hourly cost scaled to the fleet. The operator model, when
// present, is applied to every machine in the fleet.
inline CostBreakdown fleet_hourly_cost(const MachineSpec& machine, int fleet_size,
                                       int packs_in_use, const OperatorCostModel* operator_model,
                                       const PriceBook* prices) {
  if (fleet_size < 1) throw std::domain_error("fleet_hourly_cost: fleet size must be >= 1");
  double per_machine = 0.0;
  if (machine.drivetrain == Drivetrain::diesel_mechanical) {
    if (!prices) throw std::invalid_argument("fleet_hourly_cost: diesel machine needs a price book");
    per_machine = diesel_hourly_cost(machine, *prices);
  } else {
    per_machine = electric_hourly_cost(machine, packs_in_use);
  }
  const double operator_per_machine = operator_model ? operator_hourly_cost(*operator_model) : 0.0;
  return CostBreakdown(per_machine * fleet_size, operator_per_machine * fleet_size);
}

// Purchase price of the tractor minus the fleet's, both in whole cents.
inline double acquisition_delta(double tractor_price_usd, double robot_unit_price_usd,
                                int fleet_size) {
  if (tractor_price_usd < 0.0 || robot_unit_price_usd < 0.0 || fleet_size < 0)
    throw std::domain_error("acquisition_delta: inputs must be >= 0");
  const long long delta = detail::usd_to_cents(tractor_price_usd) -
                          fleet_size * detail::usd_to_cents(robot_unit_price_usd);
  return detail::cents_to_usd(delta);
}

}  // namespace agrifleet
