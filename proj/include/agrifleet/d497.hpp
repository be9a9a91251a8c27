// Machinery-management equations (ASAE/ASABE D497 family): implement draft,
// nominal engine power, field capacity and diesel specific fuel consumption.
//
// Unit conventions are fixed across the toolkit and baked into field names:
// speeds in km/h, widths in m, depths in cm, forces in N, powers in kW,
// capacities in ha/h, consumption in L/kWh. The power equation converts
// km/h -> m/s internally.
#pragma once

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace agrifleet {

// Draft-equation coefficients and geometry of one tillage implement.
// a is in N per (m * cm); b multiplies speed in km/h; c multiplies its square.
struct ImplementSpec {
  std::string name;
  double coeff_a = 0.0;
  double coeff_b = 0.0;
  double coeff_c = 0.0;
  double soil_factor_fi = 1.0;
  double width_m = 0.0;
  double depth_cm = 0.0;
  double typical_speed_kmh = 0.0;

  void validate() const {
    if (coeff_a < 0.0 || coeff_c < 0.0)
      throw std::domain_error("implement '" + name + "': coefficients a, c must be >= 0");
    if (!(soil_factor_fi > 0.0))
      throw std::domain_error("implement '" + name + "': soil factor fi must be > 0");
    if (width_m < 0.0 || depth_cm < 0.0 || typical_speed_kmh < 0.0)
      throw std::domain_error("implement '" + name + "': geometry and speed must be >= 0");
  }

  // Same bottom replicated n times across the gang: cutting width scales, the
  // per-bottom coefficients do not.
  ImplementSpec with_bottoms(int bottoms) const {
    if (bottoms < 1) throw std::domain_error("bottom count must be >= 1");
    ImplementSpec out = *this;
    out.width_m = width_m * bottoms;
    return out;
  }
};

// A (speed, draft) pair on an implement's load curve.
struct OperationPoint {
  double speed_kmh = 0.0;
  double draft_n = 0.0;
};

// Diesel engine loading: ratio of PTO-equivalent power drawn to rated PTO power.
struct FuelModel {
  double pto_power_ratio_x = 1.0;

  void validate() const {
    if (!(pto_power_ratio_x > 0.0) || pto_power_ratio_x > 1.0)
      throw std::domain_error("PTO power ratio x must be in (0, 1]");
  }
};

// Implement draft in N: fi * [a + b*S + c*S^2] * W * T with S in km/h,
// W in m, T in cm.
inline double draft_force(const ImplementSpec& impl, double speed_kmh) {
  impl.validate();
  if (speed_kmh < 0.0) throw std::domain_error("draft_force: speed must be >= 0");
  const double poly = impl.coeff_a + impl.coeff_b * speed_kmh + impl.coeff_c * speed_kmh * speed_kmh;
  return impl.soil_factor_fi * poly * impl.width_m * impl.depth_cm;
}

inline OperationPoint operating_point(const ImplementSpec& impl, double speed_kmh) {
  return {speed_kmh, draft_force(impl, speed_kmh)};
}

// Nominal engine power in kW needed to pull `draft_n` at `speed_kmh` through a
// drivetrain with overall tractor/implement transfer efficiency `efficiency`.
inline double nominal_power(double draft_n, double speed_kmh, double efficiency) {
  if (draft_n < 0.0 || speed_kmh < 0.0)
    throw std::domain_error("nominal_power: draft and speed must be >= 0");
  if (!(efficiency > 0.0) || efficiency > 1.0)
    throw std::domain_error("nominal_power: efficiency must be in (0, 1]");
  const double speed_ms = speed_kmh / 3.6;
  // division by efficiency kept last so p(d,s,eta) == p(d,s,1)/eta bit-exactly
  return draft_n * speed_ms / 1000.0 / efficiency;
}

// Effective field capacity in ha/h: S * W * ef / 10.
inline double field_capacity(double speed_kmh, double width_m, double op_efficiency) {
  if (speed_kmh < 0.0 || width_m < 0.0)
    throw std::domain_error("field_capacity: speed and width must be >= 0");
  if (op_efficiency < 0.0 || op_efficiency > 1.0)
    throw std::domain_error("field_capacity: operational efficiency must be in [0, 1]");
  return speed_kmh * width_m * op_efficiency / 10.0;
}

// Diesel specific fuel consumption in L/kWh at partial load x in (0, 1]:
// 2.64x + 3.91 - 0.203 * sqrt(738x + 173). Convex, minimum near x = 0.8565.
inline double specific_fuel_consumption(double x) {
  if (!(x > 0.0) || x > 1.0)
    throw std::domain_error("specific_fuel_consumption: x must be in (0, 1]");
  return 2.64 * x + 3.91 - 0.203 * std::sqrt(738.0 * x + 173.0);
}

// Fuel burned per hour at rated engine power, in L/h. The consumption figure
// is applied at the table's printed two-decimal precision, which is how the
// standard's worked numbers chain (272 kW * 0.42 L/kWh = 114.24 L/h).
inline double hourly_fuel_use(double rated_power_kw, double x) {
  if (rated_power_kw < 0.0) throw std::domain_error("hourly_fuel_use: power must be >= 0");
  const double cf = std::round(specific_fuel_consumption(x) * 100.0) / 100.0;
  return rated_power_kw * cf;
}

// --- implement coefficient table (JSON) -------------------------------------
//
// File format: array of objects with keys
//   name, a, b, c, fi, width_m, depth_cm, speed_kmh

inline ImplementSpec implement_from_json(const nlohmann::json& j) {
  ImplementSpec impl;
  impl.name = j.at("name").get<std::string>();
  impl.coeff_a = j.at("a").get<double>();
  impl.coeff_b = j.at("b").get<double>();
  impl.coeff_c = j.at("c").get<double>();
  impl.soil_factor_fi = j.at("fi").get<double>();
  impl.width_m = j.at("width_m").get<double>();
  impl.depth_cm = j.at("depth_cm").get<double>();
  impl.typical_speed_kmh = j.at("speed_kmh").get<double>();
  impl.validate();
  return impl;
}

inline std::vector<ImplementSpec> load_implement_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open implement table: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<ImplementSpec> table;
  for (const auto& row : j) table.push_back(implement_from_json(row));
  return table;
}

inline const ImplementSpec& find_implement(const std::vector<ImplementSpec>& table,
                                           const std::string& name) {
  for (const auto& impl : table)
    if (impl.name == name) return impl;
  throw std::runtime_error("implement not found in table: " + name);
}

}  // namespace agrifleet
