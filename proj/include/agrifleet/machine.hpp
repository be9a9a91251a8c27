// Machine catalog: power sources (diesel tractor / electric robot tractor),
// battery pack model, and bill-of-materials rollup with discrepancy reporting.
//
// Ledger sums are carried in whole cents so a column of printed dollar values
// adds up without float drift.
#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "agrifleet/d497.hpp"

namespace agrifleet {

enum class Drivetrain { diesel_mechanical, electric_tracked };

inline std::string to_string(Drivetrain d) {
  return d == Drivetrain::diesel_mechanical ? "diesel_mechanical" : "electric_tracked";
}

inline Drivetrain drivetrain_from_string(const std::string& s) {
  if (s == "diesel_mechanical") return Drivetrain::diesel_mechanical;
  if (s == "electric_tracked") return Drivetrain::electric_tracked;
  throw std::runtime_error("unknown drivetrain: " + s);
}

// One swappable battery pack, as fitted to an electric machine.
// autonomy_per_pack_h is the manufacturer-claimed operating time per pack;
// the simulator drains against it in hours.
struct BatteryModel {
  int packs_fitted = 1;
  int cells_per_pack = 0;
  double cell_voltage_v = 0.0;
  double cell_capacity_ah = 0.0;
  double autonomy_per_pack_h = 0.0;
  double swap_duration_h = 0.0;
  double electric_cost_per_hour_usd = 0.0;  // per pack in use

  void validate() const {
    if (packs_fitted < 1 || cells_per_pack < 1)
      throw std::domain_error("battery: pack and cell counts must be >= 1");
    if (!(cell_voltage_v > 0.0) || cell_capacity_ah < 0.0)
      throw std::domain_error("battery: cell voltage must be > 0, capacity >= 0");
    if (!(autonomy_per_pack_h > 0.0) || swap_duration_h < 0.0 || electric_cost_per_hour_usd < 0.0)
      throw std::domain_error("battery: autonomy must be > 0, swap/cost >= 0");
  }
};

// Energy stored in one pack, kWh: cells * V * Ah / 1000.
inline double pack_energy(const BatteryModel& b) {
  return b.cells_per_pack * b.cell_voltage_v * b.cell_capacity_ah / 1000.0;
}

struct MachineSpec {
  std::string name;
  Drivetrain drivetrain = Drivetrain::diesel_mechanical;
  double rated_power_kw = 0.0;
  std::optional<double> max_power_kw;
  double mass_kg = 0.0;
  double transfer_efficiency = 0.0;  // overall tractor/plow power transfer
  double purchase_price_usd = 0.0;
  std::optional<FuelModel> fuel;      // diesel only
  std::optional<BatteryModel> battery;  // electric only

  void validate() const {
    if (!(rated_power_kw > 0.0) || !(mass_kg > 0.0))
      throw std::domain_error("machine '" + name + "': rated power and mass must be > 0");
    if (!(transfer_efficiency > 0.0) || transfer_efficiency > 1.0)
      throw std::domain_error("machine '" + name + "': transfer efficiency must be in (0, 1]");
    if (purchase_price_usd < 0.0)
      throw std::domain_error("machine '" + name + "': price must be >= 0");
    const bool diesel = drivetrain == Drivetrain::diesel_mechanical;
    if (diesel != fuel.has_value() || diesel == battery.has_value())
      throw std::domain_error("machine '" + name +
                              "': exactly one of fuel/battery must be present, matching the drivetrain");
    if (fuel) fuel->validate();
    if (battery) battery->validate();
  }
};

// --- bill of materials -------------------------------------------------------

struct BomLine {
  std::string component;
  int quantity = 1;
  double unit_value_usd = 0.0;
  double line_value_usd = 0.0;  // as printed in the source ledger

  void validate() const {
    if (quantity < 1) throw std::domain_error("BOM line '" + component + "': quantity must be >= 1");
    if (unit_value_usd < 0.0 || line_value_usd < 0.0)
      throw std::domain_error("BOM line '" + component + "': values must be >= 0");
  }
};

// A line whose quantity * unit value disagrees with the printed line value.
struct BomDiscrepancy {
  std::string component;
  double product_usd = 0.0;  // quantity * unit value
  double printed_usd = 0.0;  // line value as printed
};

struct BomReport {
  double computed_total_usd = 0.0;  // sum of printed line values
  double declared_total_usd = 0.0;  // total as printed
  std::vector<BomDiscrepancy> line_discrepancies;
  double total_discrepancy_usd = 0.0;  // computed - declared
};

namespace detail {
inline long long usd_to_cents(double usd) { return std::llround(usd * 100.0); }
inline double cents_to_usd(long long cents) { return static_cast<double>(cents) / 100.0; }
}  // namespace detail

// Sums the printed line values and flags every line where quantity * unit
// value strays from the printed figure by more than a dollar.
inline BomReport bom_rollup(const std::vector<BomLine>& lines, double declared_total_usd) {
  if (lines.empty()) throw std::domain_error("bom_rollup: line list must be nonempty");
  BomReport report;
  long long sum_cents = 0;
  for (const auto& line : lines) {
    line.validate();
    const long long printed = detail::usd_to_cents(line.line_value_usd);
    const long long product = line.quantity * detail::usd_to_cents(line.unit_value_usd);
    sum_cents += printed;
    if (std::abs(product - printed) > 100)  // $1 tolerance
      report.line_discrepancies.push_back(
          {line.component, detail::cents_to_usd(product), detail::cents_to_usd(printed)});
  }
  report.computed_total_usd = detail::cents_to_usd(sum_cents);
  report.declared_total_usd = declared_total_usd;
  report.total_discrepancy_usd =
      detail::cents_to_usd(sum_cents - detail::usd_to_cents(declared_total_usd));
  return report;
}

// --- JSON load ---------------------------------------------------------------

inline MachineSpec machine_from_json(const nlohmann::json& j) {
  MachineSpec m;
  m.name = j.at("name").get<std::string>();
  m.drivetrain = drivetrain_from_string(j.at("drivetrain").get<std::string>());
  m.rated_power_kw = j.at("rated_power_kw").get<double>();
  if (j.contains("max_power_kw")) m.max_power_kw = j.at("max_power_kw").get<double>();
  m.mass_kg = j.at("mass_kg").get<double>();
  m.transfer_efficiency = j.at("transfer_efficiency").get<double>();
  m.purchase_price_usd = j.at("purchase_price_usd").get<double>();
  if (j.contains("fuel")) {
    FuelModel f;
    f.pto_power_ratio_x = j.at("fuel").at("pto_power_ratio_x").get<double>();
    m.fuel = f;
  }
  if (j.contains("battery")) {
    const auto& jb = j.at("battery");
    BatteryModel b;
    b.packs_fitted = jb.at("packs_fitted").get<int>();
    b.cells_per_pack = jb.at("cells_per_pack").get<int>();
    b.cell_voltage_v = jb.at("cell_voltage_v").get<double>();
    b.cell_capacity_ah = jb.at("cell_capacity_ah").get<double>();
    b.autonomy_per_pack_h = jb.at("autonomy_per_pack_h").get<double>();
    b.swap_duration_h = jb.at("swap_duration_h").get<double>();
    b.electric_cost_per_hour_usd = jb.at("electric_cost_per_hour_usd").get<double>();
    m.battery = b;
  }
  m.validate();
  return m;
}

inline std::vector<MachineSpec> load_machine_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open machine catalog: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<MachineSpec> catalog;
  for (const auto& row : j) catalog.push_back(machine_from_json(row));
  return catalog;
}

inline const MachineSpec& find_machine(const std::vector<MachineSpec>& catalog,
                                       const std::string& name) {
  for (const auto& m : catalog)
    if (m.name == name) return m;
  throw std::runtime_error("machine not found in catalog: " + name);
}

// BOM file: {"declared_total_usd": ..., "lines": [{component, quantity,
// unit_value_usd, line_value_usd}, ...]}. Lines with unknown quantity/unit in
// the source are stored as quantity 1 with unit equal to the printed value.
struct BomFile {
  std::vector<BomLine> lines;
  double declared_total_usd = 0.0;
};

inline BomFile load_bom(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open BOM file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  BomFile bom;
  bom.declared_total_usd = j.at("declared_total_usd").get<double>();
  for (const auto& row : j.at("lines")) {
    BomLine line;
    line.component = row.at("component").get<std::string>();
    line.quantity = row.at("quantity").get<int>();
    line.unit_value_usd = row.at("unit_value_usd").get<double>();
    line.line_value_usd = row.at("line_value_usd").get<double>();
    line.validate();
    bom.lines.push_back(line);
  }
  return bom;
}

}  // namespace agrifleet
