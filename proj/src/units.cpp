#include "sct/units.hpp"

#include <map>

#include "sct/constants.hpp"
#include "sct/errors.hpp"

namespace sct::units {

namespace {

struct UnitDef {
  double factor;
  bool angular_when_omega;  // frequency units become rad/s on omega_* keys
};

const std::map<std::string, UnitDef>& unit_table() {
  static const std::map<std::string, UnitDef> table = {
      {"m", {1.0, false}},        {"mm", {1e-3, false}},  {"um", {1e-6, false}},
      {"nm", {1e-9, false}},      {"V", {1.0, false}},    {"mV", {1e-3, false}},
      {"kV", {1e3, false}},       {"A", {1.0, false}},    {"mA", {1e-3, false}},
      {"T", {1.0, false}},        {"mT", {1e-3, false}},  {"uT", {1e-6, false}},
      {"Hz", {1.0, true}},        {"kHz", {1e3, true}},   {"MHz", {1e6, true}},
      {"GHz", {1e9, true}},       {"W", {1.0, false}},    {"mW", {1e-3, false}},
      {"uW", {1e-6, false}},      {"nW", {1e-9, false}},  {"s", {1.0, false}},
      {"ms", {1e-3, false}},      {"us", {1e-6, false}},  {"ns", {1e-9, false}},
      {"J", {1.0, false}},        {"eV", {constants::elementary_charge, false}},
      {"meV", {1e-3 * constants::elementary_charge, false}},
      {"K", {1.0, false}},        {"kg", {1.0, false}},
      {"u", {constants::atomic_mass_unit, false}},
      {"C", {1.0, false}},        {"e", {constants::elementary_charge, false}},
      {"JperT", {1.0, false}},    {"TperM", {1.0, false}},
      {"deg", {1.0, false}},      // angles are carried in degrees throughout
  };
  return table;
}

bool is_omega_key(const std::string& base) {
  return base.rfind("omega", 0) == 0 || base.rfind("Omega", 0) == 0 ||
         base.rfind("delta", 0) == 0;
}

}  // namespace

std::optional<Parsed> convert_suffixed(const std::string& key, double value) {
  auto pos = key.find_last_of('_');
  if (pos == std::string::npos || pos + 1 >= key.size()) return std::nullopt;
  const std::string suffix = key.substr(pos + 1);
  auto it = unit_table().find(suffix);
  if (it == unit_table().end()) return std::nullopt;
  const std::string base = key.substr(0, pos);
  double v = value * it->second.factor;
  if (it->second.angular_when_omega && is_omega_key(base)) v *= constants::two_pi;
  return Parsed{base, v, suffix};
}

double degrees_to_radians(double deg) { return deg * constants::pi / 180.0; }
double radians_to_degrees(double rad) { return rad * 180.0 / constants::pi; }

}  // namespace sct::units
