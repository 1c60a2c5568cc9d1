#pragma once

#include <optional>
#include <string>

namespace sct::units {

// Config keys carry explicit unit suffixes (w_um, Omega_rf_MHz, V_rf_V, ...).
// Values convert to SI at the parse boundary. Keys starting with "omega"/"Omega"
// are angular frequencies: a frequency suffix on them converts to rad/s.

struct Parsed {
  std::string base;   // key with the suffix stripped
  double si_value;    // value in SI units
  std::string unit;   // the suffix that was applied ("" if none)
};

// Returns nullopt when the key has no recognizable unit suffix; throws
// Error(Unit) when the suffix looks like a unit but is not supported.
std::optional<Parsed> convert_suffixed(const std::string& key, double value);

double degrees_to_radians(double deg);
double radians_to_degrees(double rad);

}  // namespace sct::units
