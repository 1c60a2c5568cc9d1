#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sct::field {

using Point = std::array<double, 2>;  // (x, z) in meters

enum class ElectrodeRole { Signal, Ground, Rf, Dc, Microwave };

std::string role_name(ElectrodeRole role);
ElectrodeRole role_from_name(const std::string& name);

struct Polygon {
  std::vector<Point> pts;  // closed implicitly (last connects to first)

  bool contains(const Point& p) const;  // even-odd rule, boundary counts as inside
  bool self_intersects() const;
  std::array<double, 4> bbox() const;  // x0, x1, z0, z1
  static Polygon rect(double x0, double x1, double z0, double z1);
};

struct Electrode {
  Polygon shape;
  ElectrodeRole role = ElectrodeRole::Ground;
  std::optional<double> current_A;  // assigned current (magnetoquasistatic source)
  std::optional<double> voltage_V;  // assigned voltage (electrostatic source)
  std::string name;
};

// Box in which the mesh must stay at or below max_cell (used to resolve the
// trap region, slab interiors, ... beyond what corner grading gives).
struct RefineBox {
  double x0, x1, z0, z1;
  double max_cell;
};

struct CrossSectionGeometry {
  std::vector<Electrode> electrodes;
  std::optional<Polygon> substrate;
  std::vector<Polygon> extra_dielectrics;  // further regions at eps_substrate
  double eps_substrate = 11.9;
  double lambda0 = 50e-9;  // London penetration depth [m]
  std::array<double, 4> domain{0, 0, 0, 0};  // x0, x1, z0, z1
  std::vector<RefineBox> refine_boxes;

  // Convenience accessors for coplanar presets (unset otherwise).
  std::optional<double> film_thickness;
  std::optional<double> signal_width;
  std::optional<double> gap;

  void validate() const;  // throws Error(InvalidGeometry) on violations
};

// Coplanar waveguide cross-section: signal strip of width w between ground
// planes at gap s, film thickness t on a substrate half-space.
CrossSectionGeometry cpw_geometry(double w, double s, double t, double current_A,
                                  double lambda0 = 50e-9, double eps_substrate = 11.9);

// Isolated square wire of half-width r carrying a current, centered at origin
// in vacuum. Outside r the field matches a round wire of radius ~r.
CrossSectionGeometry square_wire_geometry(double half_width, double current_A,
                                          double domain_half, double lambda0 = 50e-9);

// Wide thin slab (width >> thickness) carrying a transport current; used for
// the 1D London screening checks.
CrossSectionGeometry slab_geometry(double width, double thickness, double current_A,
                                   double lambda0 = 50e-9);

// Parameters of the two-chip 3D trap cross-section (radial plane).
struct Trap3dLayout {
  double chip_gap = 100e-6;       // vertical gap between facing electrode surfaces
  double rf_width = 50e-6;        // RF electrode width
  double rf_center_x = 40e-6;     // |x| of RF electrode centers (diagonal placement)
  double rf_dc_gap = 5e-6;        // gap between RF and neighbouring DC rail
  double dc_width = 50e-6;        // DC rail width
  double mw_rf_gap = 80e-6;       // horizontal distance between RF and MW electrodes
  double mw_width = 30e-6;        // MW electrode width
  double ground_gap = 5e-6;       // gap between outer rails and ground planes
  double film_thickness = 1.2e-6;
  double substrate_thickness = 300e-6;
  double domain_half_x = 800e-6;
  double lambda0 = 50e-9;
  double eps_substrate = 11.9;
};

// Cross-section of the flip-chip 3D trap. Bottom chip carries (left to right)
// DC rail, RF electrode, MW electrode; the top chip is the 180-degree rotation
// about the trap center, so RF/DC/MW pairs sit diagonally opposite.
CrossSectionGeometry trap3d_geometry(const Trap3dLayout& layout = {});

// Role-based voltage/current assignment helpers.
void assign_voltage(CrossSectionGeometry& g, ElectrodeRole role, double volts);
void assign_current(CrossSectionGeometry& g, ElectrodeRole role, double amps);

}  // namespace sct::field
