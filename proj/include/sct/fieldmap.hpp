#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "sct/mesh.hpp"

namespace sct::field {

using Complex = std::complex<double>;

enum class FieldKind {
  Magnetic,   // vector, tesla
  Electric,   // vector, V/m
  Potential,  // scalar, volts
  Energy,     // scalar, joules
};

std::string field_kind_name(FieldKind k);
std::string field_kind_unit(FieldKind k);

// Samples of a (complex) vector or scalar field on the nodes of a Mesh.
// Immutable after construction; safe to share across threads.
struct FieldMap {
  std::shared_ptr<const Mesh> mesh;
  FieldKind kind = FieldKind::Potential;
  std::vector<Complex> fx, fz;     // vector kinds
  std::vector<Complex> scalar;     // scalar kinds
  double frequency = 0;            // Hz
  std::string source;              // source descriptor (currents / voltage set)
  double residual = 0;             // relative solver residual

  bool is_vector() const { return kind == FieldKind::Magnetic || kind == FieldKind::Electric; }
  void check_consistent() const;  // sample count matches node count, values finite

  // Bilinear interpolation. Throws Error(InvalidProbe) outside the mesh.
  Complex interp_scalar(const Point& p) const;
  Complex interp_x(const Point& p) const;
  Complex interp_z(const Point& p) const;
  double magnitude_at(const Point& p) const;  // |field| (vector norm or |scalar|)
};

// Directional derivative of one field component by central differences with
// step = local cell size. component: 0 -> x, 1 -> z, -1 -> scalar.
double field_gradient_at(const FieldMap& map, const Point& p, const Point& direction,
                         int component);

// Node-wise E = -grad(potential); electrode interiors are zeroed.
FieldMap electric_field_map(const FieldMap& potential);

// CSV grid + JSON sidecar export (see README for the column layout).
void export_field_csv(const FieldMap& map, const std::string& csv_path,
                      const std::string& sidecar_path);

}  // namespace sct::field
