#pragma once

#include <cstdint>
#include <vector>

#include "sct/geometry.hpp"

namespace sct::field {

enum class Material : uint8_t { Vacuum = 0, Substrate = 1, Superconductor = 2 };

// Graded rectilinear grid. Nodes sit on the tensor product of x and z lines;
// materials are per cell. Immutable after construction.
struct Mesh {
  std::vector<double> x;  // strictly increasing
  std::vector<double> z;
  std::vector<Material> cell_material;  // (nx-1)*(nz-1), index ci + cj*(nx-1)
  std::vector<int32_t> cell_electrode;  // electrode index or -1
  double min_cell = 0;                  // refinement metadata
  double lambda0 = 0;

  size_t nx() const { return x.size(); }
  size_t nz() const { return z.size(); }
  size_t node_count() const { return nx() * nz(); }
  size_t cell_count() const { return (nx() - 1) * (nz() - 1); }
  size_t node_index(size_t i, size_t j) const { return i + j * nx(); }
  size_t cell_index(size_t ci, size_t cj) const { return ci + cj * (nx() - 1); }
  Material material(size_t ci, size_t cj) const { return cell_material[cell_index(ci, cj)]; }

  bool in_domain(const Point& p) const {
    return p[0] >= x.front() && p[0] <= x.back() && p[1] >= z.front() && p[1] <= z.back();
  }
  // Cell containing p; clamped to valid range on the boundary.
  std::pair<size_t, size_t> locate_cell(const Point& p) const;
  Material material_at(const Point& p) const;

  void check_invariants(const CrossSectionGeometry& geom) const;  // throws on violation
};

struct MeshOptions {
  size_t node_budget = 4'000'000;
  // start cell size at stations that are not superconductor corners
  double coarse_station_factor = 64.0;  // times target_min_cell
};

// Graded rectilinear mesh: coordinate "stations" at every polygon vertex and
// refine-box edge, cell sizes growing geometrically away from superconductor
// corners (start size = target_min_cell) with the given growth ratio.
// Deterministic for identical inputs.
Mesh build_mesh(const CrossSectionGeometry& geom, double target_min_cell,
                double growth_ratio, const MeshOptions& opts = {});

}  // namespace sct::field
