#pragma once

#include "sct/fieldmap.hpp"

namespace sct::field {

// 2D magnetoquasistatic solve for out-of-plane currents in London
// superconductors. The out-of-plane vector potential A satisfies
//   laplace(A) = (A - alpha_k) / lambda^2   inside conductor k,
//   laplace(A) = 0                          elsewhere,
// with one constant alpha_k per conductor fixing its total current. Electrodes
// with an assigned current are constrained to it (scaled so the first
// signal/microwave electrode carries total_current); ground electrodes share
// one alpha and collectively carry the negative sum of the assigned currents
// (transmission-line return); all other electrodes float at zero net current.
// The solve runs at unit scale and the samples are multiplied by the requested
// current, so linearity in total_current is exact.
FieldMap solve_magnetoquasistatic(const Mesh& mesh, const CrossSectionGeometry& geom,
                                  double total_current, double frequency);

// Maximum |B| on a quarter-circle arc of radius lambda0 centered on a
// superconductor polygon corner, restricted to non-superconductor cells. The
// arc is centered on the corner's outward bisector; lambda0 is the physical
// smoothing scale of the corner singularity.
double corner_field(const FieldMap& map, const Point& corner, double lambda0);

// Discrete circulation integral(B . dl) / mu0 around an axis-aligned
// rectangle, counterclockwise. Equals the enclosed current.
struct LoopRect {
  double x0, x1, z0, z1;
};
double ampere_loop_integral(const FieldMap& map, const LoopRect& loop);

}  // namespace sct::field
