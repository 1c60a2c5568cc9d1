#include "sct/magnetics.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>

#include "sct/constants.hpp"
#include "sct/errors.hpp"

namespace sct::field {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// non-uniform central difference, exact for quadratics
double deriv3(double fm, double f0, double fp, double hm, double hp) {
  return fp * (hm / (hp * (hm + hp))) - fm * (hp / (hm * (hm + hp))) +
         f0 * ((hp - hm) / (hm * hp));
}

}  // namespace

FieldMap solve_magnetoquasistatic(const Mesh& mesh, const CrossSectionGeometry& geom,
                                  double total_current, double frequency) {
  const size_t nx = mesh.nx(), nz = mesh.nz();
  const double lambda2 = geom.lambda0 * geom.lambda0;

  // conductor bookkeeping: every electrode gets an alpha; grounds share one
  int reference = -1;
  double ground_return = 0;
  std::vector<double> pattern(geom.electrodes.size(), 0.0);
  for (size_t k = 0; k < geom.electrodes.size(); ++k) {
    const auto& e = geom.electrodes[k];
    if (e.current_A) {
      pattern[k] = *e.current_A;
      ground_return -= *e.current_A;
      if (reference < 0 &&
          (e.role == ElectrodeRole::Signal || e.role == ElectrodeRole::Microwave))
        reference = int(k);
    }
  }
  if (reference < 0)
    fail(ErrorKind::Configuration,
         "no signal/microwave electrode with an assigned current");
  const double ref_current = pattern[size_t(reference)];
  if (ref_current == 0)
    fail(ErrorKind::Configuration, "reference signal electrode has zero assigned current");

  // unknown numbering: interior nodes, then alphas
  std::vector<long> node_unknown(mesh.node_count(), -1);
  long n_unknowns = 0;
  for (size_t j = 1; j + 1 < nz; ++j)
    for (size_t i = 1; i + 1 < nx; ++i) node_unknown[mesh.node_index(i, j)] = n_unknowns++;
  const long n_nodes = n_unknowns;

  std::vector<long> alpha_index(geom.electrodes.size(), -1);
  long ground_alpha = -1;
  for (size_t k = 0; k < geom.electrodes.size(); ++k) {
    if (geom.electrodes[k].role == ElectrodeRole::Ground) {
      if (ground_alpha < 0) ground_alpha = n_unknowns++;
      alpha_index[k] = ground_alpha;
    } else {
      alpha_index[k] = n_unknowns++;
    }
  }

  std::vector<Triplet> trip;
  trip.reserve(size_t(n_nodes) * 6);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_unknowns);

  auto dx = [&](size_t i) { return mesh.x[i + 1] - mesh.x[i]; };
  auto dz = [&](size_t j) { return mesh.z[j + 1] - mesh.z[j]; };

  for (size_t j = 1; j + 1 < nz; ++j) {
    for (size_t i = 1; i + 1 < nx; ++i) {
      const long row = node_unknown[mesh.node_index(i, j)];
      double diag = 0;
      const double lw = 0.5 * (dz(j - 1) + dz(j));  // dual edge length for x-faces
      const double lh = 0.5 * (dx(i - 1) + dx(i));  // dual edge length for z-faces
      struct Nb {
        size_t ni, nj;
        double g;
      };
      const Nb nbs[4] = {{i - 1, j, lw / dx(i - 1)},
                         {i + 1, j, lw / dx(i)},
                         {i, j - 1, lh / dz(j - 1)},
                         {i, j + 1, lh / dz(j)}};
      for (const auto& nb : nbs) {
        diag += nb.g;
        const long col = node_unknown[mesh.node_index(nb.ni, nb.nj)];
        if (col >= 0) trip.emplace_back(row, col, -nb.g);
        // boundary neighbors have A = 0 (far Dirichlet); nothing to add
      }
      // London term from the four adjacent cells
      for (int cj = int(j) - 1; cj <= int(j); ++cj) {
        for (int ci = int(i) - 1; ci <= int(i); ++ci) {
          const size_t c = mesh.cell_index(size_t(ci), size_t(cj));
          if (mesh.cell_material[c] != Material::Superconductor) continue;
          const double area = dx(size_t(ci)) * dz(size_t(cj));
          const double w = 0.25 * area / lambda2;
          diag += w;
          const long ac = alpha_index[size_t(mesh.cell_electrode[c])];
          trip.emplace_back(row, ac, -w);
          trip.emplace_back(ac, row, -w);
        }
      }
      trip.emplace_back(row, row, diag);
    }
  }

  // constraint rows: D_k alpha_k - sum_n C_nk A_n = mu0 * I_k (unit-scale pattern)
  std::vector<double> alpha_diag(size_t(n_unknowns - n_nodes), 0.0);
  for (size_t cj = 0; cj + 1 < nz; ++cj) {
    for (size_t ci = 0; ci + 1 < nx; ++ci) {
      const size_t c = mesh.cell_index(ci, cj);
      if (mesh.cell_material[c] != Material::Superconductor) continue;
      const double area = dx(ci) * dz(cj);
      alpha_diag[size_t(alpha_index[size_t(mesh.cell_electrode[c])] - n_nodes)] +=
          area / lambda2;
    }
  }
  for (size_t k = 0; k < alpha_diag.size(); ++k)
    trip.emplace_back(n_nodes + long(k), n_nodes + long(k), alpha_diag[k]);

  for (size_t k = 0; k < geom.electrodes.size(); ++k) {
    const double unit_current =
        (geom.electrodes[k].role == ElectrodeRole::Ground)
            ? ground_return / ref_current  // filled below; grounds accumulate
            : pattern[k] / ref_current;
    if (geom.electrodes[k].role == ElectrodeRole::Ground) continue;
    rhs[alpha_index[k]] = constants::mu0 * unit_current;
  }
  if (ground_alpha >= 0) rhs[ground_alpha] = constants::mu0 * ground_return / ref_current;

  SpMat A(n_unknowns, n_unknowns);
  A.setFromTriplets(trip.begin(), trip.end());
  A.makeCompressed();

  Eigen::SimplicialLDLT<SpMat> solver;
  solver.compute(A);
  if (solver.info() != Eigen::Success)
    fail(ErrorKind::Convergence, "magnetoquasistatic factorization failed");
  Eigen::VectorXd sol = solver.solve(rhs);
  if (solver.info() != Eigen::Success)
    fail(ErrorKind::Convergence, "magnetoquasistatic solve failed");
  const double resid = (A * sol - rhs).norm() / std::max(rhs.norm(), 1e-300);
  if (resid > 1e-8)
    fail(ErrorKind::Convergence,
         "magnetoquasistatic solve did not converge, residual = " + std::to_string(resid));

  // vector potential on all nodes (zero on the far boundary)
  std::vector<double> pot(mesh.node_count(), 0.0);
  for (size_t n = 0; n < mesh.node_count(); ++n)
    if (node_unknown[n] >= 0) pot[n] = sol[node_unknown[n]];

  FieldMap map;
  map.mesh = std::make_shared<Mesh>(mesh);
  map.kind = FieldKind::Magnetic;
  map.frequency = frequency;
  map.residual = resid;
  map.source = "magnetoquasistatic unit solve scaled by I = " +
               std::to_string(total_current) + " A";
  map.fx.assign(mesh.node_count(), 0.0);
  map.fz.assign(mesh.node_count(), 0.0);

  const double scale = total_current;
  for (size_t j = 0; j < nz; ++j) {
    for (size_t i = 0; i < nx; ++i) {
      const size_t n = mesh.node_index(i, j);
      double dAdx, dAdz;
      if (i == 0)
        dAdx = (pot[mesh.node_index(1, j)] - pot[n]) / dx(0);
      else if (i == nx - 1)
        dAdx = (pot[n] - pot[mesh.node_index(nx - 2, j)]) / dx(nx - 2);
      else
        dAdx = deriv3(pot[mesh.node_index(i - 1, j)], pot[n], pot[mesh.node_index(i + 1, j)],
                      dx(i - 1), dx(i));
      if (j == 0)
        dAdz = (pot[mesh.node_index(i, 1)] - pot[n]) / dz(0);
      else if (j == nz - 1)
        dAdz = (pot[n] - pot[mesh.node_index(i, nz - 2)]) / dz(nz - 2);
      else
        dAdz = deriv3(pot[mesh.node_index(i, j - 1)], pot[n], pot[mesh.node_index(i, j + 1)],
                      dz(j - 1), dz(j));
      // B = curl(A y-hat): Bx = dA/dz, Bz = -dA/dx
      map.fx[n] = Complex(dAdz * scale, 0.0);
      map.fz[n] = Complex(-dAdx * scale, 0.0);
    }
  }
  return map;
}

double corner_field(const FieldMap& map, const Point& corner, double lambda0) {
  if (map.kind != FieldKind::Magnetic)
    fail(ErrorKind::TypeMismatch, "corner_field expects a magnetic map");
  const Mesh& mesh = *map.mesh;

  // locate the polygon vertex and its neighbours
  const double tol = 1e-10;
  Point prev{}, next{};
  bool found = false;
  // reconstruct corner adjacency from mesh cell electrodes is not possible;
  // the geometry polygons are found through the map's mesh electrodes, so the
  // caller passes exact polygon vertices. Search all superconducting cells'
  // polygons is unavailable here; instead detect via local material layout.
  (void)prev;
  (void)next;
  (void)found;

  // Outward direction: probe the four diagonal quadrants at radius lambda0/4
  // and use the material map; the corner of a film has exactly three
  // non-superconducting quadrants for a convex corner (or one for a notch).
  std::array<Point, 4> diag{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};
  const double probe_r = lambda0 / 4 / std::sqrt(2.0);
  bool sc_quadrant[4];
  int n_sc = 0;
  bool corner_on_sc = false;
  for (int q = 0; q < 4; ++q) {
    const Point p{corner[0] + diag[q][0] * probe_r, corner[1] + diag[q][1] * probe_r};
    sc_quadrant[q] = mesh.in_domain(p) && mesh.material_at(p) == Material::Superconductor;
    if (sc_quadrant[q]) {
      ++n_sc;
      corner_on_sc = true;
    }
  }
  if (!corner_on_sc || n_sc == 4)
    fail(ErrorKind::InvalidCorner, "point is not a superconductor polygon corner");

  // center of the quarter arc: bisector of the vacant quadrant diagonally
  // opposite a lone superconducting quadrant (convex corner), or of the lone
  // vacant quadrant (notch)
  double theta_c = 0;
  if (n_sc == 1) {
    for (int q = 0; q < 4; ++q)
      if (sc_quadrant[q]) theta_c = std::atan2(-diag[q][1], -diag[q][0]);
  } else if (n_sc == 3) {
    for (int q = 0; q < 4; ++q)
      if (!sc_quadrant[q]) theta_c = std::atan2(diag[q][1], diag[q][0]);
  } else {
    // straight edge through the corner: bisect the vacant half
    double vx = 0, vz = 0;
    for (int q = 0; q < 4; ++q)
      if (!sc_quadrant[q]) {
        vx += diag[q][0];
        vz += diag[q][1];
      }
    if (vx == 0 && vz == 0)
      fail(ErrorKind::InvalidCorner, "degenerate corner configuration");
    theta_c = std::atan2(vz, vx);
  }

  const int n_samples = 181;
  double best = -1;
  for (int k = 0; k < n_samples; ++k) {
    const double theta =
        theta_c - constants::pi / 4 + constants::pi / 2 * double(k) / double(n_samples - 1);
    const Point p{corner[0] + lambda0 * std::cos(theta), corner[1] + lambda0 * std::sin(theta)};
    if (!mesh.in_domain(p)) continue;
    if (mesh.material_at(p) == Material::Superconductor) continue;
    best = std::max(best, map.magnitude_at(p));
  }
  if (best < 0)
    fail(ErrorKind::InvalidCorner, "no non-superconducting samples on the corner arc");
  (void)tol;
  return best;
}

double ampere_loop_integral(const FieldMap& map, const LoopRect& loop) {
  if (map.kind != FieldKind::Magnetic)
    fail(ErrorKind::TypeMismatch, "ampere_loop_integral expects a magnetic map");
  const Mesh& mesh = *map.mesh;
  if (!mesh.in_domain({loop.x0, loop.z0}) || !mesh.in_domain({loop.x1, loop.z1}))
    fail(ErrorKind::InvalidLoop, "loop extends outside mesh");
  if (loop.x1 <= loop.x0 || loop.z1 <= loop.z0)
    fail(ErrorKind::InvalidLoop, "loop rectangle is empty");

  // split [a, b] at mesh line crossings
  auto segments = [](const std::vector<double>& lines, double a, double b) {
    std::vector<double> pts{a};
    for (double v : lines)
      if (v > a && v < b) pts.push_back(v);
    pts.push_back(b);
    return pts;
  };

  // integral of one field component along an axis-aligned edge (Simpson per
  // mesh-cell segment); horizontal: component x along x at fixed z, etc.
  auto edge_integral = [&](bool horizontal, double fixed, double a, double b) {
    const auto pts = segments(horizontal ? mesh.x : mesh.z, a, b);
    double sum = 0;
    for (size_t s = 0; s + 1 < pts.size(); ++s) {
      const double u0 = pts[s], u1 = pts[s + 1], um = 0.5 * (u0 + u1);
      auto value = [&](double u) {
        const Point p = horizontal ? Point{u, fixed} : Point{fixed, u};
        if (mesh.material_at(p) == Material::Superconductor)
          fail(ErrorKind::InvalidLoop, "loop intersects a superconductor");
        return horizontal ? map.interp_x(p).real() : map.interp_z(p).real();
      };
      sum += (u1 - u0) / 6.0 * (value(u0) + 4 * value(um) + value(u1));
    }
    return sum;
  };

  // counterclockwise: +x along bottom, +z along right, -x along top, -z along left
  const double circ = edge_integral(true, loop.z0, loop.x0, loop.x1) +
                      edge_integral(false, loop.x1, loop.z0, loop.z1) -
                      edge_integral(true, loop.z1, loop.x0, loop.x1) -
                      edge_integral(false, loop.x0, loop.z0, loop.z1);
  return circ / constants::mu0;
}

}  // namespace sct::field
