#include "sct/fieldmap.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "sct/errors.hpp"

namespace sct::field {

std::string field_kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::Magnetic: return "magnetic";
    case FieldKind::Electric: return "electric";
    case FieldKind::Potential: return "potential";
    case FieldKind::Energy: return "energy";
  }
  return "?";
}

std::string field_kind_unit(FieldKind k) {
  switch (k) {
    case FieldKind::Magnetic: return "T";
    case FieldKind::Electric: return "V/m";
    case FieldKind::Potential: return "V";
    case FieldKind::Energy: return "J";
  }
  return "?";
}

void FieldMap::check_consistent() const {
  const size_t n = mesh->node_count();
  if (is_vector()) {
    if (fx.size() != n || fz.size() != n)
      fail(ErrorKind::TypeMismatch, "vector sample count does not match node count");
  } else if (scalar.size() != n) {
    fail(ErrorKind::TypeMismatch, "scalar sample count does not match node count");
  }
  auto finite = [](const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
  for (const auto& v : fx)
    if (!finite(v)) fail(ErrorKind::Convergence, "non-finite field sample");
  for (const auto& v : fz)
    if (!finite(v)) fail(ErrorKind::Convergence, "non-finite field sample");
  for (const auto& v : scalar)
    if (!finite(v)) fail(ErrorKind::Convergence, "non-finite field sample");
}

namespace {

struct InterpWeights {
  size_t n00, n10, n01, n11;
  double w00, w10, w01, w11;
};

InterpWeights weights(const Mesh& m, const Point& p) {
  if (!m.in_domain(p)) fail(ErrorKind::InvalidProbe, "probe point outside mesh");
  auto [ci, cj] = m.locate_cell(p);
  const double tx = (p[0] - m.x[ci]) / (m.x[ci + 1] - m.x[ci]);
  const double tz = (p[1] - m.z[cj]) / (m.z[cj + 1] - m.z[cj]);
  return {m.node_index(ci, cj),     m.node_index(ci + 1, cj),
          m.node_index(ci, cj + 1), m.node_index(ci + 1, cj + 1),
          (1 - tx) * (1 - tz),      tx * (1 - tz),
          (1 - tx) * tz,            tx * tz};
}

Complex interp(const std::vector<Complex>& v, const InterpWeights& w) {
  return v[w.n00] * w.w00 + v[w.n10] * w.w10 + v[w.n01] * w.w01 + v[w.n11] * w.w11;
}

}  // namespace

Complex FieldMap::interp_scalar(const Point& p) const { return interp(scalar, weights(*mesh, p)); }
Complex FieldMap::interp_x(const Point& p) const { return interp(fx, weights(*mesh, p)); }
Complex FieldMap::interp_z(const Point& p) const { return interp(fz, weights(*mesh, p)); }

double FieldMap::magnitude_at(const Point& p) const {
  const auto w = weights(*mesh, p);
  if (is_vector()) {
    const Complex vx = interp(fx, w), vz = interp(fz, w);
    return std::sqrt(std::norm(vx) + std::norm(vz));
  }
  return std::abs(interp(scalar, w));
}

double field_gradient_at(const FieldMap& map, const Point& p, const Point& direction,
                         int component) {
  const Mesh& m = *map.mesh;
  if (!m.in_domain(p)) fail(ErrorKind::InvalidProbe, "probe point outside mesh");
  auto [ci, cj] = m.locate_cell(p);
  if (m.material(ci, cj) == Material::Superconductor)
    fail(ErrorKind::InvalidProbe, "probe point inside superconductor");
  if (ci < 2 || cj < 2 || ci + 2 >= m.nx() - 1 || cj + 2 >= m.nz() - 1)
    fail(ErrorKind::InvalidProbe, "probe point too close to mesh boundary");

  const double norm = std::hypot(direction[0], direction[1]);
  if (norm == 0) fail(ErrorKind::InvalidProbe, "zero direction vector");
  const double h = std::min(m.x[ci + 1] - m.x[ci], m.z[cj + 1] - m.z[cj]);
  const Point pp{p[0] + h * direction[0] / norm, p[1] + h * direction[1] / norm};
  const Point pm{p[0] - h * direction[0] / norm, p[1] - h * direction[1] / norm};
  auto sample = [&](const Point& q) -> double {
    switch (component) {
      case 0: return map.interp_x(q).real();
      case 1: return map.interp_z(q).real();
      default: return map.interp_scalar(q).real();
    }
  };
  return (sample(pp) - sample(pm)) / (2 * h);
}

FieldMap electric_field_map(const FieldMap& potential) {
  if (potential.kind != FieldKind::Potential)
    fail(ErrorKind::TypeMismatch, "electric_field_map expects a potential map");
  const Mesh& m = *potential.mesh;
  FieldMap e;
  e.mesh = potential.mesh;
  e.kind = FieldKind::Electric;
  e.frequency = potential.frequency;
  e.source = potential.source;
  e.residual = potential.residual;
  e.fx.assign(m.node_count(), 0.0);
  e.fz.assign(m.node_count(), 0.0);

  const auto& phi = potential.scalar;
  const size_t nx = m.nx(), nz = m.nz();
  // central difference on a non-uniform grid (exact for quadratics)
  auto deriv = [](Complex fm, Complex f0, Complex fp, double hm, double hp) {
    return (fp * (hm / (hp * (hm + hp))) - fm * (hp / (hm * (hm + hp))) +
            f0 * ((hp - hm) / (hm * hp)));
  };
  for (size_t j = 0; j < nz; ++j) {
    for (size_t i = 0; i < nx; ++i) {
      const size_t n = m.node_index(i, j);
      Complex dphidx, dphidz;
      if (i == 0)
        dphidx = (phi[m.node_index(1, j)] - phi[n]) / (m.x[1] - m.x[0]);
      else if (i == nx - 1)
        dphidx = (phi[n] - phi[m.node_index(nx - 2, j)]) / (m.x[nx - 1] - m.x[nx - 2]);
      else
        dphidx = deriv(phi[m.node_index(i - 1, j)], phi[n], phi[m.node_index(i + 1, j)],
                       m.x[i] - m.x[i - 1], m.x[i + 1] - m.x[i]);
      if (j == 0)
        dphidz = (phi[m.node_index(i, 1)] - phi[n]) / (m.z[1] - m.z[0]);
      else if (j == nz - 1)
        dphidz = (phi[n] - phi[m.node_index(i, nz - 2)]) / (m.z[nz - 1] - m.z[nz - 2]);
      else
        dphidz = deriv(phi[m.node_index(i, j - 1)], phi[n], phi[m.node_index(i, j + 1)],
                       m.z[j] - m.z[j - 1], m.z[j + 1] - m.z[j]);
      e.fx[n] = -dphidx;
      e.fz[n] = -dphidz;
    }
  }
  // zero the field strictly inside electrodes (every adjacent cell superconducting)
  for (size_t j = 0; j < nz; ++j) {
    for (size_t i = 0; i < nx; ++i) {
      bool all_sc = true;
      for (int dj = -1; dj <= 0 && all_sc; ++dj)
        for (int di = -1; di <= 0 && all_sc; ++di) {
          const long ci = long(i) + di, cj = long(j) + dj;
          if (ci < 0 || cj < 0 || ci >= long(nx) - 1 || cj >= long(nz) - 1) continue;
          if (m.material(size_t(ci), size_t(cj)) != Material::Superconductor) all_sc = false;
        }
      if (all_sc) {
        e.fx[m.node_index(i, j)] = 0.0;
        e.fz[m.node_index(i, j)] = 0.0;
      }
    }
  }
  return e;
}

void export_field_csv(const FieldMap& map, const std::string& csv_path,
                      const std::string& sidecar_path) {
  std::FILE* f = std::fopen(csv_path.c_str(), "w");
  if (!f) fail(ErrorKind::Io, "cannot open '" + csv_path + "' for writing");
  const Mesh& m = *map.mesh;
  if (map.is_vector()) {
    std::fprintf(f, "x_m,z_m,re_x,im_x,re_z,im_z\n");
    for (size_t j = 0; j < m.nz(); ++j)
      for (size_t i = 0; i < m.nx(); ++i) {
        const size_t n = m.node_index(i, j);
        std::fprintf(f, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", m.x[i], m.z[j],
                     map.fx[n].real(), map.fx[n].imag(), map.fz[n].real(), map.fz[n].imag());
      }
  } else {
    std::fprintf(f, "x_m,z_m,re,im\n");
    for (size_t j = 0; j < m.nz(); ++j)
      for (size_t i = 0; i < m.nx(); ++i) {
        const size_t n = m.node_index(i, j);
        std::fprintf(f, "%.12g,%.12g,%.12g,%.12g\n", m.x[i], m.z[j], map.scalar[n].real(),
                     map.scalar[n].imag());
      }
  }
  std::fclose(f);

  nlohmann::ordered_json sidecar;
  sidecar["kind"] = field_kind_name(map.kind);
  sidecar["unit"] = field_kind_unit(map.kind);
  sidecar["frequency_Hz"] = map.frequency;
  sidecar["source"] = map.source;
  sidecar["solver_residual"] = map.residual;
  sidecar["nx"] = m.nx();
  sidecar["nz"] = m.nz();
  std::ofstream out(sidecar_path);
  if (!out) fail(ErrorKind::Io, "cannot open '" + sidecar_path + "' for writing");
  out << sidecar.dump(2) << "\n";
}

}  // namespace sct::field
