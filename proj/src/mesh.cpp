#include "sct/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sct/errors.hpp"

namespace sct::field {

std::pair<size_t, size_t> Mesh::locate_cell(const Point& p) const {
  auto find = [](const std::vector<double>& lines, double v) -> size_t {
    auto it = std::upper_bound(lines.begin(), lines.end(), v);
    size_t idx = (it == lines.begin()) ? 0 : size_t(it - lines.begin()) - 1;
    if (idx >= lines.size() - 1) idx = lines.size() - 2;
    return idx;
  };
  return {find(x, p[0]), find(z, p[1])};
}

Material Mesh::material_at(const Point& p) const {
  auto [ci, cj] = locate_cell(p);
  return material(ci, cj);
}

namespace {

struct Station {
  double pos;
  double size;
};

// Collapse stations that coincide (keep the finest requested size).
std::vector<Station> merge_stations(std::vector<Station> s, double tol) {
  std::sort(s.begin(), s.end(), [](const Station& a, const Station& b) { return a.pos < b.pos; });
  std::vector<Station> out;
  for (const auto& st : s) {
    if (!out.empty() && st.pos - out.back().pos < tol) {
      out.back().size = std::min(out.back().size, st.size);
    } else {
      out.push_back(st);
    }
  }
  return out;
}

struct Cap {
  double lo, hi, hmax;
};

// Fill one interval with cell sizes growing geometrically from both ends.
// Sizes are scaled at the end to make the sum exact; the scale is <= 1 + eps
// so requested resolutions are preserved.
void fill_interval(double a, double b, double ha, double hb, double ratio, double cap,
                   std::vector<double>& out_lines) {
  const double gap = b - a;
  double hl = std::min(ha, cap);
  double hr = std::min(hb, cap);
  std::vector<double> left, right;
  double suml = 0, sumr = 0;
  while (suml + sumr < gap * (1.0 - 1e-12)) {
    if (suml + hl <= sumr + hr) {
      left.push_back(hl);
      suml += hl;
      hl = std::min(hl * ratio, cap);
    } else {
      right.push_back(hr);
      sumr += hr;
      hr = std::min(hr * ratio, cap);
    }
  }
  const double scale = gap / (suml + sumr);
  double pos = a;
  for (size_t i = 0; i + 1 < left.size() + right.size(); ++i) {
    const double h = (i < left.size()) ? left[i] : right[left.size() + right.size() - 1 - i];
    pos += h * scale;
    out_lines.push_back(pos);
  }
}

std::vector<double> grade_axis(std::vector<Station> stations, const std::vector<Cap>& caps,
                               double ratio, double global_cap) {
  std::vector<double> lines;
  lines.push_back(stations.front().pos);
  for (size_t k = 0; k + 1 < stations.size(); ++k) {
    const double a = stations[k].pos, b = stations[k + 1].pos;
    const double mid = 0.5 * (a + b);
    double cap = global_cap;
    for (const auto& c : caps)
      if (mid > c.lo && mid < c.hi) cap = std::min(cap, c.hmax);
    fill_interval(a, b, stations[k].size, stations[k + 1].size, ratio, cap, lines);
    lines.push_back(b);
  }
  return lines;
}

}  // namespace

Mesh build_mesh(const CrossSectionGeometry& geom, double target_min_cell,
                double growth_ratio, const MeshOptions& opts) {
  geom.validate();
  if (target_min_cell <= 0 || target_min_cell > geom.lambda0 / 2 * (1 + 1e-12))
    fail(ErrorKind::Configuration, "target_min_cell must be in (0, lambda0/2]");
  if (!(growth_ratio > 1.0) || growth_ratio > 1.5)
    fail(ErrorKind::Configuration, "growth_ratio must satisfy 1 < ratio <= 1.5");

  const double span_x = geom.domain[1] - geom.domain[0];
  const double span_z = geom.domain[3] - geom.domain[2];
  const double coarse = opts.coarse_station_factor * target_min_cell;
  const double edge_size = std::max(coarse, std::min(span_x, span_z) / 16.0);
  const double merge_tol = 1e-9 * std::max(span_x, span_z);

  std::vector<Station> sx{{geom.domain[0], edge_size}, {geom.domain[1], edge_size}};
  std::vector<Station> sz{{geom.domain[2], edge_size}, {geom.domain[3], edge_size}};
  for (const auto& e : geom.electrodes)
    for (const auto& p : e.shape.pts) {
      sx.push_back({p[0], target_min_cell});
      sz.push_back({p[1], target_min_cell});
    }
  auto add_coarse_poly = [&](const Polygon& poly) {
    for (const auto& p : poly.pts) {
      if (p[0] > geom.domain[0] && p[0] < geom.domain[1]) sx.push_back({p[0], coarse});
      if (p[1] > geom.domain[2] && p[1] < geom.domain[3]) sz.push_back({p[1], coarse});
    }
  };
  if (geom.substrate) add_coarse_poly(*geom.substrate);
  for (const auto& poly : geom.extra_dielectrics) add_coarse_poly(poly);

  std::vector<Cap> cx, cz;
  for (const auto& rb : geom.refine_boxes) {
    sx.push_back({rb.x0, rb.max_cell});
    sx.push_back({rb.x1, rb.max_cell});
    sz.push_back({rb.z0, rb.max_cell});
    sz.push_back({rb.z1, rb.max_cell});
    cx.push_back({rb.x0, rb.x1, rb.max_cell});
    cz.push_back({rb.z0, rb.z1, rb.max_cell});
  }

  const double global_cap = std::max(span_x, span_z) / 8.0;
  Mesh m;
  m.x = grade_axis(merge_stations(std::move(sx), merge_tol), cx, growth_ratio, global_cap);
  m.z = grade_axis(merge_stations(std::move(sz), merge_tol), cz, growth_ratio, global_cap);
  m.lambda0 = geom.lambda0;

  if (m.node_count() > opts.node_budget)
    fail(ErrorKind::BudgetExceeded,
         "mesh would need " + std::to_string(m.node_count()) + " nodes (budget " +
             std::to_string(opts.node_budget) + ")");

  // cell materials from cell centers
  const size_t ncx = m.nx() - 1, ncz = m.nz() - 1;
  m.cell_material.assign(ncx * ncz, Material::Vacuum);
  m.cell_electrode.assign(ncx * ncz, -1);
  struct BB {
    std::array<double, 4> b;
    const Polygon* poly;
    int32_t id;
  };
  std::vector<BB> sc_polys, di_polys;
  for (size_t k = 0; k < geom.electrodes.size(); ++k)
    sc_polys.push_back({geom.electrodes[k].shape.bbox(), &geom.electrodes[k].shape, int32_t(k)});
  if (geom.substrate) di_polys.push_back({geom.substrate->bbox(), &*geom.substrate, -1});
  for (const auto& poly : geom.extra_dielectrics)
    di_polys.push_back({poly.bbox(), &poly, -1});

  double min_cell = std::min(m.x[1] - m.x[0], m.z[1] - m.z[0]);
  for (size_t cj = 0; cj < ncz; ++cj) {
    const double zc = 0.5 * (m.z[cj] + m.z[cj + 1]);
    for (size_t ci = 0; ci < ncx; ++ci) {
      const double xc = 0.5 * (m.x[ci] + m.x[ci + 1]);
      min_cell = std::min({min_cell, m.x[ci + 1] - m.x[ci], m.z[cj + 1] - m.z[cj]});
      const Point c{xc, zc};
      bool assigned = false;
      for (const auto& sp : sc_polys) {
        if (xc < sp.b[0] || xc > sp.b[1] || zc < sp.b[2] || zc > sp.b[3]) continue;
        if (sp.poly->contains(c)) {
          m.cell_material[m.cell_index(ci, cj)] = Material::Superconductor;
          m.cell_electrode[m.cell_index(ci, cj)] = sp.id;
          assigned = true;
          break;
        }
      }
      if (assigned) continue;
      for (const auto& dp : di_polys) {
        if (xc < dp.b[0] || xc > dp.b[1] || zc < dp.b[2] || zc > dp.b[3]) continue;
        if (dp.poly->contains(c)) {
          m.cell_material[m.cell_index(ci, cj)] = Material::Substrate;
          break;
        }
      }
    }
  }
  m.min_cell = min_cell;
  return m;
}

void Mesh::check_invariants(const CrossSectionGeometry& geom) const {
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i + 1] <= x[i]) fail(ErrorKind::InvalidGeometry, "x lines not strictly increasing");
  for (size_t j = 0; j + 1 < z.size(); ++j)
    if (z[j + 1] <= z[j]) fail(ErrorKind::InvalidGeometry, "z lines not strictly increasing");

  const double limit = lambda0 / 2 * (1 + 1e-6);
  // size of the largest interval touching coordinate v
  auto local_size = [](const std::vector<double>& lines, double v) {
    auto it = std::lower_bound(lines.begin(), lines.end(), v);
    size_t i = size_t(it - lines.begin());
    if (i >= lines.size()) i = lines.size() - 1;
    double s = 0;
    if (i + 1 < lines.size()) s = std::max(s, lines[i + 1] - lines[i]);
    if (i > 0) s = std::max(s, lines[i] - lines[i - 1]);
    return s;
  };
  for (const auto& e : geom.electrodes) {
    for (const auto& p : e.shape.pts) {
      if (local_size(x, p[0]) > limit || local_size(z, p[1]) > limit)
        fail(ErrorKind::InvalidGeometry,
             "cell size near a superconductor corner exceeds lambda0/2");
    }
    const auto bb = e.shape.bbox();
    auto lines_inside = [](const std::vector<double>& lines, double a, double b) {
      size_t n = 0;
      for (double v : lines)
        if (v > a + 1e-15 && v < b - 1e-15) ++n;
      return n;
    };
    const bool thin_in_z = (bb[3] - bb[2]) <= (bb[1] - bb[0]);
    const size_t across =
        thin_in_z ? lines_inside(z, bb[2], bb[3]) : lines_inside(x, bb[0], bb[1]);
    if (across < 1)
      fail(ErrorKind::InvalidGeometry,
           "electrode '" + e.name + "' is not resolved by >= 2 cells across its thickness");
  }
}

}  // namespace sct::field
