#include "sct/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "sct/errors.hpp"

namespace sct::field {

std::string role_name(ElectrodeRole role) {
  switch (role) {
    case ElectrodeRole::Signal: return "signal";
    case ElectrodeRole::Ground: return "ground";
    case ElectrodeRole::Rf: return "rf";
    case ElectrodeRole::Dc: return "dc";
    case ElectrodeRole::Microwave: return "mw";
  }
  return "?";
}

ElectrodeRole role_from_name(const std::string& name) {
  if (name == "signal") return ElectrodeRole::Signal;
  if (name == "ground" || name == "gnd") return ElectrodeRole::Ground;
  if (name == "rf") return ElectrodeRole::Rf;
  if (name == "dc") return ElectrodeRole::Dc;
  if (name == "mw" || name == "microwave") return ElectrodeRole::Microwave;
  fail(ErrorKind::Configuration, "unknown electrode role '" + name + "'");
}

bool Polygon::contains(const Point& p) const {
  // Even-odd crossing test.
  bool inside = false;
  const size_t n = pts.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const double xi = pts[i][0], zi = pts[i][1];
    const double xj = pts[j][0], zj = pts[j][1];
    if ((zi > p[1]) != (zj > p[1])) {
      const double xcross = xi + (p[1] - zi) * (xj - xi) / (zj - zi);
      if (p[0] < xcross) inside = !inside;
    }
  }
  return inside;
}

namespace {

int orient(const Point& a, const Point& b, const Point& c) {
  const double v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  const double scale = std::abs(b[0] - a[0]) + std::abs(b[1] - a[1]) +
                       std::abs(c[0] - a[0]) + std::abs(c[1] - a[1]);
  if (std::abs(v) <= 1e-18 * scale * scale) return 0;
  return v > 0 ? 1 : -1;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a[0], b[0]) - 1e-18 <= p[0] && p[0] <= std::max(a[0], b[0]) + 1e-18 &&
         std::min(a[1], b[1]) - 1e-18 <= p[1] && p[1] <= std::max(a[1], b[1]) + 1e-18;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

bool Polygon::self_intersects() const {
  const size_t n = pts.size();
  if (n < 4) return false;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      // skip adjacent segments (they share an endpoint)
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]))
        return true;
    }
  }
  return false;
}

std::array<double, 4> Polygon::bbox() const {
  double x0 = pts[0][0], x1 = pts[0][0], z0 = pts[0][1], z1 = pts[0][1];
  for (const auto& p : pts) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    z0 = std::min(z0, p[1]);
    z1 = std::max(z1, p[1]);
  }
  return {x0, x1, z0, z1};
}

Polygon Polygon::rect(double x0, double x1, double z0, double z1) {
  return Polygon{{{x0, z0}, {x1, z0}, {x1, z1}, {x0, z1}}};
}

void CrossSectionGeometry::validate() const {
  if (lambda0 <= 0) fail(ErrorKind::InvalidGeometry, "lambda0 must be > 0");
  if (eps_substrate < 1) fail(ErrorKind::InvalidGeometry, "eps_substrate must be >= 1");
  if (domain[1] <= domain[0] || domain[3] <= domain[2])
    fail(ErrorKind::InvalidGeometry, "domain box is empty");
  for (auto v : {film_thickness, signal_width, gap})
    if (v && *v <= 0)
      fail(ErrorKind::InvalidGeometry, "coplanar preset dimensions must be > 0");
  for (size_t k = 0; k < electrodes.size(); ++k) {
    const auto& e = electrodes[k];
    if (e.shape.pts.size() < 3)
      fail(ErrorKind::InvalidGeometry, "electrode '" + e.name + "' has fewer than 3 vertices");
    if (e.shape.self_intersects())
      fail(ErrorKind::InvalidGeometry, "electrode '" + e.name + "' polygon self-intersects");
    const auto bb = e.shape.bbox();
    if (bb[0] < domain[0] || bb[1] > domain[1] || bb[2] < domain[2] || bb[3] > domain[3])
      fail(ErrorKind::InvalidGeometry, "electrode '" + e.name + "' extends outside the domain");
  }
  // pairwise non-overlap
  for (size_t a = 0; a < electrodes.size(); ++a) {
    for (size_t b = a + 1; b < electrodes.size(); ++b) {
      const auto& pa = electrodes[a].shape;
      const auto& pb = electrodes[b].shape;
      bool overlap = false;
      const size_t na = pa.pts.size(), nb = pb.pts.size();
      for (size_t i = 0; i < na && !overlap; ++i)
        for (size_t j = 0; j < nb && !overlap; ++j)
          if (segments_intersect(pa.pts[i], pa.pts[(i + 1) % na], pb.pts[j],
                                 pb.pts[(j + 1) % nb]))
            overlap = true;
      if (!overlap)
        for (const auto& p : pa.pts)
          if (pb.contains(p)) overlap = true;
      if (!overlap)
        for (const auto& p : pb.pts)
          if (pa.contains(p)) overlap = true;
      if (overlap)
        fail(ErrorKind::InvalidGeometry, "electrodes '" + electrodes[a].name + "' and '" +
                                             electrodes[b].name + "' overlap");
    }
  }
}

CrossSectionGeometry cpw_geometry(double w, double s, double t, double current_A,
                                  double lambda0, double eps_substrate) {
  if (w <= 0 || s <= 0 || t <= 0)
    fail(ErrorKind::InvalidGeometry, "cpw preset requires w, s, t > 0");
  const double core = w + 2 * s;
  const double half = std::max(10 * core, 150e-6);
  const double ground_outer = std::min(4 * core, 0.8 * half);

  CrossSectionGeometry g;
  g.lambda0 = lambda0;
  g.eps_substrate = eps_substrate;
  g.film_thickness = t;
  g.signal_width = w;
  g.gap = s;
  g.domain = {-half, half, -half, half};
  g.substrate = Polygon::rect(-half, half, -half, 0.0);

  Electrode sig{Polygon::rect(-w / 2, w / 2, 0.0, t), ElectrodeRole::Signal,
                current_A, std::nullopt, "signal"};
  Electrode gl{Polygon::rect(-ground_outer, -w / 2 - s, 0.0, t), ElectrodeRole::Ground,
               std::nullopt, std::nullopt, "ground_left"};
  Electrode gr{Polygon::rect(w / 2 + s, ground_outer, 0.0, t), ElectrodeRole::Ground,
               std::nullopt, std::nullopt, "ground_right"};
  g.electrodes = {sig, gl, gr};
  return g;
}

CrossSectionGeometry square_wire_geometry(double half_width, double current_A,
                                          double domain_half, double lambda0) {
  CrossSectionGeometry g;
  g.lambda0 = lambda0;
  g.eps_substrate = 1.0;
  g.domain = {-domain_half, domain_half, -domain_half, domain_half};
  g.electrodes = {Electrode{Polygon::rect(-half_width, half_width, -half_width, half_width),
                            ElectrodeRole::Signal, current_A, std::nullopt, "wire"}};
  return g;
}

CrossSectionGeometry slab_geometry(double width, double thickness, double current_A,
                                   double lambda0) {
  CrossSectionGeometry g;
  g.lambda0 = lambda0;
  g.eps_substrate = 1.0;
  const double half = 5 * width;
  g.domain = {-half, half, -half, half};
  g.electrodes = {Electrode{Polygon::rect(-width / 2, width / 2, 0.0, thickness),
                            ElectrodeRole::Signal, current_A, std::nullopt, "slab"}};
  g.film_thickness = thickness;
  g.signal_width = width;
  return g;
}

CrossSectionGeometry trap3d_geometry(const Trap3dLayout& L) {
  CrossSectionGeometry g;
  g.lambda0 = L.lambda0;
  g.eps_substrate = L.eps_substrate;
  g.film_thickness = L.film_thickness;

  const double t = L.film_thickness;
  const double G = L.chip_gap;
  const double ground_outer = 0.75 * L.domain_half_x;

  // Bottom chip rails, left to right: [gnd] [dc] [rf] [mw] [gnd].
  const double rf_l = -L.rf_center_x - L.rf_width / 2;
  const double rf_r = -L.rf_center_x + L.rf_width / 2;
  const double dc_r = rf_l - L.rf_dc_gap;
  const double dc_l = dc_r - L.dc_width;
  const double mw_l = rf_r + L.mw_rf_gap;
  const double mw_r = mw_l + L.mw_width;
  const double gl_r = dc_l - L.ground_gap;
  const double gr_l = mw_r + L.ground_gap;

  auto bottom = [&](double x0, double x1) { return Polygon::rect(x0, x1, -t, 0.0); };
  // Top chip is the 180-degree rotation of the bottom chip about the center.
  auto top = [&](double x0, double x1) { return Polygon::rect(-x1, -x0, G, G + t); };

  g.electrodes = {
      {bottom(gl_r - (ground_outer - std::abs(gl_r)), gl_r), ElectrodeRole::Ground,
       std::nullopt, std::nullopt, "gnd_bottom_left"},
      {bottom(dc_l, dc_r), ElectrodeRole::Dc, std::nullopt, std::nullopt, "dc_bottom"},
      {bottom(rf_l, rf_r), ElectrodeRole::Rf, std::nullopt, std::nullopt, "rf_bottom"},
      {bottom(mw_l, mw_r), ElectrodeRole::Microwave, std::nullopt, std::nullopt, "mw_bottom"},
      {bottom(gr_l, ground_outer), ElectrodeRole::Ground, std::nullopt, std::nullopt,
       "gnd_bottom_right"},
      {top(gl_r - (ground_outer - std::abs(gl_r)), gl_r), ElectrodeRole::Ground,
       std::nullopt, std::nullopt, "gnd_top_right"},
      {top(dc_l, dc_r), ElectrodeRole::Dc, std::nullopt, std::nullopt, "dc_top"},
      {top(rf_l, rf_r), ElectrodeRole::Rf, std::nullopt, std::nullopt, "rf_top"},
      {top(mw_l, mw_r), ElectrodeRole::Microwave, std::nullopt, std::nullopt, "mw_top"},
      {top(gr_l, ground_outer), ElectrodeRole::Ground, std::nullopt, std::nullopt,
       "gnd_top_left"},
  };

  const double sub = L.substrate_thickness;
  const double zpad = 0.5 * L.domain_half_x;
  g.domain = {-L.domain_half_x, L.domain_half_x, -t - sub - zpad, G + t + sub + zpad};
  g.substrate = Polygon::rect(-L.domain_half_x, L.domain_half_x, -t - sub, -t);
  g.extra_dielectrics.push_back(
      Polygon::rect(-L.domain_half_x, L.domain_half_x, G + t, G + t + sub));

  // Resolve the trap region between the chips for mode analysis.
  g.refine_boxes.push_back({-40e-6, 40e-6, G / 2 - 40e-6, G / 2 + 40e-6, 1.0e-6});
  return g;
}

void assign_voltage(CrossSectionGeometry& g, ElectrodeRole role, double volts) {
  for (auto& e : g.electrodes)
    if (e.role == role) e.voltage_V = volts;
}

void assign_current(CrossSectionGeometry& g, ElectrodeRole role, double amps) {
  for (auto& e : g.electrodes)
    if (e.role == role) e.current_A = amps;
}

}  // namespace sct::field
