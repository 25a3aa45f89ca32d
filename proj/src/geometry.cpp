#include "greencell/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace greencell {

namespace {

struct Axial {
  int q, r;
};

int hex_ring(const Axial& a) {
  return (std::abs(a.q) + std::abs(a.r) + std::abs(a.q + a.r)) / 2;
}

}  // namespace

Layout Layout::hex_grid(double cell_radius_m, int tiers) {
  if (cell_radius_m <= 0.0)
    throw std::invalid_argument("cell radius must be positive");
  if (tiers < 1 || tiers > 2)
    throw std::invalid_argument("tiers must be 1 or 2");

  const double r = cell_radius_m;
  // Lattice basis for flat-top hexagons: neighbors sit at sqrt(3)*R in the
  // directions 30 + 60k degrees.
  const double ax = 1.5 * r, ay = std::sqrt(3.0) / 2.0 * r;
  const double bx = 0.0, by = std::sqrt(3.0) * r;

  struct Raw {
    double x, y;
    int ring;
    double angle;
  };
  std::vector<Raw> raw;
  for (int q = -tiers; q <= tiers; ++q) {
    for (int rr = -tiers; rr <= tiers; ++rr) {
      Axial a{q, rr};
      int ring = hex_ring(a);
      if (ring > tiers) continue;
      double x = q * ax + rr * bx;
      double y = q * ay + rr * by;
      double ang = std::atan2(y, x);
      if (ang < 0.0) ang += 2.0 * std::numbers::pi;
      raw.push_back({x, y, ring, ring == 0 ? 0.0 : ang});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.ring != b.ring) return a.ring < b.ring;
    return a.angle < b.angle;
  });

  Layout layout;
  layout.cell_radius_ = r;
  layout.tiers_ = tiers;
  layout.sites_.reserve(raw.size());
  for (int i = 0; i < static_cast<int>(raw.size()); ++i)
    layout.sites_.push_back({i, raw[i].x, raw[i].y, raw[i].ring});

  // Adjacency from center distances.
  const double expected = std::sqrt(3.0) * r;
  const double tol = 1e-6 * r;
  int n = layout.site_count();
  layout.neighbors_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (std::abs(layout.distance(i, j) - expected) <= tol)
        layout.neighbors_[i].push_back(j);
    }
  }
  return layout;
}

void Layout::check_id(int site_id) const {
  if (site_id < 0 || site_id >= site_count())
    throw std::out_of_range("unknown site id " + std::to_string(site_id));
}

const Site& Layout::site(int site_id) const {
  check_id(site_id);
  return sites_[site_id];
}

const std::vector<int>& Layout::first_tier_neighbors(int site_id) const {
  check_id(site_id);
  return neighbors_[site_id];
}

std::vector<int> Layout::interferer_set(int site_id) const {
  check_id(site_id);
  std::vector<int> out;
  out.reserve(site_count() - 1);
  for (const Site& s : sites_)
    if (s.id != site_id) out.push_back(s.id);
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    double da = distance(site_id, a), db = distance(site_id, b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

double Layout::distance(int a, int b) const {
  check_id(a);
  check_id(b);
  double dx = sites_[a].x - sites_[b].x;
  double dy = sites_[a].y - sites_[b].y;
  return std::hypot(dx, dy);
}

bool Layout::contains(int site_id, double x, double y) const {
  const Site& s = site(site_id);
  const double r = cell_radius_;
  double px = std::abs(x - s.x);
  double py = std::abs(y - s.y);
  const double half_height = std::sqrt(3.0) / 2.0 * r;
  return py <= half_height && std::sqrt(3.0) * px + py <= std::sqrt(3.0) * r;
}

std::pair<double, double> Layout::sample_point_in_cell(int site_id, Rng64& rng) const {
  const Site& s = site(site_id);
  const double r = cell_radius_;
  const double half_height = std::sqrt(3.0) / 2.0 * r;
  std::uniform_real_distribution<double> ux(-r, r);
  std::uniform_real_distribution<double> uy(-half_height, half_height);
  // Acceptance ratio is 3/4, so this terminates quickly.
  for (;;) {
    double px = ux(rng);
    double py = uy(rng);
    if (std::sqrt(3.0) * std::abs(px) + std::abs(py) <= std::sqrt(3.0) * r)
      return {s.x + px, s.y + py};
  }
}

}  // namespace greencell
