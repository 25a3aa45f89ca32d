#pragma once

#include <utility>
#include <vector>

#include "greencell/rng.hpp"

namespace greencell {

struct Site {
  int id = 0;
  double x = 0.0;  // m
  double y = 0.0;  // m
  int tier = 0;    // ring index around the center site
};

// Finite hexagonal grid of omnidirectional cell sites: one center site plus
// `tiers` surrounding rings (1 + 3*t*(t+1) sites). Flat-top hexagons with
// circumradius cell_radius; adjacent site centers are sqrt(3)*R apart.
// Immutable after construction.
class Layout {
 public:
  static Layout hex_grid(double cell_radius_m, int tiers);

  double cell_radius() const { return cell_radius_; }
  int tiers() const { return tiers_; }
  int site_count() const { return static_cast<int>(sites_.size()); }
  const std::vector<Site>& sites() const { return sites_; }
  const Site& site(int site_id) const;
  int center_site() const { return 0; }

  // Sites at the minimum center-to-center distance (sqrt(3)*R within
  // 1e-6*R). Interior sites have 6 of them; border sites fewer.
  const std::vector<int>& first_tier_neighbors(int site_id) const;

  // Every other site, ordered by ascending distance (ties by id).
  std::vector<int> interferer_set(int site_id) const;

  double distance(int a, int b) const;

  // Membership test for the flat-top hexagonal cell of a site.
  bool contains(int site_id, double x, double y) const;

  // Uniform point in a site's hexagon (rejection sampling).
  std::pair<double, double> sample_point_in_cell(int site_id, Rng64& rng) const;

 private:
  Layout() = default;
  void check_id(int site_id) const;

  double cell_radius_ = 0.0;
  int tiers_ = 0;
  std::vector<Site> sites_;
  std::vector<std::vector<int>> neighbors_;
};

}  // namespace greencell
