#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>

#include "doctest.h"
#include "greencell/geometry.hpp"

using namespace greencell;

TEST_CASE("two-tier grid has 19 sites with the ring structure") {
  Layout layout = Layout::hex_grid(1000.0, 2);
  CHECK(layout.site_count() == 19);
  int per_tier[3] = {0, 0, 0};
  for (const Site& s : layout.sites()) ++per_tier[s.tier];
  CHECK(per_tier[0] == 1);
  CHECK(per_tier[1] == 6);
  CHECK(per_tier[2] == 12);
  CHECK(layout.sites()[0].x == doctest::Approx(0.0));
  CHECK(layout.sites()[0].y == doctest::Approx(0.0));

  int at_ring1_distance = 0;
  for (const Site& s : layout.sites())
    if (s.id != 0 && std::abs(layout.distance(0, s.id) - std::sqrt(3.0) * 1000.0) < 1e-6)
      ++at_ring1_distance;
  CHECK(at_ring1_distance == 6);
  CHECK(layout.distance(0, 1) == doctest::Approx(1732.0508075688772).epsilon(1e-12));
}

TEST_CASE("one-tier grid has 7 sites") {
  CHECK(Layout::hex_grid(1000.0, 1).site_count() == 7);
}

TEST_CASE("tier-1 distance scales with the cell radius") {
  Layout layout = Layout::hex_grid(500.0, 2);
  for (const Site& s : layout.sites())
    if (s.tier == 1)
      CHECK(layout.distance(0, s.id) == doctest::Approx(866.0254037844386).epsilon(1e-12));
}

TEST_CASE("site count formula 1+3t(t+1)") {
  for (int t : {1, 2})
    CHECK(Layout::hex_grid(750.0, t).site_count() == 1 + 3 * t * (t + 1));
}

TEST_CASE("rejects invalid construction parameters") {
  CHECK_THROWS_AS(Layout::hex_grid(1000.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Layout::hex_grid(1000.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Layout::hex_grid(-5.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Layout::hex_grid(0.0, 1), std::invalid_argument);
}

TEST_CASE("all site positions are distinct") {
  Layout layout = Layout::hex_grid(1000.0, 2);
  for (int a = 0; a < layout.site_count(); ++a)
    for (int b = a + 1; b < layout.site_count(); ++b)
      CHECK(layout.distance(a, b) > 1.0);
}

TEST_CASE("center site has six first-tier neighbors") {
  CHECK(Layout::hex_grid(1000.0, 2).first_tier_neighbors(0).size() == 6);
  CHECK(Layout::hex_grid(1000.0, 1).first_tier_neighbors(0).size() == 6);
}

TEST_CASE("border sites keep truncated neighbor lists") {
  Layout layout = Layout::hex_grid(1000.0, 2);
  const double corner_dist = 2.0 * std::sqrt(3.0) * 1000.0;
  int corners = 0, edges = 0;
  for (const Site& s : layout.sites()) {
    if (s.tier != 2) continue;
    size_t n = layout.first_tier_neighbors(s.id).size();
    if (std::abs(layout.distance(0, s.id) - corner_dist) < 1e-6) {
      CHECK(n == 3);  // outer-ring corner
      ++corners;
    } else {
      CHECK(n == 4);  // outer-ring edge
      ++edges;
    }
  }
  CHECK(corners == 6);
  CHECK(edges == 6);
}

TEST_CASE("neighbor relation is symmetric and irreflexive") {
  for (int t : {1, 2}) {
    Layout layout = Layout::hex_grid(820.0, t);
    for (const Site& a : layout.sites()) {
      const auto& na = layout.first_tier_neighbors(a.id);
      CHECK(std::find(na.begin(), na.end(), a.id) == na.end());
      for (int b : na) {
        const auto& nb = layout.first_tier_neighbors(b);
        CHECK(std::find(nb.begin(), nb.end(), a.id) != nb.end());
      }
    }
  }
}

TEST_CASE("interferer set covers everyone else in distance order") {
  Layout layout = Layout::hex_grid(1000.0, 2);
  std::vector<int> inter = layout.interferer_set(0);
  CHECK(inter.size() == 18);
  for (size_t i = 0; i < inter.size(); ++i) {
    CHECK(inter[i] != 0);
    if (i > 0) CHECK(layout.distance(0, inter[i]) >= layout.distance(0, inter[i - 1]));
    if (i < 6) CHECK(layout.site(inter[i]).tier == 1);
  }
  std::set<int> unique(inter.begin(), inter.end());
  CHECK(unique.size() == 18);

  CHECK(Layout::hex_grid(1000.0, 1).interferer_set(0).size() == 6);
}

TEST_CASE("unknown site ids are rejected") {
  Layout layout = Layout::hex_grid(1000.0, 2);
  CHECK_THROWS_AS(layout.first_tier_neighbors(19), std::out_of_range);
  CHECK_THROWS_AS(layout.first_tier_neighbors(-1), std::out_of_range);
  CHECK_THROWS_AS(layout.interferer_set(99), std::out_of_range);
  CHECK_THROWS_AS(layout.distance(0, 19), std::out_of_range);
}

TEST_CASE("sampled points land in their cell, which is the site's Voronoi region") {
  Layout layout = Layout::hex_grid(1000.0, 2);
  Rng64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    int cell = trial % layout.site_count();
    auto [x, y] = layout.sample_point_in_cell(cell, rng);
    CHECK(layout.contains(cell, x, y));
    double home = std::hypot(x - layout.site(cell).x, y - layout.site(cell).y);
    for (const Site& other : layout.sites()) {
      if (other.id == cell) continue;
      CHECK(std::hypot(x - other.x, y - other.y) >= home - 1e-9);
    }
  }
}
