#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "greencell/config.hpp"

using namespace greencell;

TEST_CASE("empty config text yields the default scenario") {
  ScenarioConfig cfg = parse_config("", "mem");
  CHECK(cfg.cell_radius_m == doctest::Approx(1000.0));
  CHECK(cfg.tiers == 2);
  CHECK(cfg.channel.pathloss_exponent == doctest::Approx(3.574));
  CHECK(cfg.channel.shadow_sigma_db == doctest::Approx(8.0));
  CHECK(cfg.channel.rb_count == 50);
  CHECK(cfg.power.max_tx_w == doctest::Approx(19.95));
  CHECK(cfg.power.sleep_w == doctest::Approx(54.0));
  CHECK(cfg.storage_capacity_wh == doctest::Approx(2000.0));
  CHECK(cfg.storage_factor == doctest::Approx(0.96));
  CHECK(cfg.solar.panel_capacity_w == doctest::Approx(1000.0));
  CHECK(cfg.horizon_days == 7);
  CHECK(cfg.comp_mode == CompMode::NonComp);
  CHECK(!cfg.sharing_enabled);
  CHECK(cfg.spatial_load_mode == SpatialLoadMode::ProfileTimesUniform);
}

TEST_CASE("values, comments and case-insensitive keys are parsed") {
  std::string text =
      "# scenario\n"
      "Comp_Mode = jt\n"
      "sharing = on   # cooperative\n"
      "alpha = 0.8\n"
      "iterations = 42\n"
      "storage_capacity_wh = 1500\n";
  ScenarioConfig cfg = parse_config(text, "mem");
  CHECK(cfg.comp_mode == CompMode::Jt);
  CHECK(cfg.sharing_enabled);
  CHECK(cfg.alpha == doctest::Approx(0.8));
  CHECK(cfg.iterations == 42);
  CHECK(cfg.storage_capacity_wh == doctest::Approx(1500.0));
}

TEST_CASE("errors carry the source line and field name") {
  CHECK_THROWS_WITH_AS(parse_config("tiers = 2\nbogus_key = 3\n", "mem"),
                       doctest::Contains("mem:2"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("storage_capacity_wh = -5\n", "mem"),
                       doctest::Contains("storage_capacity_wh"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("alpha = maybe\n", "mem"), doctest::Contains("alpha"),
                       ConfigError);
  CHECK_THROWS_AS(parse_config("tiers 2\n", "mem"), ConfigError);
  CHECK_THROWS_AS(parse_config("comp_mode = csb\n", "mem"), ConfigError);
}

TEST_CASE("round trip: echoed config parses back to the same scenario") {
  ScenarioConfig cfg;
  cfg.comp_mode = CompMode::Dps;
  cfg.sharing_enabled = true;
  cfg.alpha = 0.77;
  cfg.master_seed = 987654321;
  cfg.iterations = 13;
  cfg.solar.spatial_mode = SolarSpatialMode::UniformRandom;
  std::string echoed = config_to_string(cfg);
  ScenarioConfig back = parse_config(echoed, "echo");
  CHECK(config_to_string(back) == echoed);
  CHECK(back.comp_mode == CompMode::Dps);
  CHECK(back.alpha == cfg.alpha);
  CHECK(back.master_seed == cfg.master_seed);
  CHECK(back.solar.profile.values() == cfg.solar.profile.values());
  CHECK(back.traffic.values() == cfg.traffic.values());
}

TEST_CASE("inline profiles are validated") {
  std::string good = "traffic_profile = ";
  for (int h = 0; h < 24; ++h) good += (h ? ",0.5" : "0.5");
  CHECK_NOTHROW(parse_config(good + "\n", "mem"));
  CHECK_THROWS_AS(parse_config("traffic_profile = 0.5,0.5\n", "mem"), ConfigError);
  std::string toobig = "traffic_profile = ";
  for (int h = 0; h < 24; ++h) toobig += (h ? ",1.5" : "1.5");
  CHECK_THROWS_AS(parse_config(toobig + "\n", "mem"), ConfigError);
}

TEST_CASE("profile files load through the config") {
  std::string path = "test_profile_tmp.csv";
  {
    std::ofstream out(path);
    out << "hour,wh_per_kw\n";
    for (int h = 0; h < 24; ++h) out << h << "," << (h >= 6 && h <= 18 ? 400 : 0) << "\n";
  }
  ScenarioConfig cfg = parse_config("solar_profile_file = " + path + "\n", "mem");
  CHECK(cfg.solar.profile.at(12) == doctest::Approx(400.0));
  CHECK(cfg.solar.profile.at(2) == 0.0);
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_config("solar_profile_file = missing_file.csv\n", "mem"), ConfigError);
}

TEST_CASE("sweep parsing and validation") {
  SweepSpec s = parse_sweep("STORAGE_CAPACITY=500,1000,1500");
  CHECK(s.axis == SweepAxis::StorageCapacity);
  CHECK(s.values == std::vector<double>{500, 1000, 1500});
  CHECK(parse_sweep("line_loss_pct=0,50,100").axis == SweepAxis::LineLossPct);
  CHECK_THROWS_AS(parse_sweep("storage_capacity=5,3"), ConfigError);
  CHECK_THROWS_AS(parse_sweep("line_loss_pct=0,120"), ConfigError);
  CHECK_THROWS_AS(parse_sweep("storage_factor=0.5,1.2"), ConfigError);
  CHECK_THROWS_AS(parse_sweep("voltage=1,2"), ConfigError);
  CHECK_THROWS_AS(parse_sweep("storage_capacity"), ConfigError);
}

TEST_CASE("sweep values map onto the scenario") {
  ScenarioConfig base;
  ScenarioConfig c1 = apply_sweep_value(base, SweepAxis::LineLossPct, 25.0);
  CHECK(c1.alpha == doctest::Approx(0.75));
  ScenarioConfig c2 = apply_sweep_value(base, SweepAxis::StorageFactor, 0.9);
  CHECK(c2.storage_factor == doctest::Approx(0.9));
  ScenarioConfig c3 = apply_sweep_value(base, SweepAxis::SolarCapacity, 2000.0);
  CHECK(c3.solar.panel_capacity_w == doctest::Approx(2000.0));
  CHECK(c3.solar.random_scale_w == doctest::Approx(2000.0));
  CHECK(c3.storage_capacity_wh == doctest::Approx(4000.0));  // scaled with the panel
}

TEST_CASE("scenario selectors") {
  ScenarioConfig base;
  base.sharing_enabled = false;
  auto list = parse_scenario_list("noncomp,dps+share,jt-share");
  REQUIRE(list.size() == 3);
  CHECK(list[0].label(base) == "noncomp");
  CHECK(list[1].label(base) == "dps+share");
  CHECK(list[2].label(base) == "jt");
  ScenarioConfig dps = list[1].apply(base);
  CHECK(dps.comp_mode == CompMode::Dps);
  CHECK(dps.sharing_enabled);
  ScenarioConfig jt = list[2].apply(base);
  CHECK(jt.comp_mode == CompMode::Jt);
  CHECK(!jt.sharing_enabled);
  CHECK_THROWS_AS(parse_scenario("fancy"), std::invalid_argument);
}
