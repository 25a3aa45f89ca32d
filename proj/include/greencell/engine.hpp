#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greencell/energy.hpp"
#include "greencell/metrics.hpp"
#include "greencell/power.hpp"
#include "greencell/radio.hpp"
#include "greencell/rng.hpp"

namespace greencell {

enum class SpatialLoadMode { ProfileOnly, ProfileTimesUniform };

std::string to_string(SpatialLoadMode mode);
SpatialLoadMode spatial_load_mode_from_string(const std::string& token);

// Everything a run needs. Defaults reproduce the baseline scenario: 1000 m
// cells in two tiers, 43 dBm macro sites, 1 kW panels with 2 kWh lead-acid
// storage, a residential traffic shape with per-site uniform scaling, and
// no CoMP or sharing unless switched on.
struct ScenarioConfig {
  double cell_radius_m = 1000.0;
  int tiers = 2;
  ChannelParams channel;
  PowerModelParams power;
  SolarConfig solar;
  double storage_capacity_wh = 2000.0;
  double storage_factor = 0.96;
  HourlyProfile traffic = HourlyProfile::default_traffic();
  SpatialLoadMode spatial_load_mode = SpatialLoadMode::ProfileTimesUniform;
  bool redraw_load_hourly = false;
  CompMode comp_mode = CompMode::NonComp;
  bool sharing_enabled = false;
  double alpha = 1.0;
  bool loss_compensated_transfers = false;
  int horizon_days = 7;
  int iterations = 200;
  uint64_t master_seed = 1;
  bool discard_day1 = false;          // drop day 1 from run aggregates (warm-up)
  bool cdf_center_cell_only = false;  // restrict SINR sampling to the center cell

  int horizon_hours() const { return horizon_days * 24; }
  void validate() const;
};

// Per-site load fractions for one hour and the drop they produce.
double draw_load(const HourlyProfile& traffic, int hour_of_day, double site_factor);
std::vector<double> draw_load_factors(SpatialLoadMode mode, int n_sites, Rng64& rng);

struct HourPlacement {
  std::vector<UserEquipment> ues;
  RbOccupancy occupancy;            // [site][rb], from the placed UEs
  std::vector<int> placed_per_site;
};

// ceil(load*rb_count) UEs per cell, uniform positions, distinct RBs, and a
// per-site shadow draw for each UE.
HourPlacement place_ues(const Layout& layout, const ChannelParams& channel,
                        const std::vector<double>& loads, Rng64& pos_rng, Rng64& rb_rng,
                        Rng64& shadow_rng);

struct IterationResult {
  std::vector<HourMetrics> hours;
  std::vector<std::vector<EnergyLedgerRow>> ledger;  // per hour, kept on request

  // Aggregates over the (possibly day-1-trimmed) horizon.
  double total_grid_wh = 0.0;
  double total_solar_used_wh = 0.0;
  double total_demand_wh = 0.0;
  double total_generation_wh = 0.0;
  bool ee_overall_defined = false;  // false when the whole run drew no grid
  double ee_overall = 0.0;          // total bits / total grid J
  double mean_hourly_ee = 0.0;      // over defined hours
  int ee_undefined_hours = 0;
  double mean_eci = 0.0;
  double mean_throughput_bps = 0.0;
  double mean_savings_eq8_pct = 0.0;
  double mean_savings_conv_pct = 0.0;
};

IterationResult run_iteration(const ScenarioConfig& config, uint64_t iteration,
                              bool keep_ledgers = false);

struct SeriesStat {
  double mean = 0.0;
  double stderr_mean = 0.0;
  int n = 0;
};

struct HourAverages {
  SeriesStat throughput_bps, grid_w, solar_w, savings_eq8_pct, savings_conv_pct, eci;
  SeriesStat ee;       // over iterations where the hour had grid draw
  int ee_defined = 0;  // how many iterations that was
};

struct RunAggregates {
  SeriesStat total_grid_wh, total_solar_used_wh, ee_overall, mean_hourly_ee, mean_eci,
      mean_throughput_bps, mean_savings_eq8_pct, mean_savings_conv_pct;
  int ee_overall_infinite_iterations = 0;  // iterations with zero grid draw
  int ee_undefined_hours_total = 0;
  int iterations = 0;
};

struct RunResult {
  ScenarioConfig config;
  std::vector<HourAverages> hours;
  RunAggregates aggregates;
};

// Runs config.iterations independent iterations (in parallel across
// `workers` threads; 0 picks the hardware count) and averages them. The
// result is bit-identical for a fixed config and seed regardless of the
// worker count.
RunResult run_monte_carlo(const ScenarioConfig& config, int workers = 0);

// Fully loaded snapshot drops for SINR distribution studies: every cell
// carries rb_count UEs and every RB is occupied network-wide. Returns
// n_samples linear SINRs under the given mode.
std::vector<double> collect_sinr_samples(const ScenarioConfig& config, CompMode mode,
                                         int n_samples);

}  // namespace greencell
