#include "greencell/engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace greencell {

std::string to_string(SpatialLoadMode mode) {
  return mode == SpatialLoadMode::ProfileOnly ? "profile_only" : "profile_times_uniform";
}

SpatialLoadMode spatial_load_mode_from_string(const std::string& token) {
  if (token == "profile_only" || token == "PROFILE_ONLY") return SpatialLoadMode::ProfileOnly;
  if (token == "profile_times_uniform" || token == "PROFILE_TIMES_UNIFORM")
    return SpatialLoadMode::ProfileTimesUniform;
  throw std::invalid_argument("unknown spatial load mode '" + token + "'");
}

void ScenarioConfig::validate() const {
  if (cell_radius_m <= 0.0) throw std::invalid_argument("cell_radius_m must be positive");
  if (tiers < 1 || tiers > 2) throw std::invalid_argument("tiers must be 1 or 2");
  channel.validate();
  power.validate();
  if (solar.panel_capacity_w < 0.0)
    throw std::invalid_argument("panel_capacity_w must be >= 0");
  if (solar.random_scale_w < 0.0) throw std::invalid_argument("c_s_w must be >= 0");
  if (storage_capacity_wh < 0.0)
    throw std::invalid_argument("storage_capacity_wh must be >= 0");
  if (storage_factor < 0.0 || storage_factor > 1.0)
    throw std::invalid_argument("storage_factor must be in [0,1]");
  for (double v : traffic.values())
    if (v < 0.0 || v > 1.0)
      throw std::invalid_argument("traffic profile values must be in [0,1]");
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must be in [0,1]");
  if (horizon_days < 1) throw std::invalid_argument("horizon_days must be >= 1");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (discard_day1 && horizon_days < 2)
    throw std::invalid_argument("discard_day1 needs a horizon of at least 2 days");
}

double draw_load(const HourlyProfile& traffic, int hour_of_day, double site_factor) {
  return traffic.at(hour_of_day) * site_factor;
}

std::vector<double> draw_load_factors(SpatialLoadMode mode, int n_sites, Rng64& rng) {
  std::vector<double> factors(n_sites, 1.0);
  if (mode == SpatialLoadMode::ProfileTimesUniform) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double& f : factors) f = u(rng);
  }
  return factors;
}

namespace {

int ue_count_for_load(double load, int rb_count) {
  // Guard against 0.3*50 landing just above an integer.
  int n = static_cast<int>(std::ceil(load * rb_count - 1e-9));
  return std::clamp(n, 0, rb_count);
}

}  // namespace

HourPlacement place_ues(const Layout& layout, const ChannelParams& channel,
                        const std::vector<double>& loads, Rng64& pos_rng, Rng64& rb_rng,
                        Rng64& shadow_rng) {
  const int n_sites = layout.site_count();
  const int rb_count = channel.rb_count;
  if (static_cast<int>(loads.size()) != n_sites)
    throw std::invalid_argument("loads must cover every site");

  HourPlacement out;
  out.occupancy.assign(n_sites, std::vector<uint8_t>(rb_count, 0));
  out.placed_per_site.assign(n_sites, 0);
  std::normal_distribution<double> shadow(0.0, channel.shadow_sigma_db);
  std::vector<int> rb_pool(rb_count);

  int next_id = 0;
  for (int b = 0; b < n_sites; ++b) {
    int n_ues = ue_count_for_load(loads[b], rb_count);
    out.placed_per_site[b] = n_ues;
    if (n_ues == 0) continue;

    // Distinct RBs via a partial Fisher-Yates shuffle.
    std::iota(rb_pool.begin(), rb_pool.end(), 0);
    for (int k = 0; k < n_ues; ++k) {
      std::uniform_int_distribution<int> pick(k, rb_count - 1);
      std::swap(rb_pool[k], rb_pool[pick(rb_rng)]);
    }

    for (int k = 0; k < n_ues; ++k) {
      UserEquipment ue;
      ue.ue_id = next_id++;
      auto [x, y] = layout.sample_point_in_cell(b, pos_rng);
      ue.x = x;
      ue.y = y;
      ue.home_cell = b;
      ue.rb_index = rb_pool[k];
      ue.shadow_db.resize(n_sites);
      for (int s = 0; s < n_sites; ++s)
        ue.shadow_db[s] = channel.shadow_sigma_db > 0.0 ? shadow(shadow_rng) : 0.0;
      out.occupancy[b][ue.rb_index] = 1;
      out.ues.push_back(std::move(ue));
    }
  }
  return out;
}

namespace {

struct HourOutcome {
  HourMetrics metrics;
  std::vector<EnergyLedgerRow> rows;
};

class StatAccumulator {
 public:
  void add(double x) {
    ++n_;
    double delta = x - mean_;
    mean_ += delta / n_;
    m2_ += delta * (x - mean_);
  }
  SeriesStat stat() const {
    SeriesStat s;
    s.n = n_;
    s.mean = n_ ? mean_ : 0.0;
    if (n_ > 1) s.stderr_mean = std::sqrt(m2_ / (n_ - 1) / n_);
    return s;
  }

 private:
  int n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace

IterationResult run_iteration(const ScenarioConfig& config, uint64_t iteration,
                              bool keep_ledgers) {
  config.validate();
  const Layout layout = Layout::hex_grid(config.cell_radius_m, config.tiers);
  const int n = layout.site_count();
  const int horizon = config.horizon_hours();
  const double noise_mw = dbm_to_mw(noise_power_dbm(config.channel.rb_bandwidth_hz));
  const double idle_w = idle_awake_power_w(config.power);

  const uint64_t iseed = iteration_seed(config.master_seed, iteration);
  Rng64 pos_rng = substream(iseed, Stream::UePositions);
  Rng64 rb_rng = substream(iseed, Stream::RbAssignment);
  Rng64 shadow_rng = substream(iseed, Stream::Shadowing);
  Rng64 load_rng = substream(iseed, Stream::LoadFactors);
  Rng64 solar_rng = substream(iseed, Stream::SolarFactors);

  std::vector<double> load_factors =
      draw_load_factors(config.spatial_load_mode, n, load_rng);
  // Under spatially random generation the per-site factor is redrawn every
  // hour: cloud cover moves, so a site that is starved this hour may be the
  // donor of the next one.
  std::vector<double> solar_factors(n, 1.0);
  std::uniform_real_distribution<double> solar_u(0.0, 1.0);
  auto redraw_solar = [&]() {
    if (config.solar.spatial_mode == SolarSpatialMode::UniformRandom)
      for (double& f : solar_factors) f = solar_u(solar_rng);
  };

  std::vector<StorageState> storage(
      n, StorageState{0.0, config.storage_capacity_wh, config.storage_factor});
  AlphaMap alpha(config.alpha);

  IterationResult result;
  result.hours.reserve(horizon);
  if (keep_ledgers) result.ledger.reserve(horizon);

  double total_thr_in_agg = 0.0;
  double sum_hourly_ee = 0.0;
  int defined_ee_hours = 0;
  double sum_eci = 0.0;
  int eci_hours = 0;
  double sum_thr = 0.0, sum_eq8 = 0.0, sum_conv = 0.0;
  int agg_hours = 0;

  std::vector<double> loads(n), demand(n), generation(n);
  std::vector<int> served(n);

  for (int h = 0; h < horizon; ++h) {
    const int hod = h % 24;
    if (config.redraw_load_hourly && config.spatial_load_mode == SpatialLoadMode::ProfileTimesUniform)
      load_factors = draw_load_factors(config.spatial_load_mode, n, load_rng);
    redraw_solar();
    for (int b = 0; b < n; ++b) loads[b] = draw_load(config.traffic, hod, load_factors[b]);

    HourPlacement placement =
        place_ues(layout, config.channel, loads, pos_rng, rb_rng, shadow_rng);

    // Association and throughput.
    std::fill(served.begin(), served.end(), 0);
    double throughput = 0.0;
    for (const UserEquipment& ue : placement.ues) {
      std::vector<double> rx = received_powers_mw(layout, config.channel, ue);
      ServingSet serving =
          associate(config.comp_mode, layout, ue, rx, placement.occupancy, noise_mw);
      throughput += ue_throughput_bps(serving.sinr_linear, config.channel.rb_bandwidth_hz);
      ++served[serving.primary];
      if (serving.secondary >= 0) ++served[serving.secondary];
    }

    // Demand follows the post-association RB usage; a JT UE costs an RB at
    // both of its servers. Sites left with nobody to serve sleep.
    double conventional_demand = 0.0;
    for (int b = 0; b < n; ++b) {
      double eff_load = std::min(1.0, static_cast<double>(served[b]) / config.channel.rb_count);
      demand[b] = served[b] == 0 ? config.power.sectors * config.power.sleep_w
                                 : bs_input_power_w(config.power, eff_load);
      double conv_load =
          std::min(1.0, static_cast<double>(placement.placed_per_site[b]) / config.channel.rb_count);
      conventional_demand +=
          conv_load > 0.0 ? bs_input_power_w(config.power, conv_load) : idle_w;
      generation[b] = generation_wh(config.solar, hod, solar_factors[b]);
    }

    HourSettlement settlement =
        settle_hour(layout, storage, generation, demand, alpha, config.sharing_enabled,
                    config.loss_compensated_transfers, h);

    double grid = 0.0, solar_used = 0.0, total_demand = 0.0, total_gen = 0.0;
    for (const EnergyLedgerRow& row : settlement.rows) {
      grid += row.grid_used_wh;
      solar_used += row.solar_used_wh;
      total_demand += row.demand_wh;
      total_gen += row.generation_wh;
    }

    HourMetrics m;
    m.throughput_bps = throughput;
    m.grid_w = grid;
    m.solar_w = solar_used;
    m.savings_eq8_pct = 100.0 * solar_used / total_demand;
    m.savings_conv_pct = savings_vs_conventional_pct(grid, conventional_demand);
    if (grid > 0.0) {
      m.ee_defined = true;
      m.ee_bits_per_j = throughput / grid;
      m.eci_j_per_bit = throughput > 0.0 ? grid / throughput
                                         : std::numeric_limits<double>::quiet_NaN();
    } else {
      m.ee_defined = false;
      m.eci_j_per_bit = 0.0;
    }

    bool in_aggregate = !(config.discard_day1 && h < 24);
    if (in_aggregate) {
      ++agg_hours;
      result.total_grid_wh += grid;
      result.total_solar_used_wh += solar_used;
      result.total_demand_wh += total_demand;
      result.total_generation_wh += total_gen;
      total_thr_in_agg += throughput;
      sum_thr += throughput;
      sum_eq8 += m.savings_eq8_pct;
      sum_conv += m.savings_conv_pct;
      if (m.ee_defined) {
        sum_hourly_ee += m.ee_bits_per_j;
        ++defined_ee_hours;
      } else {
        ++result.ee_undefined_hours;
      }
      if (!std::isnan(m.eci_j_per_bit)) {
        sum_eci += m.eci_j_per_bit;
        ++eci_hours;
      }
    }

    result.hours.push_back(m);
    if (keep_ledgers) result.ledger.push_back(std::move(settlement.rows));
  }

  // ee_undefined_hours counts zero-grid hours, which is also what makes the
  // whole-run ratio blow up when every hour is solar-only.
  if (result.total_grid_wh > 0.0) {
    result.ee_overall_defined = true;
    result.ee_overall = total_thr_in_agg / result.total_grid_wh;
  }
  if (defined_ee_hours > 0) result.mean_hourly_ee = sum_hourly_ee / defined_ee_hours;
  if (eci_hours > 0) result.mean_eci = sum_eci / eci_hours;
  if (agg_hours > 0) {
    result.mean_throughput_bps = sum_thr / agg_hours;
    result.mean_savings_eq8_pct = sum_eq8 / agg_hours;
    result.mean_savings_conv_pct = sum_conv / agg_hours;
  }
  return result;
}

RunResult run_monte_carlo(const ScenarioConfig& config, int workers) {
  config.validate();
  if (workers <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    workers = hc ? static_cast<int>(hc) : 1;
  }
  const int iterations = config.iterations;
  const int horizon = config.horizon_hours();

  RunResult out;
  out.config = config;

  struct HourAcc {
    StatAccumulator throughput, grid, solar, eq8, conv, eci, ee;
    int ee_defined = 0;
  };
  std::vector<HourAcc> hour_acc(horizon);
  StatAccumulator a_grid, a_solar, a_ee_overall, a_mean_ee, a_eci, a_thr, a_eq8, a_conv;

  auto consume = [&](const IterationResult& it) {
    for (int h = 0; h < horizon; ++h) {
      const HourMetrics& m = it.hours[h];
      HourAcc& acc = hour_acc[h];
      acc.throughput.add(m.throughput_bps);
      acc.grid.add(m.grid_w);
      acc.solar.add(m.solar_w);
      acc.eq8.add(m.savings_eq8_pct);
      acc.conv.add(m.savings_conv_pct);
      if (!std::isnan(m.eci_j_per_bit)) acc.eci.add(m.eci_j_per_bit);
      if (m.ee_defined) {
        acc.ee.add(m.ee_bits_per_j);
        ++acc.ee_defined;
      }
    }
    a_grid.add(it.total_grid_wh);
    a_solar.add(it.total_solar_used_wh);
    if (it.ee_overall_defined)
      a_ee_overall.add(it.ee_overall);
    else
      ++out.aggregates.ee_overall_infinite_iterations;
    a_mean_ee.add(it.mean_hourly_ee);
    a_eci.add(it.mean_eci);
    a_thr.add(it.mean_throughput_bps);
    a_eq8.add(it.mean_savings_eq8_pct);
    a_conv.add(it.mean_savings_conv_pct);
    out.aggregates.ee_undefined_hours_total += it.ee_undefined_hours;
  };

  if (workers == 1 || iterations == 1) {
    for (int i = 0; i < iterations; ++i) consume(run_iteration(config, i));
  } else {
    // Bounded window of async iterations, consumed strictly in index order
    // so the reduction (and thus the output) ignores scheduling order.
    const int window = std::min(iterations, workers * 2);
    std::vector<std::future<IterationResult>> inflight;
    inflight.reserve(iterations);
    int launched = 0;
    auto launch = [&]() {
      int i = launched++;
      inflight.push_back(
          std::async(std::launch::async, [&config, i]() { return run_iteration(config, i); }));
    };
    while (launched < std::min(window, iterations)) launch();
    for (int i = 0; i < iterations; ++i) {
      IterationResult r = inflight[i].get();
      if (launched < iterations) launch();
      consume(r);
    }
  }

  out.hours.resize(horizon);
  for (int h = 0; h < horizon; ++h) {
    const auto& acc = hour_acc[h];
    HourAverages& avg = out.hours[h];
    avg.throughput_bps = acc.throughput.stat();
    avg.grid_w = acc.grid.stat();
    avg.solar_w = acc.solar.stat();
    avg.savings_eq8_pct = acc.eq8.stat();
    avg.savings_conv_pct = acc.conv.stat();
    avg.eci = acc.eci.stat();
    avg.ee = acc.ee.stat();
    avg.ee_defined = acc.ee_defined;
  }
  out.aggregates.total_grid_wh = a_grid.stat();
  out.aggregates.total_solar_used_wh = a_solar.stat();
  out.aggregates.ee_overall = a_ee_overall.stat();
  out.aggregates.mean_hourly_ee = a_mean_ee.stat();
  out.aggregates.mean_eci = a_eci.stat();
  out.aggregates.mean_throughput_bps = a_thr.stat();
  out.aggregates.mean_savings_eq8_pct = a_eq8.stat();
  out.aggregates.mean_savings_conv_pct = a_conv.stat();
  out.aggregates.iterations = iterations;
  return out;
}

std::vector<double> collect_sinr_samples(const ScenarioConfig& config, CompMode mode,
                                         int n_samples) {
  config.validate();
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  const Layout layout = Layout::hex_grid(config.cell_radius_m, config.tiers);
  const int n = layout.site_count();
  const double noise_mw = dbm_to_mw(noise_power_dbm(config.channel.rb_bandwidth_hz));

  std::vector<double> samples;
  samples.reserve(n_samples);
  std::vector<double> full_load(n, 1.0);
  for (uint64_t snapshot = 0; static_cast<int>(samples.size()) < n_samples; ++snapshot) {
    uint64_t sseed = iteration_seed(config.master_seed, snapshot);
    Rng64 pos_rng = substream(sseed, Stream::SinrSampling);
    Rng64 rb_rng = substream(sseed, Stream::RbAssignment);
    Rng64 shadow_rng = substream(sseed, Stream::Shadowing);
    HourPlacement placement =
        place_ues(layout, config.channel, full_load, pos_rng, rb_rng, shadow_rng);
    for (const UserEquipment& ue : placement.ues) {
      if (config.cdf_center_cell_only && ue.home_cell != layout.center_site()) continue;
      if (static_cast<int>(samples.size()) >= n_samples) break;
      std::vector<double> rx = received_powers_mw(layout, config.channel, ue);
      ServingSet serving = associate(mode, layout, ue, rx, placement.occupancy, noise_mw);
      samples.push_back(serving.sinr_linear);
    }
  }
  return samples;
}

}  // namespace greencell
