// Command line front end: single runs, parameter sweeps, CSV persistence
// and SVG plots.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "greencell/config.hpp"
#include "greencell/engine.hpp"
#include "greencell/plot.hpp"
#include "greencell/report.hpp"

namespace fs = std::filesystem;
using namespace greencell;

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir = "results";
  std::string sweep;
  std::string modes;
  int iterations = -1;
  int days = -1;
  long long seed = -1;
  bool no_plots = false;
  int workers = 0;
  int sinr_samples = 2000;
};

std::vector<double> hour_axis(size_t n) {
  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i);
  return x;
}

void emit_run_plots(const RunResult& result, const fs::path& dir, const std::string& label) {
  const size_t n = result.hours.size();
  std::vector<double> hours = hour_axis(n);
  auto column = [&](auto getter) {
    std::vector<double> y(n);
    for (size_t h = 0; h < n; ++h) y[h] = getter(result.hours[h]);
    return y;
  };

  write_line_chart((dir / ("hourly_throughput_" + label + ".svg")).string(),
                   {{"throughput", hours, column([](const HourAverages& a) {
                       return a.throughput_bps.mean / 1e6;
                     })}},
                   {"Network throughput (" + label + ")", "hour", "Mbps"});
  write_line_chart((dir / ("hourly_grid_power_" + label + ".svg")).string(),
                   {{"grid", hours, column([](const HourAverages& a) { return a.grid_w.mean; })},
                    {"solar used", hours,
                     column([](const HourAverages& a) { return a.solar_w.mean; })}},
                   {"Supply split (" + label + ")", "hour", "W"});
  write_line_chart(
      (dir / ("hourly_savings_" + label + ".svg")).string(),
      {{"solar share", hours,
        column([](const HourAverages& a) { return a.savings_eq8_pct.mean; })},
       {"vs conventional", hours,
        column([](const HourAverages& a) { return a.savings_conv_pct.mean; })}},
      {"On-grid savings (" + label + ")", "hour", "%"});
  write_line_chart((dir / ("hourly_eci_" + label + ".svg")).string(),
                   {{"ECI", hours, column([](const HourAverages& a) { return a.eci.mean; })}},
                   {"Energy consumption index (" + label + ")", "hour", "J/bit"});
  write_line_chart((dir / ("hourly_ee_" + label + ".svg")).string(),
                   {{"EE", hours, column([](const HourAverages& a) {
                       return a.ee_defined > 0 ? a.ee.mean : 0.0;
                     })}},
                   {"Energy efficiency (" + label + ")", "hour", "bits/J"});
}

int run_single(const ScenarioConfig& base, const std::vector<ScenarioSelector>& scenarios,
               const CliOptions& opt, const fs::path& out) {
  std::vector<Series> cdf_series;
  std::set<CompMode> cdf_done;
  for (const ScenarioSelector& sel : scenarios) {
    ScenarioConfig cfg = sel.apply(base);
    std::string label = sel.label(base);
    std::cout << "running scenario " << label << " (" << cfg.iterations << " iterations, "
              << cfg.horizon_days << " days)\n";
    RunResult result = run_monte_carlo(cfg, opt.workers);
    emit_timeseries(result, (out / ("timeseries_" + label + ".csv")).string());
    save_config(cfg, (out / ("config_" + label + ".txt")).string());
    if (!opt.no_plots) emit_run_plots(result, out, label);

    if (!opt.no_plots && !cdf_done.count(cfg.comp_mode)) {
      cdf_done.insert(cfg.comp_mode);
      std::vector<double> samples = collect_sinr_samples(cfg, cfg.comp_mode, opt.sinr_samples);
      std::string mode_name = to_string(cfg.comp_mode);
      emit_sinr_cdf(samples, (out / ("sinr_cdf_" + mode_name + ".csv")).string());
      std::sort(samples.begin(), samples.end());
      Series s;
      s.label = mode_name;
      for (size_t i = 0; i < samples.size(); ++i) {
        s.x.push_back(10.0 * std::log10(std::max(samples[i], 1e-300)));
        s.y.push_back(static_cast<double>(i + 1) / samples.size());
      }
      cdf_series.push_back(std::move(s));
    }

    const RunAggregates& agg = result.aggregates;
    std::cout << "  total grid " << format_g6(agg.total_grid_wh.mean) << " Wh, solar used "
              << format_g6(agg.total_solar_used_wh.mean) << " Wh, EE "
              << format_g6(agg.ee_overall.mean) << " bits/J\n";
  }
  if (!cdf_series.empty())
    write_line_chart((out / "sinr_cdf.svg").string(), cdf_series,
                     {"SINR distribution at full load", "SINR (dB)", "CDF"});
  return 0;
}

int run_sweep(const ScenarioConfig& base, const std::vector<ScenarioSelector>& scenarios,
              const SweepSpec& sweep, const CliOptions& opt, const fs::path& out) {
  fs::path csv_path = out / ("sweep_" + to_string(sweep.axis) + ".csv");
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("cannot write '" + csv_path.string() + "'");
  write_sweep_header(csv);

  std::map<std::string, Series> ee_curves, grid_curves;
  for (double value : sweep.values) {
    for (const ScenarioSelector& sel : scenarios) {
      ScenarioConfig cfg = apply_sweep_value(sel.apply(base), sweep.axis, value);
      std::string label = sel.label(base);
      std::cout << "sweep " << to_string(sweep.axis) << " = " << format_g6(value) << ", scenario "
                << label << "\n";
      RunResult result = run_monte_carlo(cfg, opt.workers);
      write_sweep_rows(csv, value, label, result.aggregates);
      csv.flush();  // keep partial results on abort

      ee_curves[label].label = label;
      ee_curves[label].x.push_back(value);
      ee_curves[label].y.push_back(result.aggregates.ee_overall.mean);
      grid_curves[label].label = label;
      grid_curves[label].x.push_back(value);
      grid_curves[label].y.push_back(result.aggregates.total_grid_wh.mean);
    }
  }
  if (!opt.no_plots) {
    std::vector<Series> ee, grid;
    for (auto& [_, s] : ee_curves) ee.push_back(s);
    for (auto& [_, s] : grid_curves) grid.push_back(s);
    std::string axis = to_string(sweep.axis);
    write_line_chart((out / ("sweep_" + axis + "_ee.svg")).string(), ee,
                     {"EE vs " + axis, axis, "bits/J"});
    write_line_chart((out / ("sweep_" + axis + "_grid.svg")).string(), grid,
                     {"Grid energy vs " + axis, axis, "Wh"});
  }
  std::cout << "sweep table written to " << csv_path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliOptions opt;
  CLI::App app{
      "Monte Carlo simulator of a solar-powered cellular downlink with CoMP "
      "association, battery storage and inter-site energy sharing"};
  app.add_option("--config", opt.config_path, "Scenario config file (key = value)");
  app.add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
  app.add_option("--sweep", opt.sweep,
                 "Sweep AXIS=v1,v2,... (storage_capacity | storage_factor | "
                 "line_loss_pct | solar_capacity)");
  app.add_option("--modes", opt.modes,
                 "Scenario list, e.g. noncomp,dps+share,jt-share (default: config scenario)");
  app.add_option("--iterations", opt.iterations, "Override iteration count");
  app.add_option("--days", opt.days, "Override horizon in days");
  app.add_option("--seed", opt.seed, "Override master seed");
  app.add_option("--workers", opt.workers, "Worker threads (0 = hardware)");
  app.add_option("--sinr-samples", opt.sinr_samples, "Samples for the SINR CDF plot")
      ->capture_default_str();
  app.add_flag("--no-plots", opt.no_plots, "Skip SVG plot emission");
  CLI11_PARSE(app, argc, argv);

  try {
    ScenarioConfig base =
        opt.config_path.empty() ? ScenarioConfig{} : load_config(opt.config_path);
    if (opt.iterations > 0) base.iterations = opt.iterations;
    if (opt.days > 0) base.horizon_days = opt.days;
    if (opt.seed >= 0) base.master_seed = static_cast<uint64_t>(opt.seed);
    base.validate();

    std::vector<ScenarioSelector> scenarios;
    if (opt.modes.empty()) {
      ScenarioSelector sel;
      sel.mode = base.comp_mode;
      scenarios.push_back(sel);
    } else {
      scenarios = parse_scenario_list(opt.modes);
    }

    fs::path out(opt.out_dir);
    fs::create_directories(out);

    if (!opt.sweep.empty())
      return run_sweep(base, scenarios, parse_sweep(opt.sweep), opt, out);
    return run_single(base, scenarios, opt, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
