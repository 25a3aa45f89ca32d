#include "greencell/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace greencell {

std::string format_g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void write_timeseries(const RunResult& result, std::ostream& out) {
  out << "hour,throughput_bps,grid_w,solar_w,savings_eq8_pct,savings_conv_pct,"
         "ee_bits_per_j,eci_j_per_bit,ee_defined\n";
  for (size_t h = 0; h < result.hours.size(); ++h) {
    const HourAverages& a = result.hours[h];
    out << h << ',' << format_g6(a.throughput_bps.mean) << ',' << format_g6(a.grid_w.mean) << ','
        << format_g6(a.solar_w.mean) << ',' << format_g6(a.savings_eq8_pct.mean) << ','
        << format_g6(a.savings_conv_pct.mean) << ','
        << format_g6(a.ee_defined > 0 ? a.ee.mean : 0.0) << ',' << format_g6(a.eci.mean) << ','
        << a.ee_defined << '\n';
  }
}

void emit_timeseries(const RunResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_timeseries(result, out);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void write_sweep_header(std::ostream& out) {
  out << "axis_value,scenario,metric,mean,stderr\n";
}

void write_sweep_rows(std::ostream& out, double axis_value, const std::string& scenario,
                      const RunAggregates& agg) {
  auto row = [&](const char* metric, const SeriesStat& s) {
    out << format_g6(axis_value) << ',' << scenario << ',' << metric << ','
        << format_g6(s.mean) << ',' << format_g6(s.stderr_mean) << '\n';
  };
  row("ee_overall_bits_per_j", agg.ee_overall);
  row("mean_hourly_ee_bits_per_j", agg.mean_hourly_ee);
  row("total_grid_wh", agg.total_grid_wh);
  row("total_solar_used_wh", agg.total_solar_used_wh);
  row("mean_throughput_bps", agg.mean_throughput_bps);
  row("mean_savings_eq8_pct", agg.mean_savings_eq8_pct);
  row("mean_savings_conv_pct", agg.mean_savings_conv_pct);
  row("mean_eci_j_per_bit", agg.mean_eci);
  out << format_g6(axis_value) << ',' << scenario << ",zero_grid_iterations,"
      << agg.ee_overall_infinite_iterations << ",0\n";
}

void emit_sinr_cdf(std::vector<double> sinr_linear, const std::string& path) {
  if (sinr_linear.empty()) throw std::invalid_argument("no SINR samples");
  std::sort(sinr_linear.begin(), sinr_linear.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "sinr_db,cdf\n";
  const double n = static_cast<double>(sinr_linear.size());
  for (size_t i = 0; i < sinr_linear.size(); ++i) {
    double db = 10.0 * std::log10(std::max(sinr_linear[i], 1e-300));
    out << format_g6(db) << ',' << format_g6((i + 1) / n) << '\n';
  }
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace greencell
