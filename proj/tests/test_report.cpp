#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "greencell/plot.hpp"
#include "greencell/report.hpp"

using namespace greencell;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("number formatting uses six significant digits") {
  CHECK(format_g6(0.0) == "0");
  CHECK(format_g6(123456789.0) == "1.23457e+08");
  CHECK(format_g6(1.00588e-5) == "1.00588e-05");
  CHECK(format_g6(54.0) == "54");
}

TEST_CASE("timeseries header and row count are stable") {
  ScenarioConfig cfg;
  cfg.tiers = 1;
  cfg.iterations = 1;
  cfg.horizon_days = 7;
  RunResult result = run_monte_carlo(cfg, 1);
  std::ostringstream out;
  write_timeseries(result, out);
  std::string text = out.str();
  CHECK(text.substr(0, text.find('\n')) ==
        "hour,throughput_bps,grid_w,solar_w,savings_eq8_pct,savings_conv_pct,"
        "ee_bits_per_j,eci_j_per_bit,ee_defined");
  CHECK(count_lines(text) == 1 + 24 * 7);

  // Zero-grid hour: ee column 0, undefined marker 0, eci 0.
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  bool found_zero_grid = false;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 9);
    if (cells[2] == "0") {
      found_zero_grid = true;
      CHECK(cells[6] == "0");
      CHECK(cells[7] == "0");
      CHECK(cells[8] == "0");
    }
  }
  CHECK(found_zero_grid);

  // Byte-stable across a repeated run.
  std::ostringstream again;
  write_timeseries(run_monte_carlo(cfg, 2), again);
  CHECK(again.str() == text);
}

TEST_CASE("sweep rows are long-format") {
  RunAggregates agg;
  agg.ee_overall = {12345.6, 10.0, 4};
  agg.total_grid_wh = {1000.0, 1.0, 4};
  std::ostringstream out;
  write_sweep_header(out);
  write_sweep_rows(out, 500.0, "dps+share", agg);
  std::string text = out.str();
  CHECK(text.find("axis_value,scenario,metric,mean,stderr\n") == 0);
  CHECK(text.find("500,dps+share,ee_overall_bits_per_j,12345.6,10") != std::string::npos);
  CHECK(text.find("500,dps+share,total_grid_wh,1000,1") != std::string::npos);
}

TEST_CASE("sinr cdf emission sorts and normalizes") {
  std::string path = "cdf_tmp.csv";
  emit_sinr_cdf({10.0, 1.0, 100.0, 1000.0}, path);
  std::ifstream in(path);
  std::string header, first, last;
  std::getline(in, header);
  CHECK(header == "sinr_db,cdf");
  std::getline(in, first);
  std::string line;
  int rows = 1;
  last = first;
  while (std::getline(in, line)) {
    last = line;
    ++rows;
  }
  CHECK(rows == 4);
  CHECK(first == "0,0.25");
  CHECK(last == "30,1");
  std::remove(path.c_str());
}

TEST_CASE("line chart produces an svg with one polyline per series") {
  std::string path = "chart_tmp.svg";
  Series a{"alpha", {0, 1, 2}, {1.0, 4.0, 2.0}};
  Series b{"beta", {0, 1, 2}, {2.0, 1.0, 5.0}};
  write_line_chart(path, {a, b}, {"demo", "x", "y"});
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string svg = buf.str();
  CHECK(svg.rfind("<svg", 0) == 0);
  size_t polylines = 0, at = 0;
  while ((at = svg.find("<polyline", at)) != std::string::npos) {
    ++polylines;
    ++at;
  }
  CHECK(polylines == 2);
  CHECK(svg.find("beta") != std::string::npos);
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_line_chart("nodir/x.svg", {a}, {"t", "x", "y"}), std::runtime_error);
}
