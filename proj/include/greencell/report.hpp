#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "greencell/engine.hpp"

namespace greencell {

// All floating CSV fields use 6 significant digits so outputs are byte
// stable across runs.
std::string format_g6(double v);

// Per-hour time series of a run, one row per simulated hour. The ee column
// averages the iterations where EE was defined; ee_defined counts them and
// is 0 on hours where the whole network ran off solar in every iteration.
void emit_timeseries(const RunResult& result, const std::string& path);
void write_timeseries(const RunResult& result, std::ostream& out);

// Long-format sweep rows: axis_value,scenario,metric,mean,stderr.
void write_sweep_header(std::ostream& out);
void write_sweep_rows(std::ostream& out, double axis_value, const std::string& scenario,
                      const RunAggregates& agg);

// Empirical CDF of SINR samples (dB), rows `sinr_db,cdf`.
void emit_sinr_cdf(std::vector<double> sinr_linear, const std::string& path);

}  // namespace greencell
