#include "greencell/metrics.hpp"

#include <stdexcept>

namespace greencell {

double grid_savings_eq8_pct(const std::vector<EnergyLedgerRow>& hour_rows) {
  double solar = 0.0, demand = 0.0;
  for (const auto& row : hour_rows) {
    solar += row.solar_used_wh;
    demand += row.demand_wh;
  }
  if (demand <= 0.0) throw std::invalid_argument("total demand is zero");
  return 100.0 * solar / demand;
}

double savings_vs_conventional_pct(double grid_used_wh, double conventional_demand_wh) {
  if (conventional_demand_wh <= 0.0)
    throw std::invalid_argument("conventional demand is zero");
  return 100.0 * (conventional_demand_wh - grid_used_wh) / conventional_demand_wh;
}

double network_throughput_bps(const std::vector<ServingSet>& serving, double rb_bandwidth_hz) {
  double total = 0.0;
  for (const auto& s : serving) total += ue_throughput_bps(s.sinr_linear, rb_bandwidth_hz);
  return total;
}

std::optional<double> energy_efficiency_bits_per_j(double throughput_bps, double grid_w) {
  if (grid_w < 0.0) throw std::invalid_argument("grid power must be >= 0");
  if (grid_w == 0.0) return std::nullopt;
  return throughput_bps / grid_w;
}

double eci_j_per_bit(double grid_w, double throughput_bps) {
  if (grid_w == 0.0) return 0.0;
  if (throughput_bps <= 0.0)
    throw std::invalid_argument("ECI undefined: grid power spent with zero throughput");
  return grid_w / throughput_bps;
}

}  // namespace greencell
