#pragma once

#include <optional>
#include <vector>

#include "greencell/energy.hpp"
#include "greencell/radio.hpp"

namespace greencell {

// One simulated hour of network-level figures. Hourly energies in Wh over a
// one-hour slot are numerically equal to average power in W, so grid/solar
// are reported as W.
struct HourMetrics {
  double throughput_bps = 0.0;
  double grid_w = 0.0;
  double solar_w = 0.0;
  double savings_eq8_pct = 0.0;   // solar share of total demand
  double savings_conv_pct = 0.0;  // vs a grid-only, never-sleeping network
  bool ee_defined = false;        // false on zero-grid hours
  double ee_bits_per_j = 0.0;
  double eci_j_per_bit = 0.0;     // 0 on zero-grid hours
};

// Solar share of the hour's total demand across all sites, in percent.
double grid_savings_eq8_pct(const std::vector<EnergyLedgerRow>& hour_rows);

// Grid draw saved relative to a conventional network that never sleeps and
// has no PV, in percent.
double savings_vs_conventional_pct(double grid_used_wh, double conventional_demand_wh);

// Network sum of per-UE Shannon rates; a JT UE contributes once with its
// joint SINR.
double network_throughput_bps(const std::vector<ServingSet>& serving, double rb_bandwidth_hz);

// bits/J against on-grid power only; empty when the network runs fully on
// solar that hour (report ECI = 0 instead).
std::optional<double> energy_efficiency_bits_per_j(double throughput_bps, double grid_w);

// J/bit of on-grid energy; 0 when the grid is untouched. Throws when asked
// to rate a zero-throughput hour that still burns grid power.
double eci_j_per_bit(double grid_w, double throughput_bps);

}  // namespace greencell
