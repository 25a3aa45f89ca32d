#pragma once

#include <string>
#include <vector>

#include "greencell/geometry.hpp"

namespace greencell {

enum class CompMode { NonComp, Dps, Jt };

std::string to_string(CompMode mode);
CompMode comp_mode_from_string(const std::string& token);

// Log-distance channel with lognormal shadowing on top of a free-space
// reference loss, plus the LTE resource grid constants.
struct ChannelParams {
  double ref_distance_m = 100.0;
  double pathloss_exponent = 3.574;
  double shadow_sigma_db = 8.0;
  double carrier_freq_hz = 2.0e9;
  double rb_bandwidth_hz = 180.0e3;
  int rb_count = 50;
  double bs_tx_power_dbm = 43.0;  // total over all RBs

  double per_rb_tx_dbm() const;
  void validate() const;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

// Free-space loss at the reference distance, then log-distance beyond it.
// Distances below the reference are clamped to it.
double path_loss_db(const ChannelParams& params, double distance_m);

double received_power_dbm(const ChannelParams& params, double tx_dbm,
                          double distance_m, double shadow_db);

// Thermal noise floor over a bandwidth, -174 dBm/Hz density.
double noise_power_dbm(double bandwidth_hz);

// Shannon rate over one resource block.
double ue_throughput_bps(double sinr_linear, double bandwidth_hz);

struct UserEquipment {
  int ue_id = 0;
  double x = 0.0, y = 0.0;
  int home_cell = 0;
  int rb_index = 0;
  std::vector<double> shadow_db;  // one draw per site, fixed for the slot
};

struct ServingSet {
  int ue_id = 0;
  CompMode mode = CompMode::NonComp;
  int primary = -1;
  int secondary = -1;  // >= 0 only under JT
  double sinr_linear = 0.0;
};

// occupancy[site][rb]: site transmits on that RB this hour.
using RbOccupancy = std::vector<std::vector<uint8_t>>;

// Received power from every site on the UE's RB, in linear mW.
std::vector<double> received_powers_mw(const Layout& layout, const ChannelParams& params,
                                       const UserEquipment& ue);

// SINR of a serving set: servers add coherently in the numerator and are
// excluded from the interference sum; intracell bands are orthogonal so
// only other sites occupying the RB interfere.
double combined_sinr(const std::vector<int>& servers, int rb,
                     const std::vector<double>& rx_mw, const RbOccupancy& occupancy,
                     double noise_mw);

// Pick servers for a UE. NonComp keeps the geometrically closest site, DPS
// the best single-site SINR, JT the top two. Ties break on lowest site id.
ServingSet associate(CompMode mode, const Layout& layout, const UserEquipment& ue,
                     const std::vector<double>& rx_mw, const RbOccupancy& occupancy,
                     double noise_mw);

}  // namespace greencell
