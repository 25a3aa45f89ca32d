#include "greencell/radio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace greencell {

namespace {
constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr double kLn10Over10 = std::numbers::ln10 / 10.0;
}  // namespace

std::string to_string(CompMode mode) {
  switch (mode) {
    case CompMode::NonComp: return "noncomp";
    case CompMode::Dps: return "dps";
    case CompMode::Jt: return "jt";
  }
  return "?";
}

CompMode comp_mode_from_string(const std::string& token) {
  if (token == "noncomp" || token == "none" || token == "NONCOMP") return CompMode::NonComp;
  if (token == "dps" || token == "DPS") return CompMode::Dps;
  if (token == "jt" || token == "JT") return CompMode::Jt;
  throw std::invalid_argument("unknown comp mode '" + token + "'");
}

double ChannelParams::per_rb_tx_dbm() const {
  return bs_tx_power_dbm - 10.0 * std::log10(static_cast<double>(rb_count));
}

void ChannelParams::validate() const {
  if (ref_distance_m <= 0.0) throw std::invalid_argument("ref_distance_m must be positive");
  if (shadow_sigma_db < 0.0) throw std::invalid_argument("shadow_sigma_db must be >= 0");
  if (carrier_freq_hz <= 0.0) throw std::invalid_argument("carrier_freq_hz must be positive");
  if (rb_bandwidth_hz <= 0.0) throw std::invalid_argument("rb_bandwidth_hz must be positive");
  if (rb_count < 1) throw std::invalid_argument("rb_count must be >= 1");
}

double dbm_to_mw(double dbm) { return std::exp(dbm * kLn10Over10); }

double mw_to_dbm(double mw) {
  if (mw <= 0.0) throw std::invalid_argument("power must be positive");
  return 10.0 * std::log10(mw);
}

double path_loss_db(const ChannelParams& params, double distance_m) {
  if (distance_m <= 0.0) throw std::invalid_argument("distance must be positive");
  const double d0 = params.ref_distance_m;
  const double d = std::max(distance_m, d0);
  const double ref_loss =
      20.0 * std::log10(4.0 * std::numbers::pi * d0 * params.carrier_freq_hz / kSpeedOfLight);
  return ref_loss + 10.0 * params.pathloss_exponent * std::log10(d / d0);
}

double received_power_dbm(const ChannelParams& params, double tx_dbm,
                          double distance_m, double shadow_db) {
  return tx_dbm - path_loss_db(params, distance_m) + shadow_db;
}

double noise_power_dbm(double bandwidth_hz) {
  if (bandwidth_hz <= 0.0) throw std::invalid_argument("bandwidth must be positive");
  return -174.0 + 10.0 * std::log10(bandwidth_hz);
}

double ue_throughput_bps(double sinr_linear, double bandwidth_hz) {
  if (sinr_linear < 0.0) throw std::invalid_argument("sinr must be >= 0");
  return bandwidth_hz * std::log2(1.0 + sinr_linear);
}

std::vector<double> received_powers_mw(const Layout& layout, const ChannelParams& params,
                                       const UserEquipment& ue) {
  const int n = layout.site_count();
  if (static_cast<int>(ue.shadow_db.size()) != n)
    throw std::invalid_argument("shadow draws must cover every site");
  const double tx = params.per_rb_tx_dbm();
  const double d0 = params.ref_distance_m;
  const double ref_loss =
      20.0 * std::log10(4.0 * std::numbers::pi * d0 * params.carrier_freq_hz / kSpeedOfLight);
  std::vector<double> out(n);
  for (int s = 0; s < n; ++s) {
    const Site& site = layout.sites()[s];
    double dx = ue.x - site.x, dy = ue.y - site.y;
    double d2 = dx * dx + dy * dy;
    double d02 = d0 * d0;
    // 5*n*log10(d^2/d0^2) == 10*n*log10(d/d0); saves the sqrt per link.
    double pl = ref_loss;
    if (d2 > d02) pl += 5.0 * params.pathloss_exponent * std::log10(d2 / d02);
    out[s] = dbm_to_mw(tx - pl + ue.shadow_db[s]);
  }
  return out;
}

double combined_sinr(const std::vector<int>& servers, int rb,
                     const std::vector<double>& rx_mw, const RbOccupancy& occupancy,
                     double noise_mw) {
  if (servers.empty()) throw std::invalid_argument("server set must not be empty");
  double signal = 0.0;
  for (int s : servers) signal += rx_mw.at(s);
  double interference = 0.0;
  for (int s = 0; s < static_cast<int>(rx_mw.size()); ++s) {
    if (!occupancy[s][rb]) continue;
    if (std::find(servers.begin(), servers.end(), s) != servers.end()) continue;
    interference += rx_mw[s];
  }
  return signal / (interference + noise_mw);
}

ServingSet associate(CompMode mode, const Layout& layout, const UserEquipment& ue,
                     const std::vector<double>& rx_mw, const RbOccupancy& occupancy,
                     double noise_mw) {
  const int n = layout.site_count();
  ServingSet out;
  out.ue_id = ue.ue_id;
  out.mode = mode;

  // The UE's RB inside its home cell is the UE's own allocation; no other
  // home-cell user sits on it, so the home site transmits on that RB only
  // while it actually serves this UE. It is therefore left out of the
  // interference total no matter which serving set is evaluated.
  //
  // One arithmetic route for every mode, so that serving sets that coincide
  // produce bit-identical SINRs and the NonComp <= DPS <= JT ordering is
  // exact even in floating point.
  auto occupies = [&](int s) {
    return s != ue.home_cell && occupancy[s][ue.rb_index] != 0;
  };
  double occupied_total = 0.0;
  for (int s = 0; s < n; ++s)
    if (occupies(s)) occupied_total += rx_mw[s];
  auto single_sinr = [&](int s) {
    double interference = occupied_total - (occupies(s) ? rx_mw[s] : 0.0);
    return rx_mw[s] / (interference + noise_mw);
  };

  if (mode == CompMode::NonComp) {
    int closest = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n; ++s) {
      const Site& site = layout.sites()[s];
      double d = std::hypot(ue.x - site.x, ue.y - site.y);
      if (d < best_d) {
        best_d = d;
        closest = s;
      }
    }
    out.primary = closest;
    out.sinr_linear = single_sinr(closest);
    return out;
  }

  int best = -1, second = -1;
  double best_sinr = -1.0, second_sinr = -1.0;
  for (int s = 0; s < n; ++s) {
    double sinr = single_sinr(s);
    if (sinr > best_sinr) {
      second = best;
      second_sinr = best_sinr;
      best = s;
      best_sinr = sinr;
    } else if (sinr > second_sinr) {
      second = s;
      second_sinr = sinr;
    }
  }

  if (mode == CompMode::Dps) {
    out.primary = best;
    out.sinr_linear = best_sinr;
    return out;
  }

  out.primary = std::min(best, second);
  out.secondary = std::max(best, second);
  double signal = rx_mw[out.primary] + rx_mw[out.secondary];
  double interference = occupied_total - (occupies(out.primary) ? rx_mw[out.primary] : 0.0) -
                        (occupies(out.secondary) ? rx_mw[out.secondary] : 0.0);
  out.sinr_linear = signal / (interference + noise_mw);
  return out;
}

}  // namespace greencell
