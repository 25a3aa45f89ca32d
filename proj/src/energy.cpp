#include "greencell/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace greencell {

std::string to_string(SolarSpatialMode mode) {
  return mode == SolarSpatialMode::Equal ? "equal" : "uniform_random";
}

SolarSpatialMode solar_spatial_mode_from_string(const std::string& token) {
  if (token == "equal" || token == "EQUAL") return SolarSpatialMode::Equal;
  if (token == "uniform_random" || token == "UNIFORM_RANDOM") return SolarSpatialMode::UniformRandom;
  throw std::invalid_argument("unknown solar spatial mode '" + token + "'");
}

double generation_wh(const SolarConfig& solar, int hour_of_day, double site_factor) {
  double per_kw = solar.profile.at(hour_of_day);
  double scale_w =
      solar.spatial_mode == SolarSpatialMode::Equal ? solar.panel_capacity_w : solar.random_scale_w;
  return per_kw * (scale_w / 1000.0) * site_factor;
}

StorageStep step_storage(const StorageState& state, double inflow_wh, double drawn_wh) {
  if (inflow_wh < 0.0) throw std::invalid_argument("inflow must be >= 0");
  if (drawn_wh < 0.0) throw std::invalid_argument("draw must be >= 0");
  double available = state.retention * state.level_wh + inflow_wh;
  if (drawn_wh > available + 1e-9)
    throw std::invalid_argument("storage overdraw: draw exceeds retained level plus inflow");
  double net = available - drawn_wh;
  StorageStep out;
  out.state = state;
  out.state.level_wh = std::clamp(net, 0.0, state.capacity_wh);
  out.wastage_wh = std::max(0.0, net - state.capacity_wh);
  return out;
}

double shareable_surplus_wh(double available_wh, double demand_wh) {
  return std::max(0.0, available_wh - demand_wh);
}

AlphaMap::AlphaMap(double uniform) : uniform_(uniform) { check(uniform); }

void AlphaMap::check(double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("alpha must be in [0,1]");
}

void AlphaMap::set_link(int a, int b, double alpha) {
  check(alpha);
  links_[{std::min(a, b), std::max(a, b)}] = alpha;
}

double AlphaMap::at(int a, int b) const {
  auto it = links_.find({std::min(a, b), std::max(a, b)});
  return it == links_.end() ? uniform_ : it->second;
}

HourSettlement settle_hour(const Layout& layout, std::vector<StorageState>& storages,
                           const std::vector<double>& generation,
                           const std::vector<double>& demand, const AlphaMap& alpha,
                           bool sharing_enabled, bool loss_compensated_transfers, int hour) {
  const int n = layout.site_count();
  if (static_cast<int>(storages.size()) != n || static_cast<int>(generation.size()) != n ||
      static_cast<int>(demand.size()) != n)
    throw std::invalid_argument("settle_hour: per-site vectors must match the layout");
  for (int i = 0; i < n; ++i) {
    if (generation[i] < 0.0) throw std::invalid_argument("generation must be >= 0");
    if (demand[i] < 0.0) throw std::invalid_argument("demand must be >= 0");
  }

  // Pre-demand availability this hour. The capacity cap is applied at the
  // end of the hour, after demand and transfers have drained their share.
  std::vector<double> available(n), sent(n, 0.0), delivered_in(n, 0.0), loss_in(n, 0.0);
  for (int i = 0; i < n; ++i)
    available[i] = storages[i].retention * storages[i].level_wh + generation[i];

  auto current_store = [&](int m) { return available[m] - sent[m]; };
  auto current_surplus = [&](int m) {
    return shareable_surplus_wh(current_store(m), demand[m]);
  };

  if (sharing_enabled) {
    for (int i = 0; i < n; ++i) {
      double need = demand[i] - available[i];
      if (need <= 0.0) continue;

      // Donors ranked by what they currently hold, richest first.
      std::vector<int> donors = layout.first_tier_neighbors(i);
      std::sort(donors.begin(), donors.end(), [&](int a, int b) {
        double sa = current_store(a), sb = current_store(b);
        if (sa != sb) return sa > sb;
        return a < b;
      });

      double delivered = 0.0;
      for (int m : donors) {
        double remaining = need - delivered;
        if (remaining <= 0.0) break;
        double surplus = current_surplus(m);
        if (surplus <= 0.0) continue;
        double a = alpha.at(i, m);
        double request = remaining;
        if (loss_compensated_transfers && a > 0.0) request = remaining / a;
        double eps = std::min(surplus, request);
        sent[m] += eps;
        delivered += a * eps;
        delivered_in[i] += a * eps;
        loss_in[i] += (1.0 - a) * eps;
      }
    }
  }

  HourSettlement out;
  out.rows.resize(n);
  for (int i = 0; i < n; ++i) {
    EnergyLedgerRow& row = out.rows[i];
    row.site_id = i;
    row.hour = hour;
    row.generation_wh = generation[i];
    row.demand_wh = demand[i];
    double own_drain = std::min(available[i], demand[i]);
    row.solar_used_wh = std::min(demand[i], own_drain + delivered_in[i]);
    row.grid_used_wh = std::max(0.0, demand[i] - row.solar_used_wh);
    if (row.grid_used_wh <= 1e-9) {
      // Rounding residue from summed transfers; an exactly covered hour
      // must report an exact zero.
      row.solar_used_wh = demand[i];
      row.grid_used_wh = 0.0;
    }
    row.shared_out_wh = sent[i];
    row.shared_in_delivered_wh = delivered_in[i];
    row.line_loss_wh = loss_in[i];

    double end_raw = available[i] - own_drain - sent[i];
    row.wastage_wh = std::max(0.0, end_raw - storages[i].capacity_wh);
    storages[i].level_wh = std::clamp(end_raw, 0.0, storages[i].capacity_wh);
  }
  return out;
}

}  // namespace greencell
