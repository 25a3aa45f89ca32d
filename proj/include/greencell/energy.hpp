#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "greencell/geometry.hpp"
#include "greencell/profiles.hpp"

namespace greencell {

enum class SolarSpatialMode { Equal, UniformRandom };

std::string to_string(SolarSpatialMode mode);
SolarSpatialMode solar_spatial_mode_from_string(const std::string& token);

struct SolarConfig {
  double panel_capacity_w = 1000.0;                 // nameplate
  HourlyProfile profile = HourlyProfile::default_solar();  // Wh per kW of panel
  SolarSpatialMode spatial_mode = SolarSpatialMode::Equal;
  double random_scale_w = 1000.0;  // c_s, scales the per-site uniform factor
};

// Hourly PV inflow for one site. site_factor is 1 under Equal and the
// site's U[0,1] draw under UniformRandom.
double generation_wh(const SolarConfig& solar, int hour_of_day, double site_factor);

struct StorageState {
  double level_wh = 0.0;
  double capacity_wh = 2000.0;
  double retention = 0.96;  // fraction kept per hour
};

struct StorageStep {
  StorageState state;
  double wastage_wh = 0.0;
};

// One hour of the battery recurrence: leak, add inflow, draw demand, then
// cap. Drawing more than retention*level + inflow is an error; the grid
// covers deficits upstream, never the battery.
StorageStep step_storage(const StorageState& state, double inflow_wh, double drawn_wh);

// Energy a site can give away this hour without touching its own demand.
double shareable_surplus_wh(double available_wh, double demand_wh);

// Delivered fraction per inter-site line; line loss is 1 - alpha.
class AlphaMap {
 public:
  explicit AlphaMap(double uniform = 1.0);
  void set_link(int a, int b, double alpha);
  double at(int a, int b) const;

 private:
  static void check(double alpha);
  double uniform_;
  std::map<std::pair<int, int>, double> links_;
};

struct EnergyLedgerRow {
  int site_id = 0;
  int hour = 0;
  double generation_wh = 0.0;
  double demand_wh = 0.0;
  double solar_used_wh = 0.0;  // own storage drawn plus delivered transfers
  double grid_used_wh = 0.0;
  double shared_out_wh = 0.0;
  double shared_in_delivered_wh = 0.0;
  double line_loss_wh = 0.0;
  double wastage_wh = 0.0;
};

struct HourSettlement {
  std::vector<EnergyLedgerRow> rows;  // one per site, by id
};

// Settles one hour of supply for every site: per-site storage draw, the
// first-tier sharing pass for sites in deficit, grid fallback, then the
// end-of-hour storage update. Storage levels are advanced in place.
//
// Deficit sites are processed in ascending id; donors are debited as soon
// as they send, so later requesters see the reduced stores. A donor offers
// at most its surplus after reserving its own demand. Transfers sized by
// remaining need are not grossed up for line loss unless
// loss_compensated_transfers is set.
HourSettlement settle_hour(const Layout& layout, std::vector<StorageState>& storages,
                           const std::vector<double>& generation_wh,
                           const std::vector<double>& demand_wh, const AlphaMap& alpha,
                           bool sharing_enabled, bool loss_compensated_transfers, int hour);

}  // namespace greencell
