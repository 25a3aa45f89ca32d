#include "greencell/power.hpp"

#include <stdexcept>

namespace greencell {

void PowerModelParams::validate() const {
  if (pa_efficiency <= 0.0 || pa_efficiency > 1.0)
    throw std::invalid_argument("pa_efficiency must be in (0,1]");
  for (double loss : {feeder_loss, dc_loss, mains_loss, cooling_loss})
    if (loss < 0.0 || loss >= 1.0)
      throw std::invalid_argument("loss factors must be in [0,1)");
  if (baseband_w < 0.0 || rf_w < 0.0) throw std::invalid_argument("component powers must be >= 0");
  if (sectors < 1) throw std::invalid_argument("sectors must be >= 1");
  if (max_tx_w <= 0.0) throw std::invalid_argument("max_tx_w must be positive");
  if (load_slope < 0.0) throw std::invalid_argument("load_slope must be >= 0");
  if (sleep_w < 0.0) throw std::invalid_argument("sleep_w must be >= 0");
  if (sleep_w >= sector_max_power_w(*this))
    throw std::invalid_argument("sleep_w must be below the full-load sector power");
}

double pa_power_w(const PowerModelParams& p) {
  double denom = p.pa_efficiency * (1.0 - p.feeder_loss);
  if (denom <= 0.0) throw std::invalid_argument("pa efficiency times feeder pass-through is zero");
  return p.max_tx_w / denom;
}

double sector_max_power_w(const PowerModelParams& p) {
  double denom = (1.0 - p.dc_loss) * (1.0 - p.mains_loss) * (1.0 - p.cooling_loss);
  if (denom <= 0.0) throw std::invalid_argument("overhead loss factors saturate at 1");
  return (p.baseband_w + p.rf_w + pa_power_w(p)) / denom;
}

double bs_input_power_w(const PowerModelParams& p, double load) {
  if (load < 0.0 || load > 1.0) throw std::invalid_argument("load must be in [0,1]");
  if (load == 0.0) return p.sectors * p.sleep_w;
  return p.sectors * (sector_max_power_w(p) + p.load_slope * p.max_tx_w * (load - 1.0));
}

double idle_awake_power_w(const PowerModelParams& p) {
  return p.sectors * (sector_max_power_w(p) - p.load_slope * p.max_tx_w);
}

}  // namespace greencell
