#pragma once

namespace greencell {

// Parameterized macro-BS consumption model: affine in load while the BS is
// awake, a fixed sleep draw when it has nobody to serve.
//
// Defaults match a macro site with a 43 dBm (~19.95 W) power amplifier.
struct PowerModelParams {
  double pa_efficiency = 0.306;  // eta_PA
  double baseband_w = 29.4;      // P_BB
  double rf_w = 12.9;            // P_RF
  double feeder_loss = 0.5;      // sigma_feed
  double dc_loss = 0.075;        // sigma_DC
  double mains_loss = 0.09;      // sigma_MS
  double cooling_loss = 0.1;     // sigma_cool
  int sectors = 1;               // M_sec
  double max_tx_w = 19.95;       // P_MAX, RF output at full load
  double load_slope = 4.2;       // delta_p
  double sleep_w = 54.0;         // P_sleep per sector
  double gamma = 0.15;           // carried in the parameter table but unused

  void validate() const;
};

// Power amplifier consumption at full transmit power.
double pa_power_w(const PowerModelParams& p);

// Maximum consumption of one sector (full load), all overheads applied.
double sector_max_power_w(const PowerModelParams& p);

// Electrical input power at a given load fraction in [0,1]; load 0 means
// sleep. Throws outside [0,1].
double bs_input_power_w(const PowerModelParams& p, double load);

// Awake-at-zero-traffic draw (the load->0 limit, without sleep). This is
// what a conventional always-on BS burns when idle.
double idle_awake_power_w(const PowerModelParams& p);

}  // namespace greencell
