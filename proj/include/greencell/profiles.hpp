#pragma once

#include <array>
#include <limits>
#include <string>

namespace greencell {

// A 24-slot nonnegative hourly series (solar Wh-per-kW or a normalized
// traffic shape), either built in or ingested from a 2-column CSV.
class HourlyProfile {
 public:
  HourlyProfile() { values_.fill(0.0); }
  explicit HourlyProfile(const std::array<double, 24>& values);

  // CSV rows `hour,value`; an optional header line is skipped. Requires
  // exactly 24 distinct hours 0..23 and values in [0, max_value].
  static HourlyProfile from_csv(const std::string& path,
                                double max_value = std::numeric_limits<double>::infinity());
  static HourlyProfile parse_csv(const std::string& text, const std::string& source_name,
                                 double max_value = std::numeric_limits<double>::infinity());

  // Raised-cosine daylight window (zero outside 06:00-18:00) scaled to
  // 5 kWh/day per kW of panel.
  static HourlyProfile default_solar();

  // Same shape scaled to an average Dhaka year for a 1 kWdc rooftop
  // module (4 kWh/day).
  static HourlyProfile dhaka_annual_solar();

  // Residential daily traffic shape, normalized to peak 1 in the evening.
  static HourlyProfile default_traffic();

  double at(int hour_of_day) const;
  const std::array<double, 24>& values() const { return values_; }
  double total() const;

  bool operator==(const HourlyProfile&) const = default;

 private:
  std::array<double, 24> values_;
};

}  // namespace greencell
