#include "greencell/profiles.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace greencell {

namespace {

bool parse_double(const std::string& s, double& out) {
  try {
    size_t pos = 0;
    out = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

HourlyProfile::HourlyProfile(const std::array<double, 24>& values) : values_(values) {
  for (double v : values_)
    if (!(v >= 0.0)) throw std::invalid_argument("profile entries must be >= 0");
}

double HourlyProfile::at(int hour_of_day) const {
  if (hour_of_day < 0 || hour_of_day > 23)
    throw std::out_of_range("hour of day must be in 0..23");
  return values_[hour_of_day];
}

double HourlyProfile::total() const {
  double t = 0.0;
  for (double v : values_) t += v;
  return t;
}

HourlyProfile HourlyProfile::from_csv(const std::string& path, double max_value) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), path, max_value);
}

HourlyProfile HourlyProfile::parse_csv(const std::string& text, const std::string& source_name,
                                       double max_value) {
  std::array<double, 24> values{};
  std::array<bool, 24> seen{};
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error(source_name + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto comma = trimmed.find(',');
    if (comma == std::string::npos) fail("expected 'hour,value'");
    double hour_raw = 0.0, value = 0.0;
    if (!parse_double(trimmed.substr(0, comma), hour_raw)) {
      if (lineno == 1) continue;  // header row
      fail("hour is not a number");
    }
    if (!parse_double(trimmed.substr(comma + 1), value)) {
      if (lineno == 1) continue;
      fail("value is not a number");
    }
    int hour = static_cast<int>(hour_raw);
    if (hour_raw != hour || hour < 0 || hour > 23) fail("hour must be an integer in 0..23");
    if (seen[hour]) fail("duplicate hour " + std::to_string(hour));
    if (!(value >= 0.0)) fail("value must be >= 0");
    if (value > max_value) fail("value exceeds allowed maximum");
    seen[hour] = true;
    values[hour] = value;
  }
  for (int h = 0; h < 24; ++h)
    if (!seen[h])
      throw std::runtime_error(source_name + ": profile must cover all 24 hours (missing hour " +
                               std::to_string(h) + ")");
  return HourlyProfile(values);
}

namespace {

// Half-cosine bump peaking at noon; integer-hour samples sum to 6, so the
// daily total scales exactly.
HourlyProfile cosine_daylight(double daily_total_wh) {
  std::array<double, 24> v{};
  for (int h = 7; h <= 17; ++h)
    v[h] = (daily_total_wh / 6.0) * 0.5 * (1.0 + std::cos(std::numbers::pi * (h - 12) / 6.0));
  return HourlyProfile(v);
}

}  // namespace

HourlyProfile HourlyProfile::default_solar() { return cosine_daylight(5000.0); }

HourlyProfile HourlyProfile::dhaka_annual_solar() { return cosine_daylight(4000.0); }

HourlyProfile HourlyProfile::default_traffic() {
  return HourlyProfile(std::array<double, 24>{
      0.22, 0.15, 0.12, 0.10, 0.10, 0.12, 0.18, 0.30, 0.45, 0.55, 0.60, 0.65,
      0.70, 0.70, 0.72, 0.75, 0.80, 0.85, 0.93, 1.00, 1.00, 0.95, 0.70, 0.40});
}

}  // namespace greencell
