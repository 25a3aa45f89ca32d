#include "greencell/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace greencell {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double to_double(const std::string& value, const std::string& where) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (trim(value.substr(pos)).empty()) return v;
  } catch (...) {
  }
  throw ConfigError(where + ": expected a number, got '" + value + "'");
}

int to_int(const std::string& value, const std::string& where) {
  double v = to_double(value, where);
  int i = static_cast<int>(v);
  if (v != i) throw ConfigError(where + ": expected an integer, got '" + value + "'");
  return i;
}

uint64_t to_u64(const std::string& value, const std::string& where) {
  uint64_t v = 0;
  std::string t = trim(value);
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size())
    throw ConfigError(where + ": expected an unsigned integer, got '" + value + "'");
  return v;
}

bool to_bool(const std::string& value, const std::string& where) {
  std::string v = lower(trim(value));
  if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(where + ": expected on/off, got '" + value + "'");
}

HourlyProfile inline_profile(const std::string& value, const std::string& where,
                             double max_value) {
  std::array<double, 24> v{};
  std::stringstream ss(value);
  std::string item;
  int idx = 0;
  while (std::getline(ss, item, ',')) {
    if (idx >= 24) throw ConfigError(where + ": inline profile needs exactly 24 values");
    double x = to_double(item, where);
    if (x < 0.0 || x > max_value) throw ConfigError(where + ": profile value out of range");
    v[idx++] = x;
  }
  if (idx != 24) throw ConfigError(where + ": inline profile needs exactly 24 values");
  return HourlyProfile(v);
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

ScenarioConfig parse_config(const std::string& text, const std::string& source_name) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  using Setter = std::function<void(const std::string& value, const std::string& where)>;
  const std::map<std::string, Setter> setters = {
      {"cell_radius_m", [&](auto& v, auto& w) { cfg.cell_radius_m = to_double(v, w); }},
      {"tiers", [&](auto& v, auto& w) { cfg.tiers = to_int(v, w); }},
      {"ref_distance_m", [&](auto& v, auto& w) { cfg.channel.ref_distance_m = to_double(v, w); }},
      {"pathloss_exponent",
       [&](auto& v, auto& w) { cfg.channel.pathloss_exponent = to_double(v, w); }},
      {"shadow_sigma_db", [&](auto& v, auto& w) { cfg.channel.shadow_sigma_db = to_double(v, w); }},
      {"carrier_freq_hz", [&](auto& v, auto& w) { cfg.channel.carrier_freq_hz = to_double(v, w); }},
      {"rb_bandwidth_hz", [&](auto& v, auto& w) { cfg.channel.rb_bandwidth_hz = to_double(v, w); }},
      {"rb_count", [&](auto& v, auto& w) { cfg.channel.rb_count = to_int(v, w); }},
      {"bs_tx_power_dbm", [&](auto& v, auto& w) { cfg.channel.bs_tx_power_dbm = to_double(v, w); }},
      {"eta_pa", [&](auto& v, auto& w) { cfg.power.pa_efficiency = to_double(v, w); }},
      {"p_bb_w", [&](auto& v, auto& w) { cfg.power.baseband_w = to_double(v, w); }},
      {"p_rf_w", [&](auto& v, auto& w) { cfg.power.rf_w = to_double(v, w); }},
      {"sigma_feed", [&](auto& v, auto& w) { cfg.power.feeder_loss = to_double(v, w); }},
      {"sigma_dc", [&](auto& v, auto& w) { cfg.power.dc_loss = to_double(v, w); }},
      {"sigma_ms", [&](auto& v, auto& w) { cfg.power.mains_loss = to_double(v, w); }},
      {"sigma_cool", [&](auto& v, auto& w) { cfg.power.cooling_loss = to_double(v, w); }},
      {"m_sec", [&](auto& v, auto& w) { cfg.power.sectors = to_int(v, w); }},
      {"p_max_w", [&](auto& v, auto& w) { cfg.power.max_tx_w = to_double(v, w); }},
      {"delta_p", [&](auto& v, auto& w) { cfg.power.load_slope = to_double(v, w); }},
      {"p_sleep_w", [&](auto& v, auto& w) { cfg.power.sleep_w = to_double(v, w); }},
      {"gamma", [&](auto& v, auto& w) { cfg.power.gamma = to_double(v, w); }},
      {"panel_capacity_w",
       [&](auto& v, auto& w) { cfg.solar.panel_capacity_w = to_double(v, w); }},
      {"solar_spatial_mode",
       [&](auto& v, auto& w) {
         try {
           cfg.solar.spatial_mode = solar_spatial_mode_from_string(lower(trim(v)));
         } catch (const std::exception& e) {
           throw ConfigError(w + ": " + e.what());
         }
       }},
      {"c_s_w", [&](auto& v, auto& w) { cfg.solar.random_scale_w = to_double(v, w); }},
      {"solar_profile_file",
       [&](auto& v, auto& w) {
         try {
           cfg.solar.profile = HourlyProfile::from_csv(trim(v));
         } catch (const std::exception& e) {
           throw ConfigError(w + ": " + e.what());
         }
       }},
      {"solar_profile",
       [&](auto& v, auto& w) {
         cfg.solar.profile = inline_profile(v, w, std::numeric_limits<double>::infinity());
       }},
      {"storage_capacity_wh",
       [&](auto& v, auto& w) { cfg.storage_capacity_wh = to_double(v, w); }},
      {"storage_factor", [&](auto& v, auto& w) { cfg.storage_factor = to_double(v, w); }},
      {"traffic_profile_file",
       [&](auto& v, auto& w) {
         try {
           cfg.traffic = HourlyProfile::from_csv(trim(v), 1.0);
         } catch (const std::exception& e) {
           throw ConfigError(w + ": " + e.what());
         }
       }},
      {"traffic_profile",
       [&](auto& v, auto& w) { cfg.traffic = inline_profile(v, w, 1.0); }},
      {"spatial_load_mode",
       [&](auto& v, auto& w) {
         try {
           cfg.spatial_load_mode = spatial_load_mode_from_string(lower(trim(v)));
         } catch (const std::exception& e) {
           throw ConfigError(w + ": " + e.what());
         }
       }},
      {"redraw_load_hourly",
       [&](auto& v, auto& w) { cfg.redraw_load_hourly = to_bool(v, w); }},
      {"comp_mode",
       [&](auto& v, auto& w) {
         try {
           cfg.comp_mode = comp_mode_from_string(lower(trim(v)));
         } catch (const std::exception& e) {
           throw ConfigError(w + ": " + e.what());
         }
       }},
      {"sharing", [&](auto& v, auto& w) { cfg.sharing_enabled = to_bool(v, w); }},
      {"alpha", [&](auto& v, auto& w) { cfg.alpha = to_double(v, w); }},
      {"loss_compensated_transfers",
       [&](auto& v, auto& w) { cfg.loss_compensated_transfers = to_bool(v, w); }},
      {"horizon_days", [&](auto& v, auto& w) { cfg.horizon_days = to_int(v, w); }},
      {"iterations", [&](auto& v, auto& w) { cfg.iterations = to_int(v, w); }},
      {"master_seed", [&](auto& v, auto& w) { cfg.master_seed = to_u64(v, w); }},
      {"discard_day1", [&](auto& v, auto& w) { cfg.discard_day1 = to_bool(v, w); }},
      {"cdf_center_cell_only",
       [&](auto& v, auto& w) { cfg.cdf_center_cell_only = to_bool(v, w); }},
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string content = trim(line);
    if (content.empty()) continue;
    auto eq = content.find('=');
    std::string where = source_name + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    std::string key = lower(trim(content.substr(0, eq)));
    std::string value = trim(content.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(where + ": unknown key '" + key + "'");
    it->second(value, where + " (" + key + ")");
  }

  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw ConfigError(source_name + ": " + e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string config_to_string(const ScenarioConfig& cfg) {
  std::ostringstream os;
  auto num = [&](const char* key, double v) { os << key << " = " << format_number(v) << "\n"; };
  auto onoff = [&](const char* key, bool v) { os << key << " = " << (v ? "on" : "off") << "\n"; };
  os << "# greencell scenario\n";
  num("cell_radius_m", cfg.cell_radius_m);
  os << "tiers = " << cfg.tiers << "\n";
  num("ref_distance_m", cfg.channel.ref_distance_m);
  num("pathloss_exponent", cfg.channel.pathloss_exponent);
  num("shadow_sigma_db", cfg.channel.shadow_sigma_db);
  num("carrier_freq_hz", cfg.channel.carrier_freq_hz);
  num("rb_bandwidth_hz", cfg.channel.rb_bandwidth_hz);
  os << "rb_count = " << cfg.channel.rb_count << "\n";
  num("bs_tx_power_dbm", cfg.channel.bs_tx_power_dbm);
  num("eta_pa", cfg.power.pa_efficiency);
  num("p_bb_w", cfg.power.baseband_w);
  num("p_rf_w", cfg.power.rf_w);
  num("sigma_feed", cfg.power.feeder_loss);
  num("sigma_dc", cfg.power.dc_loss);
  num("sigma_ms", cfg.power.mains_loss);
  num("sigma_cool", cfg.power.cooling_loss);
  os << "m_sec = " << cfg.power.sectors << "\n";
  num("p_max_w", cfg.power.max_tx_w);
  num("delta_p", cfg.power.load_slope);
  num("p_sleep_w", cfg.power.sleep_w);
  num("gamma", cfg.power.gamma);
  num("panel_capacity_w", cfg.solar.panel_capacity_w);
  os << "solar_spatial_mode = " << to_string(cfg.solar.spatial_mode) << "\n";
  num("c_s_w", cfg.solar.random_scale_w);
  os << "solar_profile = ";
  for (int h = 0; h < 24; ++h)
    os << (h ? "," : "") << format_number(cfg.solar.profile.at(h));
  os << "\n";
  num("storage_capacity_wh", cfg.storage_capacity_wh);
  num("storage_factor", cfg.storage_factor);
  os << "traffic_profile = ";
  for (int h = 0; h < 24; ++h) os << (h ? "," : "") << format_number(cfg.traffic.at(h));
  os << "\n";
  os << "spatial_load_mode = " << to_string(cfg.spatial_load_mode) << "\n";
  onoff("redraw_load_hourly", cfg.redraw_load_hourly);
  os << "comp_mode = " << to_string(cfg.comp_mode) << "\n";
  onoff("sharing", cfg.sharing_enabled);
  num("alpha", cfg.alpha);
  onoff("loss_compensated_transfers", cfg.loss_compensated_transfers);
  os << "horizon_days = " << cfg.horizon_days << "\n";
  os << "iterations = " << cfg.iterations << "\n";
  os << "master_seed = " << cfg.master_seed << "\n";
  onoff("discard_day1", cfg.discard_day1);
  onoff("cdf_center_cell_only", cfg.cdf_center_cell_only);
  return os.str();
}

void save_config(const ScenarioConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file '" + path + "'");
  out << config_to_string(config);
  if (!out) throw ConfigError("failed writing config file '" + path + "'");
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::StorageCapacity: return "storage_capacity";
    case SweepAxis::StorageFactor: return "storage_factor";
    case SweepAxis::LineLossPct: return "line_loss_pct";
    case SweepAxis::SolarCapacity: return "solar_capacity";
  }
  return "?";
}

SweepSpec parse_sweep(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos)
    throw ConfigError("sweep must look like AXIS=v1,v2,... got '" + text + "'");
  std::string axis = lower(trim(text.substr(0, eq)));
  SweepSpec spec;
  if (axis == "storage_capacity")
    spec.axis = SweepAxis::StorageCapacity;
  else if (axis == "storage_factor")
    spec.axis = SweepAxis::StorageFactor;
  else if (axis == "line_loss_pct")
    spec.axis = SweepAxis::LineLossPct;
  else if (axis == "solar_capacity")
    spec.axis = SweepAxis::SolarCapacity;
  else
    throw ConfigError("unknown sweep axis '" + axis + "'");

  std::stringstream ss(text.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ','))
    spec.values.push_back(to_double(item, "sweep value"));
  if (spec.values.empty()) throw ConfigError("sweep needs at least one value");
  for (size_t i = 1; i < spec.values.size(); ++i)
    if (spec.values[i] <= spec.values[i - 1])
      throw ConfigError("sweep values must be strictly increasing");
  for (double v : spec.values) {
    if (spec.axis == SweepAxis::LineLossPct && (v < 0.0 || v > 100.0))
      throw ConfigError("line loss values must be in [0,100]");
    if (spec.axis == SweepAxis::StorageFactor && (v < 0.0 || v > 1.0))
      throw ConfigError("storage factor values must be in [0,1]");
    if ((spec.axis == SweepAxis::StorageCapacity || spec.axis == SweepAxis::SolarCapacity) &&
        v < 0.0)
      throw ConfigError("capacity values must be >= 0");
  }
  return spec;
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepAxis axis, double value) {
  ScenarioConfig cfg = base;
  switch (axis) {
    case SweepAxis::StorageCapacity:
      cfg.storage_capacity_wh = value;
      break;
    case SweepAxis::StorageFactor:
      cfg.storage_factor = value;
      break;
    case SweepAxis::LineLossPct:
      cfg.alpha = 1.0 - value / 100.0;
      break;
    case SweepAxis::SolarCapacity: {
      // Keep storage proportional to the panel so extra generation is not
      // thrown away, and move the spatial-diversity scale with it.
      double ratio = base.solar.panel_capacity_w > 0.0 ? value / base.solar.panel_capacity_w : 1.0;
      cfg.solar.panel_capacity_w = value;
      cfg.solar.random_scale_w = value;
      cfg.storage_capacity_wh = base.storage_capacity_wh * ratio;
      break;
    }
  }
  return cfg;
}

std::string ScenarioSelector::label(const ScenarioConfig& base) const {
  bool share = override_sharing ? sharing : base.sharing_enabled;
  return to_string(mode) + (share ? "+share" : "");
}

ScenarioConfig ScenarioSelector::apply(const ScenarioConfig& base) const {
  ScenarioConfig cfg = base;
  cfg.comp_mode = mode;
  if (override_sharing) cfg.sharing_enabled = sharing;
  return cfg;
}

ScenarioSelector parse_scenario(const std::string& token) {
  std::string t = lower(trim(token));
  ScenarioSelector sel;
  auto plus = t.find("+share");
  auto minus = t.find("-share");
  if (plus != std::string::npos) {
    sel.override_sharing = true;
    sel.sharing = true;
    t = t.substr(0, plus);
  } else if (minus != std::string::npos) {
    sel.override_sharing = true;
    sel.sharing = false;
    t = t.substr(0, minus);
  }
  sel.mode = comp_mode_from_string(trim(t));
  return sel;
}

std::vector<ScenarioSelector> parse_scenario_list(const std::string& csv) {
  std::vector<ScenarioSelector> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(parse_scenario(item));
  if (out.empty()) throw ConfigError("scenario list is empty");
  return out;
}

}  // namespace greencell
