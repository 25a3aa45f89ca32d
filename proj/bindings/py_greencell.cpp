#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greencell/config.hpp"
#include "greencell/engine.hpp"
#include "greencell/report.hpp"

namespace py = pybind11;
using namespace greencell;

namespace {

py::dict hour_to_dict(const HourAverages& a) {
  py::dict d;
  d["throughput_bps"] = a.throughput_bps.mean;
  d["throughput_bps_stderr"] = a.throughput_bps.stderr_mean;
  d["grid_w"] = a.grid_w.mean;
  d["grid_w_stderr"] = a.grid_w.stderr_mean;
  d["solar_w"] = a.solar_w.mean;
  d["savings_eq8_pct"] = a.savings_eq8_pct.mean;
  d["savings_conv_pct"] = a.savings_conv_pct.mean;
  d["ee_bits_per_j"] = a.ee_defined > 0 ? a.ee.mean : 0.0;
  d["ee_defined"] = a.ee_defined;
  d["eci_j_per_bit"] = a.eci.mean;
  return d;
}

py::dict aggregates_to_dict(const RunAggregates& g) {
  py::dict d;
  auto stat = [](const SeriesStat& s) {
    py::dict x;
    x["mean"] = s.mean;
    x["stderr"] = s.stderr_mean;
    x["n"] = s.n;
    return x;
  };
  d["total_grid_wh"] = stat(g.total_grid_wh);
  d["total_solar_used_wh"] = stat(g.total_solar_used_wh);
  d["ee_overall_bits_per_j"] = stat(g.ee_overall);
  d["mean_hourly_ee_bits_per_j"] = stat(g.mean_hourly_ee);
  d["mean_eci_j_per_bit"] = stat(g.mean_eci);
  d["mean_throughput_bps"] = stat(g.mean_throughput_bps);
  d["mean_savings_eq8_pct"] = stat(g.mean_savings_eq8_pct);
  d["mean_savings_conv_pct"] = stat(g.mean_savings_conv_pct);
  d["zero_grid_iterations"] = g.ee_overall_infinite_iterations;
  d["ee_undefined_hours_total"] = g.ee_undefined_hours_total;
  d["iterations"] = g.iterations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_greencell, m) {
  m.doc() = "Solar-powered CoMP cellular network simulator";
  m.attr("__version__") = "0.1.0";

  py::enum_<CompMode>(m, "CompMode")
      .value("NONCOMP", CompMode::NonComp)
      .value("DPS", CompMode::Dps)
      .value("JT", CompMode::Jt);
  py::enum_<SolarSpatialMode>(m, "SolarSpatialMode")
      .value("EQUAL", SolarSpatialMode::Equal)
      .value("UNIFORM_RANDOM", SolarSpatialMode::UniformRandom);
  py::enum_<SpatialLoadMode>(m, "SpatialLoadMode")
      .value("PROFILE_ONLY", SpatialLoadMode::ProfileOnly)
      .value("PROFILE_TIMES_UNIFORM", SpatialLoadMode::ProfileTimesUniform);

  py::class_<Layout>(m, "Layout")
      .def_static("hex_grid", &Layout::hex_grid, py::arg("cell_radius_m"), py::arg("tiers"))
      .def_property_readonly("site_count", &Layout::site_count)
      .def_property_readonly("cell_radius", &Layout::cell_radius)
      .def("positions",
           [](const Layout& l) {
             std::vector<std::tuple<int, double, double, int>> out;
             for (const Site& s : l.sites()) out.emplace_back(s.id, s.x, s.y, s.tier);
             return out;
           })
      .def("first_tier_neighbors", &Layout::first_tier_neighbors, py::arg("site_id"))
      .def("interferer_set", &Layout::interferer_set, py::arg("site_id"))
      .def("distance", &Layout::distance, py::arg("a"), py::arg("b"));

  py::class_<ChannelParams>(m, "ChannelParams")
      .def(py::init<>())
      .def_readwrite("ref_distance_m", &ChannelParams::ref_distance_m)
      .def_readwrite("pathloss_exponent", &ChannelParams::pathloss_exponent)
      .def_readwrite("shadow_sigma_db", &ChannelParams::shadow_sigma_db)
      .def_readwrite("carrier_freq_hz", &ChannelParams::carrier_freq_hz)
      .def_readwrite("rb_bandwidth_hz", &ChannelParams::rb_bandwidth_hz)
      .def_readwrite("rb_count", &ChannelParams::rb_count)
      .def_readwrite("bs_tx_power_dbm", &ChannelParams::bs_tx_power_dbm)
      .def("per_rb_tx_dbm", &ChannelParams::per_rb_tx_dbm);

  py::class_<PowerModelParams>(m, "PowerModelParams")
      .def(py::init<>())
      .def_readwrite("pa_efficiency", &PowerModelParams::pa_efficiency)
      .def_readwrite("baseband_w", &PowerModelParams::baseband_w)
      .def_readwrite("rf_w", &PowerModelParams::rf_w)
      .def_readwrite("feeder_loss", &PowerModelParams::feeder_loss)
      .def_readwrite("dc_loss", &PowerModelParams::dc_loss)
      .def_readwrite("mains_loss", &PowerModelParams::mains_loss)
      .def_readwrite("cooling_loss", &PowerModelParams::cooling_loss)
      .def_readwrite("sectors", &PowerModelParams::sectors)
      .def_readwrite("max_tx_w", &PowerModelParams::max_tx_w)
      .def_readwrite("load_slope", &PowerModelParams::load_slope)
      .def_readwrite("sleep_w", &PowerModelParams::sleep_w);

  py::class_<HourlyProfile>(m, "HourlyProfile")
      .def(py::init<const std::array<double, 24>&>())
      .def_static("from_csv", &HourlyProfile::from_csv, py::arg("path"),
                  py::arg("max_value") = std::numeric_limits<double>::infinity())
      .def_static("default_solar", &HourlyProfile::default_solar)
      .def_static("dhaka_annual_solar", &HourlyProfile::dhaka_annual_solar)
      .def_static("default_traffic", &HourlyProfile::default_traffic)
      .def("at", &HourlyProfile::at, py::arg("hour_of_day"))
      .def("values", &HourlyProfile::values)
      .def("total", &HourlyProfile::total);

  py::class_<StorageState>(m, "StorageState")
      .def(py::init<>())
      .def_readwrite("level_wh", &StorageState::level_wh)
      .def_readwrite("capacity_wh", &StorageState::capacity_wh)
      .def_readwrite("retention", &StorageState::retention);

  py::class_<AlphaMap>(m, "AlphaMap")
      .def(py::init<double>(), py::arg("uniform") = 1.0)
      .def("set_link", &AlphaMap::set_link)
      .def("at", &AlphaMap::at);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("cell_radius_m", &ScenarioConfig::cell_radius_m)
      .def_readwrite("tiers", &ScenarioConfig::tiers)
      .def_readwrite("channel", &ScenarioConfig::channel)
      .def_readwrite("power", &ScenarioConfig::power)
      .def_readwrite("storage_capacity_wh", &ScenarioConfig::storage_capacity_wh)
      .def_readwrite("storage_factor", &ScenarioConfig::storage_factor)
      .def_readwrite("traffic", &ScenarioConfig::traffic)
      .def_readwrite("spatial_load_mode", &ScenarioConfig::spatial_load_mode)
      .def_readwrite("redraw_load_hourly", &ScenarioConfig::redraw_load_hourly)
      .def_readwrite("comp_mode", &ScenarioConfig::comp_mode)
      .def_readwrite("sharing_enabled", &ScenarioConfig::sharing_enabled)
      .def_readwrite("alpha", &ScenarioConfig::alpha)
      .def_readwrite("loss_compensated_transfers", &ScenarioConfig::loss_compensated_transfers)
      .def_readwrite("horizon_days", &ScenarioConfig::horizon_days)
      .def_readwrite("iterations", &ScenarioConfig::iterations)
      .def_readwrite("master_seed", &ScenarioConfig::master_seed)
      .def_readwrite("discard_day1", &ScenarioConfig::discard_day1)
      .def_readwrite("cdf_center_cell_only", &ScenarioConfig::cdf_center_cell_only)
      .def_property(
          "panel_capacity_w",
          [](const ScenarioConfig& c) { return c.solar.panel_capacity_w; },
          [](ScenarioConfig& c, double v) { c.solar.panel_capacity_w = v; })
      .def_property(
          "solar_spatial_mode",
          [](const ScenarioConfig& c) { return c.solar.spatial_mode; },
          [](ScenarioConfig& c, SolarSpatialMode v) { c.solar.spatial_mode = v; })
      .def_property(
          "c_s_w", [](const ScenarioConfig& c) { return c.solar.random_scale_w; },
          [](ScenarioConfig& c, double v) { c.solar.random_scale_w = v; })
      .def_property(
          "solar_profile", [](const ScenarioConfig& c) { return c.solar.profile; },
          [](ScenarioConfig& c, const HourlyProfile& p) { c.solar.profile = p; })
      .def("validate", &ScenarioConfig::validate);

  py::class_<RunResult>(m, "RunResult")
      .def_property_readonly("hours",
                             [](const RunResult& r) {
                               py::list out;
                               for (const auto& h : r.hours) out.append(hour_to_dict(h));
                               return out;
                             })
      .def_property_readonly(
          "aggregates", [](const RunResult& r) { return aggregates_to_dict(r.aggregates); });

  m.def("default_config", []() { return ScenarioConfig{}; });
  m.def("load_config", &load_config, py::arg("path"));
  m.def("save_config", &save_config, py::arg("config"), py::arg("path"));

  m.def("path_loss_db", &path_loss_db, py::arg("params"), py::arg("distance_m"));
  m.def("received_power_dbm", &received_power_dbm, py::arg("params"), py::arg("tx_dbm"),
        py::arg("distance_m"), py::arg("shadow_db"));
  m.def("noise_power_dbm", &noise_power_dbm, py::arg("bandwidth_hz"));
  m.def("ue_throughput_bps", &ue_throughput_bps, py::arg("sinr_linear"), py::arg("bandwidth_hz"));

  m.def("pa_power_w", &pa_power_w, py::arg("params"));
  m.def("sector_max_power_w", &sector_max_power_w, py::arg("params"));
  m.def("bs_input_power_w", &bs_input_power_w, py::arg("params"), py::arg("load"));
  m.def("idle_awake_power_w", &idle_awake_power_w, py::arg("params"));

  m.def(
      "step_storage",
      [](const StorageState& s, double inflow, double drawn) {
        StorageStep step = step_storage(s, inflow, drawn);
        return py::make_tuple(step.state, step.wastage_wh);
      },
      py::arg("state"), py::arg("inflow_wh"), py::arg("drawn_wh"));

  m.def(
      "settle_hour",
      [](const Layout& layout, std::vector<StorageState> storages,
         const std::vector<double>& generation, const std::vector<double>& demand,
         const AlphaMap& alpha, bool sharing_enabled, bool loss_compensated, int hour) {
        HourSettlement s = settle_hour(layout, storages, generation, demand, alpha,
                                       sharing_enabled, loss_compensated, hour);
        py::list rows;
        for (const EnergyLedgerRow& r : s.rows) {
          py::dict d;
          d["site_id"] = r.site_id;
          d["generation_wh"] = r.generation_wh;
          d["demand_wh"] = r.demand_wh;
          d["solar_used_wh"] = r.solar_used_wh;
          d["grid_used_wh"] = r.grid_used_wh;
          d["shared_out_wh"] = r.shared_out_wh;
          d["shared_in_delivered_wh"] = r.shared_in_delivered_wh;
          d["line_loss_wh"] = r.line_loss_wh;
          d["wastage_wh"] = r.wastage_wh;
          rows.append(d);
        }
        return py::make_tuple(rows, storages);
      },
      py::arg("layout"), py::arg("storages"), py::arg("generation_wh"), py::arg("demand_wh"),
      py::arg("alpha"), py::arg("sharing_enabled") = true, py::arg("loss_compensated") = false,
      py::arg("hour") = 0);

  m.def("run_monte_carlo", &run_monte_carlo, py::arg("config"), py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("collect_sinr_samples", &collect_sinr_samples, py::arg("config"), py::arg("mode"),
        py::arg("n_samples"), py::call_guard<py::gil_scoped_release>());
  m.def("emit_timeseries", &emit_timeseries, py::arg("result"), py::arg("path"));
}
