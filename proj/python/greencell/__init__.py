"""Monte Carlo simulator of a solar-powered cellular downlink.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._greencell import (
    AlphaMap,
    ChannelParams,
    CompMode,
    HourlyProfile,
    Layout,
    PowerModelParams,
    RunResult,
    ScenarioConfig,
    SolarSpatialMode,
    SpatialLoadMode,
    StorageState,
    __version__,
    bs_input_power_w,
    collect_sinr_samples,
    default_config,
    emit_timeseries,
    idle_awake_power_w,
    load_config,
    noise_power_dbm,
    pa_power_w,
    path_loss_db,
    received_power_dbm,
    run_monte_carlo,
    save_config,
    sector_max_power_w,
    settle_hour,
    step_storage,
    ue_throughput_bps,
)

__all__ = [
    "AlphaMap",
    "ChannelParams",
    "CompMode",
    "HourlyProfile",
    "Layout",
    "PowerModelParams",
    "RunResult",
    "ScenarioConfig",
    "SolarSpatialMode",
    "SpatialLoadMode",
    "StorageState",
    "__version__",
    "bs_input_power_w",
    "collect_sinr_samples",
    "default_config",
    "emit_timeseries",
    "idle_awake_power_w",
    "load_config",
    "noise_power_dbm",
    "pa_power_w",
    "path_loss_db",
    "received_power_dbm",
    "run_monte_carlo",
    "save_config",
    "sector_max_power_w",
    "settle_hour",
    "step_storage",
    "ue_throughput_bps",
]
