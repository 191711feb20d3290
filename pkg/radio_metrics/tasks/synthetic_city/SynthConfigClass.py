''' SynthConfigClass.py: Contains the SynthConfig class, the knobs of the synthetic city generator. '''

# Python imports.
from dataclasses import asdict, dataclass, fields
from typing import Tuple

# LTE downlink carriers (MHz) inside the supported 700-2680 MHz range.
LTE_CARRIERS_MHZ = (731.0, 881.0, 1960.0, 2145.0, 2655.0)


@dataclass(frozen=True)
class SynthConfig(object):
    seed: int = 0
    origin_lon: float = -79.40
    origin_lat: float = 43.70
    # City layout: grid_rows x grid_cols blocks, one candidate building per block.
    grid_rows: int = 10
    grid_cols: int = 10
    block_size_m: float = 60.0
    street_width_m: float = 16.0
    building_density: float = 0.5
    height_range_m: Tuple[float, float] = (6.0, 60.0)
    margin_m: float = 150.0
    terrain_cell_deg: float = 1e-4
    base_elevation_m: float = 100.0
    terrain_slope_m_per_km: float = 0.0
    # Transmitters.
    n_transmitters: int = 4
    tx_power_range_dbm: Tuple[float, float] = (40.0, 46.0)
    tx_height_range_m: Tuple[float, float] = (25.0, 45.0)
    frequencies_mhz: Tuple[float, ...] = LTE_CARRIERS_MHZ
    n_resource_blocks: int = 100
    # Measurements.
    n_samples: int = 2000
    indoor_fraction: float = 0.3
    outdoor_height_m: float = 1.5
    n_devices: int = 5
    start_time: str = "2023-01-02T00:00:00+00:00"
    days: int = 14
    shadowing_sigma_db: float = 6.0
    # Oracle path loss.
    oracle_exponent: float = 3.5
    oracle_k_obs_db_per_m: float = 0.5
    oracle_l_entry_db: float = 12.0
    # RSRQ: baseline minus a diurnal load term plus noise, clamped.
    load_amplitude_db: float = 3.0
    rsrq_noise_db: float = 1.0
    rsrq_step_db: float = 0.0

    def __post_init__(self):
        for name in ("height_range_m", "tx_power_range_dbm", "tx_height_range_m", "frequencies_mhz"):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        if not 0.0 <= self.indoor_fraction <= 1.0:
            raise ValueError("(radio_metrics) Synth Error: indoor_fraction must be in [0, 1].")
        if not 0.0 <= self.building_density <= 1.0:
            raise ValueError("(radio_metrics) Synth Error: building_density must be in [0, 1].")
        lo, hi = self.height_range_m
        if not 2.0 <= lo <= hi <= 300.0:
            raise ValueError("(radio_metrics) Synth Error: height_range_m must lie within [2, 300].")
        lo, hi = self.tx_power_range_dbm
        if not 29.0 <= lo <= hi <= 70.0:
            raise ValueError("(radio_metrics) Synth Error: tx_power_range_dbm must lie within [29, 70].")
        lo, hi = self.tx_height_range_m
        if not 5.0 <= lo <= hi <= 120.0:
            raise ValueError("(radio_metrics) Synth Error: tx_height_range_m must lie within [5, 120].")
        if not self.frequencies_mhz or any(not 700.0 <= f <= 2680.0 for f in self.frequencies_mhz):
            raise ValueError("(radio_metrics) Synth Error: frequencies must lie within [700, 2680] MHz.")
        if self.n_transmitters < 1:
            raise ValueError("(radio_metrics) Synth Error: need at least 1 transmitter.")
        if self.shadowing_sigma_db < 0 or self.rsrq_noise_db < 0 or self.rsrq_step_db < 0:
            raise ValueError("(radio_metrics) Synth Error: noise levels must be non-negative.")
        if self.n_samples < 0 or self.n_devices < 1 or self.days < 1:
            raise ValueError("(radio_metrics) Synth Error: n_samples >= 0, n_devices >= 1 and days >= 1 required.")
        if self.street_width_m < 0 or self.street_width_m >= self.block_size_m > 0:
            raise ValueError("(radio_metrics) Synth Error: street_width_m must be in [0, block_size_m).")

    @property
    def city_size_m(self):
        ''' (width east-west, height north-south) of the block grid. '''
        return self.grid_cols * self.block_size_m, self.grid_rows * self.block_size_m

    @classmethod
    def from_parameters(cls, params):
        known = {f.name for f in fields(cls)}
        unknown = set(params or {}) - known
        if unknown:
            raise ValueError("(radio_metrics) Synth Error: unknown keys " + ", ".join(sorted(unknown)) + ".")
        return cls(**dict(params or {}))

    def replace(self, **changes):
        params = asdict(self)
        params.update(changes)
        return SynthConfig(**params)

    def get_parameters(self):
        return asdict(self)

    def __str__(self):
        return "synth(" + str(self.grid_rows) + "x" + str(self.grid_cols) + ", seed=" + str(self.seed) + ")"
