'''
SyntheticCityClass.py: Contains the SyntheticCity class, a seeded city with a known propagation oracle.

Purpose:
    - Rectangular buildings on a block grid over flat or sloped terrain.
    - Outdoor transmitters, indoor/outdoor UEs.
    - RSRP from the oracle path loss plus lognormal shadowing, RSRQ from a
      diurnal load profile, RSSI from the RSRP/RSRQ identity.
'''

# Python imports.
import datetime
import logging
import math
import os

# Other imports.
import numpy as np

from radio_metrics.errors import SceneError
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.features.feature_helpers import assemble_link
from radio_metrics.measurements.MeasurementRecordClass import MeasurementRecord
from radio_metrics.measurements.TransmitterClass import Transmitter
from radio_metrics.propagation.PathLossModelClass import PathLossKind, PathLossModel
from radio_metrics.propagation.radio_identities import rsrp_estimate
from radio_metrics.scene.BuildingClass import Building
from radio_metrics.scene.GeoPointClass import GeoPoint
from radio_metrics.scene.SceneClass import EARTH_RADIUS_M, Scene
from radio_metrics.scene.TerrainGridClass import TerrainGrid
from radio_metrics.scene.scene_io import write_buildings_geojson, write_esri_ascii
from radio_metrics.tasks.synthetic_city.SynthConfigClass import SynthConfig

logger = logging.getLogger(__name__)

RSRQ_BASELINE_DB = -10.79
RSRQ_MIN_DB = -19.5
RSRQ_MAX_DB = -3.0
# Centre of the busy half day, in local hours: 10-21h on weekdays, 8-19h at weekends.
WEEKDAY_PEAK_CENTER = 15.5
WEEKEND_PEAK_CENTER = 13.5
PEAK_HALF_WIDTH_HOURS = 6.0
# Mean of cos over the twelve peak hours, so peak minus off-peak mean load equals the amplitude.
_PEAK_MEAN_COS = float(np.mean(np.cos(2.0 * np.pi * (np.arange(-6, 6) + 0.5) / 24.0)))
_MAX_PLACEMENT_TRIES = 10000


def _hours_from_peak(hour_of_day, day_of_week):
    center = WEEKEND_PEAK_CENTER if day_of_week >= 5 else WEEKDAY_PEAK_CENTER
    return (hour_of_day - center + 12.0) % 24.0 - 12.0


def is_peak_hour(hour_of_day, day_of_week):
    '''
    Args:
        hour_of_day (int): 0..23
        day_of_week (int): 0 = Monday .. 6 = Sunday

    Returns:
        (bool): weekdays 10-21h and weekends 8-19h, inclusive.
    '''
    return abs(_hours_from_peak(hour_of_day, day_of_week)) < PEAK_HALF_WIDTH_HOURS


def load_profile(hour_of_day, day_of_week, amplitude_db):
    '''
    Summary:
        RSRQ degradation (dB) from cell load at the given local time: a raised cosine
        over the day, highest mid-peak and zero twelve hours away. The mean over the
        peak hours exceeds the off-peak mean by exactly @amplitude_db.
    '''
    phase = 2.0 * math.pi * _hours_from_peak(hour_of_day, day_of_week) / 24.0
    return float(amplitude_db) / (2.0 * _PEAK_MEAN_COS) * (1.0 + math.cos(phase))


class SyntheticCity(object):
    ''' Synthetic stand-in for a crowdsourced measurement campaign. '''

    MEASUREMENTS_FILE_NAME = "measurements.csv"
    BUILDINGS_FILE_NAME = "buildings.geojson"
    TERRAIN_FILE_NAME = "terrain.asc"

    def __init__(self, config=None):
        '''
        Args:
            config (SynthConfig)
        '''
        self.config = config if config is not None else SynthConfig()
        self._scene_seq, self._measurement_seq = np.random.SeedSequence(self.config.seed).spawn(2)

    @property
    def oracle(self):
        c = self.config
        return PathLossModel(PathLossKind.LOG_DISTANCE_CLUTTER, c.oracle_exponent, c.oracle_k_obs_db_per_m, c.oracle_l_entry_db)

    # -----------
    # -- Scene --
    # -----------

    def _terrain(self):
        c = self.config
        half_m = max(c.city_size_m) / 2.0 + c.margin_m
        half_lon = math.degrees(half_m / (EARTH_RADIUS_M * math.cos(math.radians(c.origin_lat))))
        half_lat = math.degrees(half_m / EARTH_RADIUS_M)
        steps = int(math.ceil(max(half_lon, half_lat) / c.terrain_cell_deg))
        n = 2 * steps + 1
        origin_lon = c.origin_lon - steps * c.terrain_cell_deg
        origin_lat = c.origin_lat - steps * c.terrain_cell_deg
        # East-west slope; a plane is reproduced exactly by bilinear interpolation.
        east_m = (np.arange(n) - steps) * c.terrain_cell_deg
        east_m = np.radians(east_m) * EARTH_RADIUS_M * math.cos(math.radians(c.origin_lat))
        row = c.base_elevation_m + c.terrain_slope_m_per_km * east_m / 1000.0
        return TerrainGrid(origin_lon, origin_lat, c.terrain_cell_deg, np.tile(row, (n, 1)))

    def generate_scene(self):
        '''
        Returns:
            (Scene)

        Raises:
            SceneError: zero-area city.
        '''
        c = self.config
        width, height = c.city_size_m
        if not width > 0 or not height > 0:
            raise SceneError("(radio_metrics) Synth Error: zero-area city (" + str(c.grid_rows) + "x" + str(c.grid_cols)
                             + " blocks of " + str(c.block_size_m) + " m).")
        terrain = self._terrain()
        rng = np.random.default_rng(self._scene_seq)
        lot = c.block_size_m - c.street_width_m
        x0, y0 = -width / 2.0, -height / 2.0

        # Local frame of the scene (terrain centre), for base elevations.
        frame = Scene([], terrain)
        buildings = []
        for i in range(c.grid_rows):
            for j in range(c.grid_cols):
                occupied = rng.random() < c.building_density
                fx, fy = rng.uniform(0.5, 1.0, size=2)
                h = rng.uniform(*c.height_range_m)
                if not occupied:
                    continue
                cx = x0 + (j + 0.5) * c.block_size_m
                cy = y0 + (i + 0.5) * c.block_size_m
                hx, hy = fx * lot / 2.0, fy * lot / 2.0
                footprint = [(cx - hx, cy - hy), (cx + hx, cy - hy), (cx + hx, cy + hy), (cx - hx, cy + hy)]
                base = terrain.altitude(*frame.unproject(cx, cy))
                buildings.append(Building(len(buildings), footprint, round(float(h), 2), base))

        scene = Scene(buildings, terrain, origin=(frame.lon0, frame.lat0))
        logger.info("Generated %s.", scene)
        return scene

    # ------------------
    # -- Measurements --
    # ------------------

    def _outdoor_xy(self, rng, scene):
        width, height = self.config.city_size_m
        for _ in range(_MAX_PLACEMENT_TRIES):
            x = rng.uniform(-width / 2.0, width / 2.0)
            y = rng.uniform(-height / 2.0, height / 2.0)
            if not any(b.covers_xy(x, y) for b in scene.buildings):
                return x, y
        raise SceneError("(radio_metrics) Synth Error: could not place an outdoor point; the city is fully built.")

    def _transmitters(self, rng, scene):
        c = self.config
        transmitters = []
        for k in range(c.n_transmitters):
            x, y = self._outdoor_xy(rng, scene)
            lon, lat = scene.unproject(x, y)
            transmitters.append(Transmitter("tx" + str(k), lon, lat,
                                            round(float(rng.uniform(*c.tx_height_range_m)), 2),
                                            round(float(rng.uniform(*c.tx_power_range_dbm)), 2)))
        frequencies = [float(c.frequencies_mhz[int(rng.integers(0, len(c.frequencies_mhz)))]) for _ in transmitters]
        return transmitters, frequencies

    def _ue_point(self, rng, scene, indoor):
        c = self.config
        if indoor:
            b = scene.buildings[int(rng.integers(0, len(scene.buildings)))]
            min_x, min_y, max_x, max_y = b.bounds
            x = rng.uniform(min_x + 0.5, max_x - 0.5)
            y = rng.uniform(min_y + 0.5, max_y - 0.5)
            z = b.base_elev_m + rng.uniform(0.5, b.height_m - 0.5)
            lon, lat = scene.unproject(x, y)
            alt = max(0.0, z - scene.terrain_altitude(lon, lat))
            return GeoPoint(lon, lat, round(alt, 3))
        x, y = self._outdoor_xy(rng, scene)
        lon, lat = scene.unproject(x, y)
        return GeoPoint(lon, lat, c.outdoor_height_m)

    def generate_measurements(self, scene):
        '''
        Args:
            scene (Scene): usually from generate_scene.

        Returns:
            (list of MeasurementRecord): targets from the oracle. Every UE lies inside the scene.
        '''
        c = self.config
        rng = np.random.default_rng(self._measurement_seq)
        transmitters, frequencies = self._transmitters(rng, scene)
        oracle = self.oracle
        start = datetime.datetime.fromisoformat(c.start_time).astimezone(datetime.timezone.utc)
        if not scene.buildings and c.indoor_fraction > 0:
            logger.warning("No buildings: every synthetic UE is outdoor.")

        records = []
        for k in range(c.n_samples):
            indoor = bool(rng.random() < c.indoor_fraction) and bool(scene.buildings)
            ue = self._ue_point(rng, scene, indoor)
            serving = int(rng.integers(0, len(transmitters)))
            tx = transmitters[serving]
            timestamp = start + datetime.timedelta(seconds=int(rng.integers(0, c.days * 86400)))
            device = "ue" + str(int(rng.integers(0, c.n_devices)))
            shadowing = rng.normal(0.0, c.shadowing_sigma_db)
            rsrq_noise = rng.normal(0.0, c.rsrq_noise_db)

            record = MeasurementRecord("r" + str(k).zfill(6), timestamp, ue, tx, frequencies[serving], device_id=device)
            if not scene.terrain.contains(ue.lon, ue.lat):
                raise SceneError("(radio_metrics) Synth Error: UE sample " + str(ue) + " outside the scene.")
            # Raises FeatureRangeError if the city is too large for the supported ranges.
            p, x, _ = assemble_link(record, scene, MetricKind.RSRQ)
            rsrp = rsrp_estimate(tx.power_dbm, oracle.estimate(p), c.n_resource_blocks) + shadowing
            rsrq = RSRQ_BASELINE_DB - load_profile(x.hour_of_day, x.day_of_week, c.load_amplitude_db) + rsrq_noise
            if c.rsrq_step_db > 0:
                rsrq = round(rsrq / c.rsrq_step_db) * c.rsrq_step_db
            rsrq = min(RSRQ_MAX_DB, max(RSRQ_MIN_DB, rsrq))
            records.append(MeasurementRecord(record.record_id, timestamp, ue, tx, record.frequency_mhz,
                                             float(rsrp), float(rsrq), device_id=device))

        logger.info("Generated %d synthetic measurements from %d transmitters.", len(records), len(transmitters))
        return records

    def generate(self):
        '''
        Returns:
            (tuple): (Scene, list of MeasurementRecord)
        '''
        scene = self.generate_scene()
        return scene, self.generate_measurements(scene)

    def emit_files(self, directory, scene=None, records=None):
        '''
        Summary:
            Writes measurements.csv, buildings.geojson and terrain.asc in the ingestion formats.

        Returns:
            (dict): file kind -> path.
        '''
        from radio_metrics.utils.ingest import write_measurements_csv

        if scene is None or records is None:
            scene, records = self.generate()
        os.makedirs(directory, exist_ok=True)
        paths = {"measurements": os.path.join(directory, SyntheticCity.MEASUREMENTS_FILE_NAME),
                 "buildings": os.path.join(directory, SyntheticCity.BUILDINGS_FILE_NAME),
                 "terrain": os.path.join(directory, SyntheticCity.TERRAIN_FILE_NAME)}
        write_measurements_csv(records, paths["measurements"])
        write_buildings_geojson(scene, paths["buildings"])
        write_esri_ascii(scene.terrain, paths["terrain"])
        logger.info("Wrote synthetic city to %s.", directory)
        return paths

    def get_parameters(self):
        return self.config.get_parameters()

    def __str__(self):
        return "synthetic-city-" + str(self.config.seed)


def generate_scene(config):
    return SyntheticCity(config).generate_scene()


def generate_measurements(scene, config):
    return SyntheticCity(config).generate_measurements(scene)
