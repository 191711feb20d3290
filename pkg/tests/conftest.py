''' conftest.py: Shared scene and record builders for the radio_metrics tests. '''

# Python imports.
import datetime

# Other imports.
import pytest

from radio_metrics.measurements.MeasurementRecordClass import MeasurementRecord
from radio_metrics.measurements.TransmitterClass import Transmitter
from radio_metrics.scene.BuildingClass import Building
from radio_metrics.scene.GeoPointClass import GeoPoint
from radio_metrics.scene.SceneClass import Scene
from radio_metrics.scene.TerrainGridClass import flat_terrain

LON0, LAT0 = -79.40, 43.70
GROUND_M = 100.0


def box(cx, cy, wx, wy):
    ''' Axis-aligned rectangular footprint centred on (cx, cy). '''
    hx, hy = wx / 2.0, wy / 2.0
    return [(cx - hx, cy - hy), (cx + hx, cy - hy), (cx + hx, cy + hy), (cx - hx, cy + hy)]


def make_scene(footprints=(), heights=None, half_deg=0.01, ground_m=GROUND_M, use_index=True):
    '''
    Args:
        footprints (list): local metric footprints about (LON0, LAT0).
        heights (list of float): one per footprint, 30 m when absent.

    Returns:
        (Scene): flat terrain at @ground_m, projected about (LON0, LAT0).
    '''
    terrain = flat_terrain(LON0 - half_deg, LAT0 - half_deg, LON0 + half_deg, LAT0 + half_deg, ground_m, half_deg / 4.0)
    heights = heights if heights is not None else [30.0] * len(footprints)
    buildings = [Building(i, fp, h, ground_m) for i, (fp, h) in enumerate(zip(footprints, heights))]
    return Scene(buildings, terrain, origin=(LON0, LAT0), use_index=use_index)


def point(scene, x, y, alt_ag_m):
    lon, lat = scene.unproject(x, y)
    return GeoPoint(lon, lat, alt_ag_m)


def make_record(scene, record_id="r1", ue_xy=(200.0, 0.0), ue_alt=1.5, tx_xy=(0.0, 0.0), tx_height=30.0,
                tx_power=43.0, frequency=1960.0, rsrp=-80.0, rsrq=-10.0, timestamp=None, device_id=None):
    tx_lon, tx_lat = scene.unproject(*tx_xy)
    tx = Transmitter("tx0", tx_lon, tx_lat, tx_height, tx_power)
    if timestamp is None:
        timestamp = datetime.datetime(2023, 1, 3, 14, 0, tzinfo=datetime.timezone.utc)
    return MeasurementRecord(record_id, timestamp, point(scene, ue_xy[0], ue_xy[1], ue_alt), tx, frequency,
                             rsrp, rsrq, device_id=device_id)


@pytest.fixture
def empty_scene():
    return make_scene()
