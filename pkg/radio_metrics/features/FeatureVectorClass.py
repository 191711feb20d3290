'''
FeatureVectorClass.py: Contains the PathLossFeatures and EngineeredFeatures classes.

Column order is fixed: path loss features first, then the engineered additions,
then the temporal pair.
'''

# Python imports.
from dataclasses import dataclass, fields
from typing import Optional

# Other imports.
import numpy as np

PATH_LOSS_COLUMNS = (
    "downlink_frequency",
    "distance_to_transmitter_km",
    "tx_height_m",
    "ue_altitude_ag_m",
    "line_of_sight",
    "building_penetration_length_m",
    "total_obstruction_length_3d_m",
)
ENGINEERED_COLUMNS = (
    "distance_x_km",
    "distance_y_km",
    "tx_power",
    "building_intersection_count_3d",
)
TEMPORAL_COLUMNS = ("day_of_week", "hour_of_day")
BETA_COLUMN = "rsrp_estimate_dbm"

# Closed ranges; None is unbounded. Distance is checked separately as (0, 3].
FEATURE_RANGES = {
    "downlink_frequency": (700.0, 2680.0),
    "distance_to_transmitter_km": (0.0, 3.0),
    "tx_height_m": (5.0, 120.0),
    "ue_altitude_ag_m": (0.0, 325.0),
    "line_of_sight": (0, 1),
    "building_penetration_length_m": (0.0, None),
    "total_obstruction_length_3d_m": (0.0, None),
    "distance_x_km": (-3.0, 3.0),
    "distance_y_km": (-3.0, 3.0),
    "tx_power": (29.0, 70.0),
    "building_intersection_count_3d": (0, None),
    "day_of_week": (0, 6),
    "hour_of_day": (0, 23),
}


@dataclass(frozen=True)
class PathLossFeatures(object):
    downlink_frequency: float
    distance_to_transmitter_km: float
    tx_height_m: float
    ue_altitude_ag_m: float
    line_of_sight: int
    building_penetration_length_m: float
    total_obstruction_length_3d_m: float

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class EngineeredFeatures(object):
    path_loss: PathLossFeatures
    distance_x_km: float
    distance_y_km: float
    tx_power: float
    building_intersection_count_3d: int
    day_of_week: Optional[int] = None
    hour_of_day: Optional[int] = None

    @property
    def has_temporal(self):
        return self.day_of_week is not None

    def as_dict(self):
        result = self.path_loss.as_dict()
        for name in ENGINEERED_COLUMNS:
            result[name] = getattr(self, name)
        if self.has_temporal:
            result["day_of_week"] = self.day_of_week
            result["hour_of_day"] = self.hour_of_day
        return result

    def names(self):
        return feature_names(self.has_temporal)

    def vector(self):
        '''
        Returns:
            (np.ndarray): float64 values in feature_names() order.
        '''
        d = self.as_dict()
        return np.array([float(d[name]) for name in self.names()], dtype=np.float64)


def feature_names(temporal=False):
    '''
    Args:
        temporal (bool): include day_of_week and hour_of_day.

    Returns:
        (tuple): column names in the fixed export order.
    '''
    names = PATH_LOSS_COLUMNS + ENGINEERED_COLUMNS
    if temporal:
        names = names + TEMPORAL_COLUMNS
    return names
