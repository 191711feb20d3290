''' feature_helpers.py: Assembles per-record feature vectors from a record and the scene. '''

# Python imports.
import math

# Other imports.
import pandas as pd

from radio_metrics.errors import FeatureRangeError, UnknownTransmitterError
from radio_metrics.features.FeatureVectorClass import FEATURE_RANGES, EngineeredFeatures, PathLossFeatures, feature_names


def resolve_transmitter(record, transmitters=None):
    '''
    Args:
        record (MeasurementRecord)
        transmitters (dict): tx_id -> Transmitter, consulted when the record carries only an id.

    Returns:
        (Transmitter)
    '''
    if record.transmitter is not None:
        return record.transmitter
    if transmitters and record.tx_id in transmitters:
        return transmitters[record.tx_id]
    raise UnknownTransmitterError("(radio_metrics) Feature Error: unknown transmitter '" + str(record.tx_id)
                                  + "' for " + str(record) + ".")


def check_ranges(values):
    '''
    Args:
        values (dict): feature name -> value.

    Raises:
        FeatureRangeError on the first field outside its documented range.
    '''
    for name, value in values.items():
        if name not in FEATURE_RANGES:
            continue
        if not math.isfinite(value):
            raise FeatureRangeError(name, value, name + " is not finite")
        lo, hi = FEATURE_RANGES[name]
        if name == "distance_to_transmitter_km":
            if not lo < value <= hi:
                raise FeatureRangeError(name, value)
            continue
        if (lo is not None and value < lo) or (hi is not None and value > hi):
            raise FeatureRangeError(name, value)


def assemble_link(record, scene, metric_kind, transmitters=None, use_temporal=True, temporal_for_rssi=True,
                  utc_offset_hours=0.0):
    '''
    Args:
        record (MeasurementRecord)
        scene (Scene)
        metric_kind (MetricKind)
        transmitters (dict)
        use_temporal (bool)
        temporal_for_rssi (bool)
        utc_offset_hours (float): fixed offset used to derive day_of_week / hour_of_day.

    Returns:
        (tuple): (PathLossFeatures, EngineeredFeatures, LinkGeometry)
    '''
    tx = resolve_transmitter(record, transmitters)
    link = scene.link_geometry(tx.point, record.ue)
    tx_xyz, ue_xyz = link.tx_xyz, link.ue_xyz
    dx = (ue_xyz[0] - tx_xyz[0]) / 1000.0
    dy = (ue_xyz[1] - tx_xyz[1]) / 1000.0
    dz = (ue_xyz[2] - tx_xyz[2]) / 1000.0

    p = PathLossFeatures(
        downlink_frequency=float(record.frequency_mhz),
        distance_to_transmitter_km=math.sqrt(dx * dx + dy * dy + dz * dz),
        tx_height_m=float(tx.height_m),
        ue_altitude_ag_m=float(record.ue.alt_ag_m),
        line_of_sight=link.los.binary(),
        building_penetration_length_m=float(link.penetration_m),
        total_obstruction_length_3d_m=float(link.obstruction_m),
    )

    day, hour = None, None
    if metric_kind.uses_temporal(use_temporal, temporal_for_rssi):
        local = record.local_time(utc_offset_hours)
        day, hour = local.weekday(), local.hour

    x = EngineeredFeatures(p, dx, dy, float(tx.power_dbm), int(link.intersection_count), day, hour)
    check_ranges(x.as_dict())
    return p, x, link


def assemble_features(record, scene, metric_kind, transmitters=None, use_temporal=True, temporal_for_rssi=True,
                      utc_offset_hours=0.0):
    '''
    Returns:
        (tuple): (PathLossFeatures, EngineeredFeatures)

    Raises:
        UnknownTransmitterError, FeatureRangeError, SceneError
    '''
    p, x, _ = assemble_link(record, scene, metric_kind, transmitters, use_temporal, temporal_for_rssi, utc_offset_hours)
    return p, x


def features_to_frame(record_ids, engineered, extra_columns=None):
    '''
    Args:
        record_ids (list)
        engineered (list of EngineeredFeatures): all with the same schema.
        extra_columns (dict): name -> list, appended after the feature columns.

    Returns:
        (pd.DataFrame): record_id then the features in the fixed column order.
    '''
    temporal = bool(engineered) and engineered[0].has_temporal
    names = feature_names(temporal)
    rows = [x.as_dict() for x in engineered]
    frame = pd.DataFrame(rows, columns=list(names))
    frame.insert(0, "record_id", list(record_ids))
    for name, values in (extra_columns or {}).items():
        frame[name] = list(values)
    return frame
