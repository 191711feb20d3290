'''
ingest.py: Measurement CSV reading/writing and the full file ingestion step.

Measurement CSV columns (in order):
    record_id, timestamp (ISO-8601, UTC), ue_lon, ue_lat, ue_altitude_ag_m,
    tx_id, tx_lon, tx_lat, tx_height_m, tx_power_dbm, downlink_frequency_mhz,
    rsrp_dbm, rsrq_db
  plus an optional device_id. Empty rsrp_dbm / rsrq_db cells mean "not measured".
'''

# Python imports.
import logging
import math
from collections import namedtuple

# Other imports.
import pandas as pd

from radio_metrics.errors import FeatureRangeError, IngestError, SceneError, UnknownTransmitterError
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.features.feature_helpers import assemble_features
from radio_metrics.measurements.MeasurementRecordClass import MeasurementRecord
from radio_metrics.measurements.TransmitterClass import Transmitter
from radio_metrics.scene.GeoPointClass import GeoPoint
from radio_metrics.scene.scene_io import load_scene

logger = logging.getLogger(__name__)

MEASUREMENT_COLUMNS = ["record_id", "timestamp", "ue_lon", "ue_lat", "ue_altitude_ag_m", "tx_id", "tx_lon", "tx_lat",
                       "tx_height_m", "tx_power_dbm", "downlink_frequency_mhz", "rsrp_dbm", "rsrq_db"]
OPTIONAL_COLUMNS = ["device_id"]
_FLOAT_COLUMNS = ["ue_lon", "ue_lat", "ue_altitude_ag_m", "tx_lon", "tx_lat", "tx_height_m", "tx_power_dbm",
                  "downlink_frequency_mhz"]

IngestResult = namedtuple("IngestResult", ["records", "scene", "dropped", "input_count"])


def _parse_timestamp(text):
    stamp = pd.Timestamp(text)
    if stamp.tzinfo is None:
        stamp = stamp.tz_localize("UTC")
    return stamp.tz_convert("UTC").to_pydatetime()


def _parse_float(text, optional=False):
    if text == "" and optional:
        return None
    value = float(text)
    if not math.isfinite(value):
        raise ValueError("non-finite value " + repr(text))
    return value


def read_measurements_csv(path, require_rsrq=False):
    '''
    Args:
        path (str)
        require_rsrq (bool): the rsrq_db column must exist (RSSI modeling).

    Returns:
        (tuple): (list of MeasurementRecord, list of (record_id, reason) for rows missing RSRQ)

    Raises:
        IngestError: missing header columns or unparsable cells, with file and line.
    '''
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise IngestError("file is empty (no header)", position=str(path))
    except pd.errors.ParserError as err:
        raise IngestError(str(err), position=str(path))

    required = [c for c in MEASUREMENT_COLUMNS if c != "rsrq_db" or require_rsrq]
    missing = [c for c in required if c not in frame.columns]
    if missing:
        reason = "missing column " + ", ".join(missing)
        if "rsrq_db" in missing:
            reason += " (required to derive the rssi target)"
        raise IngestError(reason, position=str(path) + ":1")
    has_rsrq = "rsrq_db" in frame.columns
    has_device = "device_id" in frame.columns

    if frame.empty:
        logger.warning("%s has a header but no rows: zero records.", path)
        return [], []

    records, dropped = [], []
    for index, row in enumerate(frame.itertuples(index=False)):
        row = row._asdict()
        line = index + 2
        column = "timestamp"
        try:
            timestamp = _parse_timestamp(row["timestamp"])
            values = {}
            for column in _FLOAT_COLUMNS:
                values[column] = _parse_float(row[column])
            column = "rsrp_dbm"
            rsrp = _parse_float(row["rsrp_dbm"], optional=True)
            column = "rsrq_db"
            rsrq = _parse_float(row["rsrq_db"], optional=True) if has_rsrq else None
            column = "ue_lon"
            ue = GeoPoint(values["ue_lon"], values["ue_lat"], values["ue_altitude_ag_m"])
            column = "tx_lon"
            tx = Transmitter(row["tx_id"], values["tx_lon"], values["tx_lat"], values["tx_height_m"], values["tx_power_dbm"])
        except (ValueError, TypeError) as err:
            raise IngestError("bad value in column " + column + " (" + str(err) + ")", position=str(path) + ":" + str(line))

        record_id = row["record_id"]
        if require_rsrq and rsrq is None:
            dropped.append((record_id, "missing rsrq_db"))
            logger.warning("Dropped record %s (line %d): missing rsrq_db", record_id, line)
            continue
        device = row["device_id"] if has_device and row["device_id"] != "" else None
        records.append(MeasurementRecord(record_id, timestamp, ue, tx, values["downlink_frequency_mhz"], rsrp, rsrq,
                                         device_id=device))
    return records, dropped


def _cell(value):
    return "" if value is None else value


def write_measurements_csv(records, path):
    '''
    Summary:
        Writes @records in the measurement CSV schema; floats round-trip exactly.
    '''
    rows = []
    for r in records:
        tx = r.transmitter
        rows.append([r.record_id, r.timestamp.isoformat(), r.ue.lon, r.ue.lat, r.ue.alt_ag_m, tx.tx_id, tx.lon, tx.lat,
                     tx.height_m, tx.power_dbm, r.frequency_mhz, _cell(r.rsrp_dbm), _cell(r.rsrq_db), _cell(r.device_id)])
    frame = pd.DataFrame(rows, columns=MEASUREMENT_COLUMNS + OPTIONAL_COLUMNS)
    frame.to_csv(path, index=False, lineterminator="\n")


def write_drop_log(dropped, path):
    pd.DataFrame(list(dropped), columns=["record_id", "reason"]).to_csv(path, index=False, lineterminator="\n")


def ingest(measurements_path, buildings_path, terrain_path, metric_kind=MetricKind.RSRP, device_id=None,
           utc_offset_hours=0.0, use_index=True):
    '''
    Args:
        measurements_path (str)
        buildings_path (str): GeoJSON FeatureCollection.
        terrain_path (str): ESRI ASCII grid.
        metric_kind (MetricKind): RSSI requires the rsrq_db column.
        device_id (str): keep only this device's records when given.
        utc_offset_hours (float)
        use_index (bool)

    Returns:
        (IngestResult): kept records, the Scene, (record_id, reason) for every dropped row, and the input row count.

    Raises:
        IngestError: malformed files, or rows present but none valid.
    '''
    metric_kind = MetricKind.from_name(metric_kind)
    scene = load_scene(buildings_path, terrain_path, use_index=use_index)
    parsed, dropped = read_measurements_csv(measurements_path, require_rsrq=metric_kind is MetricKind.RSSI)
    input_count = len(parsed) + len(dropped)

    records = []
    for record in parsed:
        if device_id is not None and record.device_id != device_id:
            dropped.append((record.record_id, "device_id filter"))
            continue
        try:
            assemble_features(record, scene, metric_kind, utc_offset_hours=utc_offset_hours)
        except FeatureRangeError as err:
            dropped.append((record.record_id, err.reason))
            logger.warning("Dropped record %s: %s", record.record_id, err.reason)
            continue
        except (SceneError, UnknownTransmitterError) as err:
            dropped.append((record.record_id, str(err)))
            logger.warning("Dropped record %s: %s", record.record_id, err)
            continue
        records.append(record)

    logger.info("Ingested %d rows: %d kept, %d dropped.", input_count, len(records), len(dropped))
    if input_count and not records:
        raise IngestError("zero valid rows out of " + str(input_count), position=str(measurements_path))
    return IngestResult(records, scene, dropped, input_count)
