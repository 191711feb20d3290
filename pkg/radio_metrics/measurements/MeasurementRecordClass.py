'''
MeasurementRecordClass.py: Contains the MeasurementRecord class.

One crowdsourced UE report: position, serving transmitter, carrier frequency and
the measured RSRP/RSRQ. RSSI is never stored; it is derived from RSRP and RSRQ.
'''

# Python imports.
import datetime
from dataclasses import dataclass, field
from typing import Optional

# Other imports.
from radio_metrics.propagation.radio_identities import N_RESOURCE_BLOCKS, rssi_from_rsrp_rsrq
from radio_metrics.scene.GeoPointClass import GeoPoint
from radio_metrics.measurements.TransmitterClass import Transmitter
from radio_metrics.utils import geohash


@dataclass(frozen=True)
class MeasurementRecord(object):
    record_id: str
    timestamp: datetime.datetime
    ue: GeoPoint
    transmitter: Optional[Transmitter]
    frequency_mhz: float
    rsrp_dbm: Optional[float] = None
    rsrq_db: Optional[float] = None
    tx_id: Optional[str] = None
    device_id: Optional[str] = None
    geohash6: str = field(default="", compare=False)

    def __post_init__(self):
        if self.timestamp.tzinfo is None:
            object.__setattr__(self, "timestamp", self.timestamp.replace(tzinfo=datetime.timezone.utc))
        if self.tx_id is None and self.transmitter is not None:
            object.__setattr__(self, "tx_id", self.transmitter.tx_id)
        if not self.geohash6:
            object.__setattr__(self, "geohash6", geohash.encode(self.ue.lat, self.ue.lon, 6))

    def rssi_dbm(self, n_rb=N_RESOURCE_BLOCKS):
        '''
        Returns:
            (float or None): RSSI from the RSRP/RSRQ identity, None when either is missing.
        '''
        if self.rsrp_dbm is None or self.rsrq_db is None:
            return None
        return rssi_from_rsrp_rsrq(self.rsrp_dbm, self.rsrq_db, n_rb)

    def target(self, metric_kind, n_rb=N_RESOURCE_BLOCKS):
        '''
        Args:
            metric_kind (MetricKind)
            n_rb (int)

        Returns:
            (float or None): the measured value of the requested metric.
        '''
        name = metric_kind.name
        if name == "RSRP":
            return self.rsrp_dbm
        if name == "RSRQ":
            return self.rsrq_db
        return self.rssi_dbm(n_rb)

    def local_time(self, utc_offset_hours=0.0):
        return self.timestamp.astimezone(datetime.timezone(datetime.timedelta(hours=utc_offset_hours)))

    def __str__(self):
        return "record-" + str(self.record_id)
