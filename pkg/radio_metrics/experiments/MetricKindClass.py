''' MetricKindClass.py: Contains the MetricKind enum (RSRP, RSRQ, RSSI). '''

# Python imports.
from enum import Enum


class MetricKind(Enum):
    RSRP = "rsrp"
    RSRQ = "rsrq"
    RSSI = "rssi"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, MetricKind):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError("(radio_metrics) Metric Error: unknown metric '" + str(name) + "', expected one of rsrp, rsrq, rssi.")

    @property
    def residual(self):
        ''' True when the network output is added to the RSRP estimate (RSRP, RSSI). RSRQ is predicted directly. '''
        return self is not MetricKind.RSRQ

    @property
    def unit(self):
        return "dB" if self is MetricKind.RSRQ else "dBm"

    def uses_temporal(self, use_temporal=True, temporal_for_rssi=True):
        if not use_temporal or self is MetricKind.RSRP:
            return False
        if self is MetricKind.RSSI:
            return bool(temporal_for_rssi)
        return True

    def __str__(self):
        return self.value
