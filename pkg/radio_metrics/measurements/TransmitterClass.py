''' TransmitterClass.py: Contains the Transmitter class (an LTE cell antenna). '''

# Python imports.
import math
from dataclasses import dataclass

# Other imports.
from radio_metrics.scene.GeoPointClass import GeoPoint


@dataclass(frozen=True)
class Transmitter(object):
    '''
    Args:
        tx_id (str)
        lon (float)
        lat (float)
        height_m (float): antenna height above ground.
        power_dbm (float): TxPwr used verbatim in the RSRP estimate.
    '''

    tx_id: str
    lon: float
    lat: float
    height_m: float
    power_dbm: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.lon, self.lat, self.height_m, self.power_dbm)):
            raise ValueError("(radio_metrics) Transmitter Error: non-finite attribute on transmitter " + str(self.tx_id) + ".")

    @property
    def point(self):
        return GeoPoint(self.lon, self.lat, self.height_m)

    def get_parameters(self):
        return {"tx_id": self.tx_id, "lon": self.lon, "lat": self.lat,
                "height_m": self.height_m, "power_dbm": self.power_dbm}

    def __str__(self):
        return "tx-" + str(self.tx_id)
