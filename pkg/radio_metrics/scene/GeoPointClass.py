''' GeoPointClass.py: Contains the GeoPoint class (geodetic position plus height above ground). '''

# Python imports.
import math
from dataclasses import dataclass

# Other imports.
from radio_metrics.errors import SceneError


@dataclass(frozen=True)
class GeoPoint(object):
    ''' A position in degrees with an altitude measured above the local ground (m). '''

    lon: float
    lat: float
    alt_ag_m: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.lon, self.lat, self.alt_ag_m)):
            raise SceneError("(radio_metrics) Scene Error: GeoPoint coordinates must be finite, got " + str(self) + ".")
        if not -180.0 <= self.lon <= 180.0:
            raise SceneError("(radio_metrics) Scene Error: longitude " + str(self.lon) + " outside [-180, 180].")
        if not -90.0 <= self.lat <= 90.0:
            raise SceneError("(radio_metrics) Scene Error: latitude " + str(self.lat) + " outside [-90, 90].")
        if self.alt_ag_m < 0:
            raise SceneError("(radio_metrics) Scene Error: altitude above ground must be >= 0, got " + str(self.alt_ag_m) + ".")

    def __str__(self):
        return "(" + str(self.lon) + ", " + str(self.lat) + ", " + str(self.alt_ag_m) + "m)"
