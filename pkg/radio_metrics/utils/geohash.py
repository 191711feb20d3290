'''
geohash.py: Base-32 geohash encoding used for geographic splits and blind-test regions.

Functions:
    encode: (lat, lon, precision) -> code.
    decode: code -> GeohashCell.
    cell_of: MeasurementRecord -> geohash6 (or other precision) of the UE position.
'''

# Python imports.
import math
from dataclasses import dataclass

# Other imports.
from radio_metrics.errors import GeohashError

BASE32 = "0123456789bcdefghjkmnpqrstuvwxyz"
CHARMAP = {c: i for i, c in enumerate(BASE32)}
MAX_PRECISION = 12
_KM_PER_DEG = 6371.0 * math.pi / 180.0


@dataclass(frozen=True)
class GeohashCell(object):
    code: str
    lat_min: float
    lat_max: float
    lon_min: float
    lon_max: float

    @property
    def bounds(self):
        return (self.lat_min, self.lat_max, self.lon_min, self.lon_max)

    @property
    def center(self):
        ''' Returns (lat, lon) of the cell centre. '''
        return (self.lat_min + self.lat_max) / 2.0, (self.lon_min + self.lon_max) / 2.0

    @property
    def width_km(self):
        ''' East-west width at the cell's central latitude. '''
        return (self.lon_max - self.lon_min) * _KM_PER_DEG * math.cos(math.radians(self.center[0]))

    @property
    def height_km(self):
        return (self.lat_max - self.lat_min) * _KM_PER_DEG

    def contains(self, lat, lon):
        return self.lat_min <= lat <= self.lat_max and self.lon_min <= lon <= self.lon_max


def encode(lat, lon, precision=6):
    '''
    Args:
        lat (float)
        lon (float)
        precision (int): 1..12 characters.

    Returns:
        (str): interleaved-bit geohash, longitude bit first.
    '''
    if isinstance(precision, bool) or not isinstance(precision, int) or not 1 <= precision <= MAX_PRECISION:
        raise GeohashError("(radio_metrics) Geohash Error: precision must be an integer in [1, 12], got " + repr(precision) + ".")
    if not (math.isfinite(lat) and math.isfinite(lon)) or not -90.0 <= lat <= 90.0 or not -180.0 <= lon <= 180.0:
        raise GeohashError("(radio_metrics) Geohash Error: invalid coordinates (" + repr(lat) + ", " + repr(lon) + ").")

    lat_lo, lat_hi = -90.0, 90.0
    lon_lo, lon_hi = -180.0, 180.0
    is_lon = True
    code = []
    bit, ch = 0, 0
    while len(code) < precision:
        if is_lon:
            mid = (lon_lo + lon_hi) / 2
            if lon >= mid:
                ch |= 16 >> bit
                lon_lo = mid
            else:
                lon_hi = mid
        else:
            mid = (lat_lo + lat_hi) / 2
            if lat >= mid:
                ch |= 16 >> bit
                lat_lo = mid
            else:
                lat_hi = mid
        is_lon = not is_lon
        if bit < 4:
            bit += 1
        else:
            code.append(BASE32[ch])
            bit, ch = 0, 0
    return "".join(code)


def decode(code):
    '''
    Args:
        code (str)

    Returns:
        (GeohashCell): bounding box of the cell.
    '''
    if not isinstance(code, str) or not 1 <= len(code) <= MAX_PRECISION:
        raise GeohashError("(radio_metrics) Geohash Error: code must have 1 to 12 characters, got " + repr(code) + ".")
    lat_lo, lat_hi = -90.0, 90.0
    lon_lo, lon_hi = -180.0, 180.0
    is_lon = True
    for c in code:
        if c not in CHARMAP:
            raise GeohashError("(radio_metrics) Geohash Error: invalid character " + repr(c) + " in " + repr(code) + ".")
        d = CHARMAP[c]
        for mask in (16, 8, 4, 2, 1):
            if is_lon:
                mid = (lon_lo + lon_hi) / 2
                if d & mask:
                    lon_lo = mid
                else:
                    lon_hi = mid
            else:
                mid = (lat_lo + lat_hi) / 2
                if d & mask:
                    lat_lo = mid
                else:
                    lat_hi = mid
            is_lon = not is_lon
    return GeohashCell(code, lat_lo, lat_hi, lon_lo, lon_hi)


def cell_of(record, precision=6):
    '''
    Args:
        record (MeasurementRecord)
        precision (int)

    Returns:
        (str): geohash of the record's UE position.
    '''
    return encode(record.ue.lat, record.ue.lon, precision)
