''' test_geohash.py: Geohash encoding, decoding and cell geometry. '''

# Other imports.
import numpy as np
import pytest

from radio_metrics.errors import GeohashError
from radio_metrics.scene import GeoPoint
from radio_metrics.utils.geohash import cell_of, decode, encode

from conftest import make_record, make_scene


class TestEncode(object):

    def test_reference_vector(self):
        assert encode(57.64911, 10.40744, 11) == "u4pruydqqvj"

    def test_single_character(self):
        assert encode(0.0, 0.0, 1) == "s"

    def test_default_precision(self):
        assert len(encode(43.7, -79.4)) == 6

    @pytest.mark.parametrize("precision", [0, 13, -1, 2.5, True])
    def test_bad_precision(self, precision):
        with pytest.raises(GeohashError):
            encode(43.7, -79.4, precision)

    def test_bad_coordinates(self):
        with pytest.raises(GeohashError):
            encode(91.0, 0.0, 6)
        with pytest.raises(GeohashError):
            encode(float("nan"), 0.0, 6)

    def test_prefix_nesting(self):
        rng = np.random.default_rng(7)
        for lat, lon in zip(rng.uniform(-90, 90, 200), rng.uniform(-180, 180, 200)):
            for k in range(1, 12):
                assert encode(lat, lon, k + 1).startswith(encode(lat, lon, k))


class TestDecode(object):

    def test_first_level_cell(self):
        cell = decode("s")
        assert (cell.lat_min, cell.lat_max) == (0.0, 45.0)
        assert (cell.lon_min, cell.lon_max) == (0.0, 45.0)

    def test_invalid_codes(self):
        for code in ["", "a", "dpz83a", "0123456789bcd"]:
            with pytest.raises(GeohashError):
                decode(code)

    def test_round_trip(self):
        rng = np.random.default_rng(11)
        for lat, lon in zip(rng.uniform(-89.9, 89.9, 10000), rng.uniform(-179.9, 179.9, 10000)):
            code = encode(lat, lon, 6)
            cell = decode(code)
            assert cell.contains(lat, lon)
            assert encode(*cell.center, 6) == code

    def test_toronto_cell_size(self):
        cell = decode("dpz833")
        assert 0.586 <= cell.height_km <= 0.70
        assert cell.width_km == pytest.approx(0.88, abs=0.02)


class TestCellOf(object):

    def test_record_inside_holdout_cell(self):
        lat, lon = decode("dpz833").center
        scene = make_scene()
        record = make_record(scene)
        moved = record.__class__(record.record_id, record.timestamp, GeoPoint(lon, lat, 1.5), record.transmitter,
                                 record.frequency_mhz, record.rsrp_dbm, record.rsrq_db)
        assert cell_of(moved) == "dpz833"
        assert moved.geohash6 == "dpz833"

    def test_neighbours_share_code(self):
        lat, lon = decode("dpz833").center
        # One metre is about 9e-6 degrees of latitude.
        assert encode(lat, lon, 6) == encode(lat + 9e-6, lon, 6)
