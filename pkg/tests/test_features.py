''' test_features.py: Feature assembly, range checks and standardization. '''

# Python imports.
import datetime
import math

# Other imports.
import numpy as np
import pytest

from radio_metrics.errors import FeatureRangeError, StandardizerError, UnknownTransmitterError
from radio_metrics.experiments import MetricKind
from radio_metrics.features import (Standardizer, apply_standardizer, assemble_features, assemble_link, feature_names,
                                    features_to_frame, fit_standardizer)
from radio_metrics.measurements import MeasurementRecord

from conftest import box, make_record, make_scene


class TestAssemble(object):

    def test_empty_scene_is_los(self, empty_scene):
        p, x = assemble_features(make_record(empty_scene), empty_scene, MetricKind.RSRP)
        assert p.line_of_sight == 1
        assert p.building_penetration_length_m == 0.0
        assert p.total_obstruction_length_3d_m == 0.0
        assert x.building_intersection_count_3d == 0
        assert x.tx_power == 43.0
        assert p.downlink_frequency == 1960.0

    def test_three_dimensional_distance(self, empty_scene):
        p, x = assemble_features(make_record(empty_scene, ue_xy=(120.0, -160.0)), empty_scene, MetricKind.RSRP)
        dz = (1.5 - 30.0) / 1000.0
        assert p.distance_to_transmitter_km == pytest.approx(math.sqrt(0.12 ** 2 + 0.16 ** 2 + dz ** 2), rel=1e-6)
        horizontal = math.sqrt(p.distance_to_transmitter_km ** 2 - dz ** 2)
        assert math.hypot(x.distance_x_km, x.distance_y_km) == pytest.approx(horizontal, rel=1e-6)
        assert x.distance_x_km == pytest.approx(0.12, rel=1e-6)
        assert x.distance_y_km == pytest.approx(-0.16, rel=1e-6)

    def test_horizontal_colocation(self, empty_scene):
        record = make_record(empty_scene, ue_xy=(0.0, 0.0), ue_alt=300.0, tx_height=30.0)
        p, x = assemble_features(record, empty_scene, MetricKind.RSRP)
        assert x.distance_x_km == 0.0
        assert x.distance_y_km == 0.0
        assert p.distance_to_transmitter_km == pytest.approx(0.27)

    def test_temporal_for_rsrq(self, empty_scene):
        # 2023-01-03 is a Tuesday.
        _, x = assemble_features(make_record(empty_scene), empty_scene, MetricKind.RSRQ)
        assert (x.day_of_week, x.hour_of_day) == (1, 14)
        assert x.names() == feature_names(True)
        assert len(x.vector()) == 13

    def test_no_temporal_for_rsrp(self, empty_scene):
        _, x = assemble_features(make_record(empty_scene), empty_scene, MetricKind.RSRP)
        assert not x.has_temporal
        assert len(x.vector()) == 11

    def test_temporal_switches(self, empty_scene):
        record = make_record(empty_scene)
        _, x = assemble_features(record, empty_scene, MetricKind.RSSI, temporal_for_rssi=False)
        assert not x.has_temporal
        _, x = assemble_features(record, empty_scene, MetricKind.RSRQ, use_temporal=False)
        assert not x.has_temporal

    def test_utc_offset(self, empty_scene):
        _, x = assemble_features(make_record(empty_scene), empty_scene, MetricKind.RSRQ, utc_offset_hours=-5.0)
        assert (x.day_of_week, x.hour_of_day) == (1, 9)
        stamp = datetime.datetime(2023, 1, 3, 2, 0, tzinfo=datetime.timezone.utc)
        _, x = assemble_features(make_record(empty_scene, timestamp=stamp), empty_scene, MetricKind.RSRQ, utc_offset_hours=-5.0)
        assert (x.day_of_week, x.hour_of_day) == (0, 21)

    def test_indoor_ue(self):
        scene = make_scene([box(200, 0, 20, 20)])
        p, x, link = assemble_link(make_record(scene), scene, MetricKind.RSRP)
        assert p.building_penetration_length_m > 0
        assert p.total_obstruction_length_3d_m == 0.0
        assert x.building_intersection_count_3d == 0
        assert link.ue_building_id == 0

    def test_obstructed_link(self):
        scene = make_scene([box(100, 0, 10, 40)])
        p, x = assemble_features(make_record(scene), scene, MetricKind.RSRP)
        assert p.line_of_sight == 0
        # 10 m of footprint along a ray descending 28.5 m over 200 m.
        assert p.total_obstruction_length_3d_m == pytest.approx(10.0 * math.hypot(200.0, 28.5) / 200.0, rel=1e-6)
        assert x.building_intersection_count_3d == 1

    def test_column_order(self):
        names = feature_names(True)
        assert names[0] == "downlink_frequency"
        assert names[6] == "total_obstruction_length_3d_m"
        assert names[-2:] == ("day_of_week", "hour_of_day")


class TestRanges(object):

    def test_far_ue_rejected(self):
        scene = make_scene(half_deg=0.1)
        with pytest.raises(FeatureRangeError) as info:
            assemble_features(make_record(scene, ue_xy=(5000.0, 0.0)), scene, MetricKind.RSRP)
        assert info.value.reason == "distance_to_transmitter_km out of range"

    def test_frequency_out_of_band(self, empty_scene):
        with pytest.raises(FeatureRangeError) as info:
            assemble_features(make_record(empty_scene, frequency=3500.0), empty_scene, MetricKind.RSRP)
        assert info.value.field == "downlink_frequency"

    def test_low_tx_power(self, empty_scene):
        with pytest.raises(FeatureRangeError):
            assemble_features(make_record(empty_scene, tx_power=10.0), empty_scene, MetricKind.RSRP)

    def test_unknown_transmitter(self, empty_scene):
        record = make_record(empty_scene)
        bare = MeasurementRecord("r2", record.timestamp, record.ue, None, 1960.0, -80.0, tx_id="missing")
        with pytest.raises(UnknownTransmitterError):
            assemble_features(bare, empty_scene, MetricKind.RSRP)

    def test_transmitter_table_lookup(self, empty_scene):
        record = make_record(empty_scene)
        bare = MeasurementRecord("r2", record.timestamp, record.ue, None, 1960.0, -80.0, tx_id="tx0")
        p, _ = assemble_features(bare, empty_scene, MetricKind.RSRP, transmitters={"tx0": record.transmitter})
        assert p.tx_height_m == 30.0


class TestStandardizer(object):

    def test_population_statistics(self):
        s = Standardizer.fit([[1.0, 10.0], [3.0, 10.0]], ["a", "b"])
        assert list(s.mean) == [2.0, 10.0]
        assert list(s.std) == [1.0, 1.0]
        assert list(s.apply([3.0, 12.0])) == [1.0, 2.0]

    def test_zero_variance_column(self):
        s = fit_standardizer(np.array([[5.0, 1.0], [5.0, 2.0], [5.0, 3.0]]))
        out = apply_standardizer(s, np.array([[5.0, 2.0]]))
        assert out[0, 0] == 0.0
        assert out[0, 1] == 0.0

    def test_invert(self):
        rng = np.random.default_rng(2)
        m = rng.normal(size=(50, 4)) * [1, 10, 100, 0.1]
        s = Standardizer.fit(m)
        np.testing.assert_allclose(s.invert(s.apply(m)), m, rtol=1e-12)
        z = s.apply(m)
        np.testing.assert_allclose(z.mean(axis=0), 0.0, atol=1e-12)
        np.testing.assert_allclose(z.std(axis=0), 1.0, rtol=1e-12)

    def test_dimension_mismatch(self):
        s = Standardizer.fit([[1.0, 2.0], [3.0, 4.0]])
        with pytest.raises(StandardizerError):
            s.apply([1.0, 2.0, 3.0])

    def test_single_row_rejected(self):
        with pytest.raises(StandardizerError):
            Standardizer.fit([[1.0, 2.0]])

    def test_fitted_on_marker(self):
        s = Standardizer.fit([[1.0], [2.0]], fitted_on="abc")
        s.require_fitted_on("abc")
        with pytest.raises(StandardizerError):
            s.require_fitted_on("def")

    def test_dict_round_trip(self):
        s = Standardizer.fit([[1.0, 2.0], [3.0, 7.0]], ["a", "b"], fitted_on="x")
        assert Standardizer.from_dict(s.to_dict()) == s


class TestFrame(object):

    def test_features_to_frame(self, empty_scene):
        xs = [assemble_features(make_record(empty_scene, record_id=str(i), ue_xy=(100.0 + i, 0.0)), empty_scene,
                                MetricKind.RSRQ)[1] for i in range(3)]
        frame = features_to_frame(["0", "1", "2"], xs, {"target": [1.0, 2.0, 3.0]})
        assert list(frame.columns) == ["record_id"] + list(feature_names(True)) + ["target"]
        assert len(frame) == 3
        assert list(frame["hour_of_day"]) == [14, 14, 14]
