''' test_evaluation.py: RMSE breakdowns, kernel densities and report files. '''

# Python imports.
import math
import os

# Other imports.
import numpy as np
import pandas as pd
import pytest

from radio_metrics.errors import ReportError
from radio_metrics.evaluation import emit_report, evaluate, kde, kde_grid, rmse, rmse_breakdown, silverman_bandwidth
from radio_metrics.evaluation.EvaluationReportClass import SUMMARY_COLUMNS, SUMMARY_FILE_NAME
from radio_metrics.run_experiments import PREDICTION_COLUMNS


def _predictions(n=200, seed=0, regions=("dpz8", "dpz9"), metric="rsrp"):
    rng = np.random.default_rng(seed)
    target = rng.normal(-95.0, 8.0, n)
    return pd.DataFrame({
        "record_id": ["r" + str(i) for i in range(n)],
        "metric": [metric] * n,
        "geohash6": ["dpz833"] * n,
        "region": [regions[i % len(regions)] for i in range(n)],
        "indoor": rng.random(n) < 0.3,
        "target": target,
        "prediction": target + rng.normal(0.0, 3.0, n),
        "estimate": target + rng.normal(2.0, 7.0, n),
    }, columns=PREDICTION_COLUMNS)


class TestRmse(object):

    def test_value(self):
        assert rmse([3.0, 4.0], [0.0, 0.0]) == pytest.approx(math.sqrt(12.5))

    def test_empty(self):
        with pytest.raises(ReportError):
            rmse([], [])

    def test_pooling_identity(self):
        frame = _predictions(regions=("all",))
        rows = {r["partition"]: r for r in rmse_breakdown(frame["target"], frame["prediction"], frame["indoor"])}
        pooled = rows["indoor"]["rmse"] ** 2 * rows["indoor"]["count"] + rows["outdoor"]["rmse"] ** 2 * rows["outdoor"]["count"]
        assert rows["overall"]["count"] == rows["indoor"]["count"] + rows["outdoor"]["count"]
        assert rows["overall"]["rmse"] ** 2 * rows["overall"]["count"] == pytest.approx(pooled, rel=1e-9)

    def test_empty_partition(self):
        rows = rmse_breakdown([1.0, 2.0], [1.5, 2.5], [False, False])
        indoor = [r for r in rows if r["partition"] == "indoor"][0]
        assert indoor["count"] == 0
        assert indoor["rmse"] is None
        assert [r["partition"] for r in rows] == ["indoor", "outdoor", "overall"]

    def test_estimate_column(self):
        rows = rmse_breakdown([0.0, 0.0], [1.0, 1.0], [True, False], estimates=[2.0, 2.0])
        assert all(r["estimate_rmse"] == 2.0 for r in rows)


class TestKde(object):

    def test_two_points(self):
        density = kde([-1.0, 1.0], [0.0], bandwidth=1.0)
        assert density[0] == pytest.approx(math.exp(-0.5) / math.sqrt(2 * math.pi), abs=1e-12)
        assert density[0] == pytest.approx(0.2420, abs=1e-4)

    def test_integrates_to_one(self):
        values = np.random.default_rng(3).normal(-90.0, 6.0, 500)
        h = silverman_bandwidth(values)
        grid = np.linspace(values.min() - 6 * h, values.max() + 6 * h, 4000)
        density = kde(values, grid)
        area = float(np.sum((density[1:] + density[:-1]) / 2.0 * np.diff(grid)))
        assert area == pytest.approx(1.0, abs=1e-3)

    def test_repeated_value(self):
        grid = np.linspace(-5.0, 5.0, 11)
        density = kde([2.0, 2.0, 2.0], grid, bandwidth=0.5)
        expected = np.exp(-0.5 * ((grid - 2.0) / 0.5) ** 2) / (0.5 * math.sqrt(2 * math.pi))
        np.testing.assert_allclose(density, expected, rtol=1e-12)

    def test_degenerate_auto_bandwidth(self):
        with pytest.raises(ReportError):
            kde([3.0, 3.0], [0.0])

    def test_silverman(self):
        values = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
        assert silverman_bandwidth(values) == pytest.approx(1.06 * np.std(values, ddof=1) * 5 ** -0.2)

    def test_grid_covers_all_series(self):
        grid = kde_grid([np.array([0.0, 1.0]), np.array([-3.0])], 0.5, points=9, pad=2.0)
        assert grid[0] == -4.0
        assert grid[-1] == 2.0
        assert len(grid) == 9


class TestReport(object):

    def test_rows_per_region(self):
        report = evaluate(_predictions(), "rsrp")
        assert report.regions == ["dpz8", "dpz9"]
        assert len(report.rows) == 6
        assert set(report.curves) == {"dpz8", "dpz9"}
        assert set(report.curves["dpz8"]) == {"grid", "measured", "predicted", "estimate"}

    def test_direct_metric_has_no_estimate(self):
        report = evaluate(_predictions(metric="rsrq"), "rsrq")
        assert "estimate" not in report.curves["dpz8"]
        assert all(r["estimate_rmse"] is None for r in report.rows)

    def test_metric_taken_from_frame(self):
        report = evaluate(_predictions(metric="rsrq"))
        assert report.metric_kind.value == "rsrq"
        assert "estimate" not in report.curves["dpz8"]

    def test_metric_disagreement_rejected(self):
        with pytest.raises(ReportError):
            evaluate(_predictions(metric="rsrq"), "rsrp")

    def test_mixed_metrics_rejected(self):
        frame = _predictions(n=10)
        frame.loc[0, "metric"] = "rssi"
        with pytest.raises(ReportError):
            evaluate(frame)

    def test_no_metric_anywhere(self):
        with pytest.raises(ReportError):
            evaluate(_predictions().drop(columns=["metric"]))

    def test_missing_targets_skipped(self):
        frame = _predictions(n=20)
        frame.loc[0:4, "target"] = np.nan
        report = evaluate(frame, "rsrp")
        assert sum(r["count"] for r in report.rows if r["partition"] == "overall") == 15

    def test_no_targets(self):
        frame = _predictions(n=4)
        frame["target"] = np.nan
        with pytest.raises(ReportError):
            evaluate(frame, "rsrp")

    def test_constant_series_falls_back(self):
        frame = _predictions(n=10, regions=("all",))
        frame["prediction"] = -90.0
        report = evaluate(frame, "rsrp")
        assert np.all(np.isfinite(report.curves["all"]["predicted"]))

    def test_emit_report(self, tmp_path):
        report = evaluate(_predictions(), "rsrp")
        written = emit_report(report, str(tmp_path / "a"))
        summary = pd.read_csv(str(tmp_path / "a" / SUMMARY_FILE_NAME))
        assert list(summary.columns) == SUMMARY_COLUMNS
        assert len(summary) == 2 * 3
        assert len(written) == 5
        for name in ("kde_dpz8.csv", "kde_dpz8.svg", "kde_dpz9.csv", "kde_dpz9.svg"):
            assert os.path.isfile(str(tmp_path / "a" / name))

    def test_emit_report_is_byte_stable(self, tmp_path):
        emit_report(evaluate(_predictions(), "rsrp"), str(tmp_path / "a"))
        emit_report(evaluate(_predictions(), "rsrp"), str(tmp_path / "b"))
        for name in sorted(os.listdir(str(tmp_path / "a"))):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
