'''
EvaluationReportClass.py: Contains the EvaluationReport class and the functions that build and write it.

Files written by emit_report:
    rmse_summary.csv      region, partition, count, rmse, estimate_rmse (empty cell = no samples / not applicable)
    kde_<region>.csv      grid, measured, predicted[, estimate]
    kde_<region>.svg      the same curves as a line chart
'''

# Python imports.
import logging
import os
import re

# Other imports.
import numpy as np
import pandas as pd

from radio_metrics.errors import ReportError
from radio_metrics.evaluation.metrics import kde, kde_grid, rmse_breakdown, silverman_bandwidth
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.utils import chart_utils

logger = logging.getLogger(__name__)

SUMMARY_FILE_NAME = "rmse_summary.csv"
SUMMARY_COLUMNS = ["region", "partition", "count", "rmse", "estimate_rmse"]


class EvaluationReport(object):

    def __init__(self, metric_kind, rows, curves):
        '''
        Args:
            metric_kind (MetricKind)
            rows (list of dict): rmse_breakdown rows.
            curves (dict): region -> {"grid", "measured", "predicted"[, "estimate"]} arrays.
        '''
        self.metric_kind = MetricKind.from_name(metric_kind)
        self.rows = list(rows)
        self.curves = dict(curves)

    @property
    def regions(self):
        return sorted(set(row["region"] for row in self.rows))

    def row(self, region, partition):
        for row in self.rows:
            if row["region"] == region and row["partition"] == partition:
                return row
        raise KeyError((region, partition))

    def summary_frame(self):
        return pd.DataFrame(self.rows, columns=SUMMARY_COLUMNS)

    def __str__(self):
        lines = ["(" + self.metric_kind.value + " RMSE, " + self.metric_kind.unit + ")"]
        for row in self.rows:
            value = "absent" if row["rmse"] is None else str(round(row["rmse"], 3))
            lines.append("\t" + row["region"] + " " + row["partition"] + " (" + str(row["count"]) + ") : " + value)
        return "\n".join(lines)


def _bandwidth(values, fallback):
    try:
        return silverman_bandwidth(values)
    except ReportError:
        return fallback


def _metric_of(predictions, metric_kind):
    ''' The metric named by the frame's metric column, checked against @metric_kind when both are present. '''
    named = sorted(set(predictions["metric"].dropna().astype(str))) if "metric" in predictions.columns else []
    if len(named) > 1:
        raise ReportError("(radio_metrics) Report Error: predictions mix metrics " + ", ".join(named) + ".")
    if not named:
        if metric_kind is None:
            raise ReportError("(radio_metrics) Report Error: predictions have no metric column and no metric was given.")
        return MetricKind.from_name(metric_kind)
    found = MetricKind.from_name(named[0])
    if metric_kind is not None and MetricKind.from_name(metric_kind) is not found:
        raise ReportError("(radio_metrics) Report Error: predictions are " + found.value + ", asked to evaluate "
                          + MetricKind.from_name(metric_kind).value + ".")
    return found


def evaluate(predictions, metric_kind=None):
    '''
    Args:
        predictions (pd.DataFrame): from run_experiments.predict; rows without a target are skipped.
        metric_kind (MetricKind): defaults to the frame's metric column.

    Returns:
        (EvaluationReport)
    '''
    metric_kind = _metric_of(predictions, metric_kind)
    frame = predictions[np.isfinite(predictions["target"].to_numpy(dtype=np.float64))]
    if frame.empty:
        raise ReportError("(radio_metrics) Report Error: no predictions with targets to evaluate.")
    with_estimate = metric_kind.residual
    rows = rmse_breakdown(frame["target"], frame["prediction"], frame["indoor"], frame["region"],
                          frame["estimate"] if with_estimate else None)

    curves = {}
    for region, group in frame.groupby("region", sort=True):
        series = {"measured": group["target"].to_numpy(dtype=np.float64),
                  "predicted": group["prediction"].to_numpy(dtype=np.float64)}
        if with_estimate:
            series["estimate"] = group["estimate"].to_numpy(dtype=np.float64)
        # Degenerate series fall back to the measured bandwidth, then to 1 dB.
        h_measured = _bandwidth(series["measured"], 1.0)
        grid = kde_grid(list(series.values()), h_measured)
        curve = {"grid": grid}
        for name, values in series.items():
            curve[name] = kde(values, grid, _bandwidth(values, h_measured))
        curves[str(region)] = curve
    return EvaluationReport(metric_kind, rows, curves)


def _file_token(region):
    return re.sub(r"[^A-Za-z0-9_.-]", "_", str(region))


def emit_report(report, path):
    '''
    Args:
        report (EvaluationReport)
        path (str): output directory, created if missing.

    Returns:
        (list of str): written files.

    Raises:
        ReportError: the directory cannot be written.
    '''
    written = []
    try:
        os.makedirs(path, exist_ok=True)
        summary_path = os.path.join(path, SUMMARY_FILE_NAME)
        report.summary_frame().to_csv(summary_path, index=False, lineterminator="\n")
        written.append(summary_path)
        for region in sorted(report.curves):
            curve = report.curves[region]
            columns = [name for name in ("grid", "measured", "predicted", "estimate") if name in curve]
            csv_path = os.path.join(path, "kde_" + _file_token(region) + ".csv")
            pd.DataFrame({name: curve[name] for name in columns}, columns=columns).to_csv(csv_path, index=False,
                                                                                         lineterminator="\n")
            svg_path = os.path.join(path, "kde_" + _file_token(region) + ".svg")
            chart_utils.plot_kde(curve["grid"], {k: v for k, v in curve.items() if k != "grid"}, svg_path,
                                 title=report.metric_kind.value + " " + str(region), x_label=report.metric_kind.unit)
            written.extend([csv_path, svg_path])
    except OSError as err:
        raise ReportError("(radio_metrics) Report Error: cannot write report to " + str(path) + " (" + str(err) + ").")
    logger.info("Wrote %d report files to %s.", len(written), path)
    return written
