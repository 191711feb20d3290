'''
metrics.py: RMSE breakdowns and Gaussian kernel density estimates.

Functions:
    rmse: root mean squared error.
    rmse_breakdown: per-region indoor / outdoor / overall RMSE rows.
    silverman_bandwidth: 1.06 * sample std * n^(-1/5).
    kde: Gaussian kernel density on a grid.
    kde_grid: evenly spaced grid covering a set of series.
'''

# Python imports.
import math

# Other imports.
import numpy as np

from radio_metrics.errors import ReportError

PARTITIONS = ("indoor", "outdoor", "overall")
GRID_POINTS = 256


def rmse(predictions, targets):
    '''
    Returns:
        (float): sqrt(mean((prediction - target)^2)).
    '''
    predictions = np.asarray(predictions, dtype=np.float64).reshape(-1)
    targets = np.asarray(targets, dtype=np.float64).reshape(-1)
    if predictions.shape != targets.shape:
        raise ReportError("(radio_metrics) Report Error: " + str(predictions.size) + " predictions for "
                          + str(targets.size) + " targets.")
    if predictions.size == 0:
        raise ReportError("(radio_metrics) Report Error: RMSE of an empty set.")
    e = predictions - targets
    return float(np.sqrt(np.mean(e * e)))


def rmse_breakdown(targets, predictions, indoor, regions=None, estimates=None):
    '''
    Args:
        targets (array-like)
        predictions (array-like)
        indoor (array-like of bool): per record, from Scene.is_indoor.
        regions (array-like of str): per-record region label; one region "all" when absent.
        estimates (array-like): initial estimates, reported alongside when given.

    Returns:
        (list of dict): for each region (sorted) the indoor, outdoor and overall rows with
        keys region, partition, count, rmse, estimate_rmse. Empty partitions carry rmse None.
    '''
    targets = np.asarray(targets, dtype=np.float64)
    predictions = np.asarray(predictions, dtype=np.float64)
    indoor = np.asarray(indoor, dtype=bool)
    regions = np.asarray(["all"] * len(targets) if regions is None else [str(r) for r in regions], dtype=object)
    estimates = None if estimates is None else np.asarray(estimates, dtype=np.float64)

    rows = []
    for region in sorted(set(regions)):
        in_region = regions == region
        for partition in PARTITIONS:
            mask = in_region.copy()
            if partition == "indoor":
                mask &= indoor
            elif partition == "outdoor":
                mask &= ~indoor
            count = int(mask.sum())
            row = {"region": region, "partition": partition, "count": count, "rmse": None, "estimate_rmse": None}
            if count:
                row["rmse"] = rmse(predictions[mask], targets[mask])
                if estimates is not None:
                    row["estimate_rmse"] = rmse(estimates[mask], targets[mask])
            rows.append(row)
    return rows


def silverman_bandwidth(values):
    values = np.asarray(values, dtype=np.float64)
    if values.size < 2:
        raise ReportError("(radio_metrics) Report Error: automatic bandwidth needs at least 2 values.")
    sigma = float(np.std(values, ddof=1))
    if not sigma > 0:
        raise ReportError("(radio_metrics) Report Error: zero-variance input has no automatic bandwidth.")
    return 1.06 * sigma * values.size ** (-0.2)


def kde(values, grid, bandwidth=None):
    '''
    Args:
        values (array-like)
        grid (array-like): evaluation points.
        bandwidth (float): Gaussian kernel std; Silverman's rule when None.

    Returns:
        (np.ndarray): density at each grid point.
    '''
    values = np.asarray(values, dtype=np.float64).reshape(-1)
    grid = np.asarray(grid, dtype=np.float64).reshape(-1)
    if values.size == 0:
        raise ReportError("(radio_metrics) Report Error: KDE of an empty set.")
    h = silverman_bandwidth(values) if bandwidth is None else float(bandwidth)
    if not h > 0:
        raise ReportError("(radio_metrics) Report Error: bandwidth must be positive, got " + repr(bandwidth) + ".")
    density = np.zeros(grid.size)
    # Chunked over values to bound memory.
    for start in range(0, values.size, 4096):
        u = (grid[:, None] - values[None, start:start + 4096]) / h
        density += np.exp(-0.5 * u * u).sum(axis=1)
    return density / (values.size * h * math.sqrt(2.0 * math.pi))


def kde_grid(series, bandwidth, points=GRID_POINTS, pad=4.0):
    '''
    Returns:
        (np.ndarray): @points evenly spaced values from min - pad*h to max + pad*h over all @series.
    '''
    lo = min(float(np.min(s)) for s in series)
    hi = max(float(np.max(s)) for s in series)
    return np.linspace(lo - pad * bandwidth, hi + pad * bandwidth, points)
