'''
chart_utils.py: Charting utilities for radio metric experiments.

Functions:
    load_data: Loads per-epoch data from csv files into lists.
    plot_kde: Writes the measured / predicted / estimate density chart as SVG.
    plot_learning_curves: Writes train / validation RMSE per epoch as SVG.
    make_plots: Loads learning-curve csvs from an experiment directory and plots them.
    _format_title()

SVG output is byte-stable: no date metadata and a fixed id salt.
'''

# Python imports.
import os

# Other imports.
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as pyplot
from matplotlib.ticker import MaxNLocator

# Set font.
font = {'size': 12}
matplotlib.rc('font', **font)
matplotlib.rcParams['svg.hashsalt'] = "radio_metrics"
matplotlib.rcParams['svg.fonttype'] = "none"

# Measured blue, predicted orange, estimate green.
CURVE_COLORS = {"measured": "#1f77b4", "predicted": "#ff7f0e", "estimate": "#2ca02c"}
SERIES_COLORS = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"]
SVG_METADATA = {"Date": None, "Creator": None}


def load_data(experiment_dir, labels):
    '''
    Args:
        experiment_dir (str)
        labels (list): each has a <label>.csv of comma-terminated values.

    Returns:
        (list of lists of float)
    '''
    result = []
    for label in labels:
        with open(os.path.join(experiment_dir, str(label)) + ".csv", "r") as data_file:
            values = []
            for line in data_file.readlines():
                values.extend(float(v) for v in line.strip().split(",") if len(v) > 0)
        result.append(values)
    return result


def _format_title(plot_title):
    plot_title = plot_title.replace("_", " ")
    return plot_title[0].upper() + plot_title[1:] if plot_title else plot_title


def _save(path):
    pyplot.tight_layout()
    pyplot.savefig(path, format="svg", metadata=SVG_METADATA)
    pyplot.cla()
    pyplot.close()


def plot_kde(grid, curves, path, title="", x_label="dBm"):
    '''
    Args:
        grid (np.ndarray): evaluation points.
        curves (dict): name in {"measured", "predicted", "estimate"} -> density on @grid.
        path (str): output .svg file.
        title (str)
        x_label (str)
    '''
    pyplot.figure(figsize=(6.4, 4.0))
    for name in ("measured", "predicted", "estimate"):
        if name in curves:
            pyplot.plot(grid, curves[name], color=CURVE_COLORS[name], label=name)
    pyplot.xlabel(x_label)
    pyplot.ylabel("Density")
    if title:
        pyplot.title(_format_title(title))
    pyplot.legend(loc="upper right")
    pyplot.grid(True)
    _save(path)


def plot_learning_curves(history, path, title="learning_curve"):
    '''
    Args:
        history (dict): series name -> list of per-epoch values.
        path (str): output .svg file.
        title (str)
    '''
    ax = pyplot.figure(figsize=(6.4, 4.0)).gca()
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    for i, (name, values) in enumerate(sorted(history.items())):
        pyplot.plot(range(1, len(values) + 1), values, color=SERIES_COLORS[i % len(SERIES_COLORS)], label=name)
    pyplot.xlabel("Epoch Number")
    pyplot.ylabel("RMSE (dB)")
    pyplot.title(_format_title(title))
    pyplot.legend(loc="best")
    pyplot.grid(True)
    _save(path)


def make_plots(experiment_dir, labels, plot_file_name="learning_curve"):
    '''
    Summary:
        Plots each <label>.csv in @experiment_dir as a learning curve.
    '''
    data = load_data(experiment_dir, labels)
    history = {str(label): values for label, values in zip(labels, data)}
    path = os.path.join(experiment_dir, plot_file_name + ".svg")
    plot_learning_curves(history, path, title=plot_file_name)
    return path
