#!/usr/bin/env python
'''
basic_test.py: Smoke test of the command line pipeline.

Runs synth -> ingest -> train -> predict -> evaluate -> export-kml in a
scratch directory and reports each step.
'''

# Python imports.
from __future__ import print_function
import json
import os
import subprocess
import sys
import tempfile

SMOKE_CONFIG = {
    "architecture": {"trunk": [16, 16], "head": [8, 1]},
    "train": {"max_epochs": 5, "batch_size": 32},
    "min_train_records": 20,
    "synth": {"grid_rows": 6, "grid_cols": 6, "n_samples": 400},
}


def run_step(args):
    '''
    Args:
        args (list of str): radio-metrics arguments.

    Returns:
        (bool): True if pass, False if error.
    '''
    try:
        fnull = open(os.devnull, 'w')
        subprocess.check_call([sys.executable, "-m", "radio_metrics.cli"] + args, stdout=fnull)
        return True
    except subprocess.CalledProcessError:
        return False


def main():
    # Add the package to the path.
    parent_dir = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir))
    os.environ["PYTHONPATH"] = parent_dir + os.pathsep + os.environ.get("PYTHONPATH", "")

    work = tempfile.mkdtemp(prefix="radio_metrics_")
    config = os.path.join(work, "config.json")
    with open(config, "w") as config_file:
        json.dump(SMOKE_CONFIG, config_file)

    data = os.path.join(work, "city")
    bundle = os.path.join(work, "bundle")
    preds = os.path.join(work, "predictions.csv")
    steps = [
        ("synth", ["synth", "--out", data]),
        ("ingest", ["ingest", "--data", data, "--out", os.path.join(work, "clean")]),
        ("train", ["train", "--data", data, "--out", bundle, "--results-dir", os.path.join(work, "results")]),
        ("predict", ["predict", "--data", data, "--bundle", bundle, "--region", "5", "--out", preds]),
        ("evaluate", ["evaluate", "--predictions", preds, "--out", os.path.join(work, "report")]),
        ("export-kml", ["export-kml", "--data", data, "--out", os.path.join(work, "links.kml")]),
    ]

    # Prints.
    print("\n" + "="*38)
    print("== Running", len(steps), "radio_metrics pipeline steps ==")
    print("="*38 + "\n")
    total_passed = 0

    # Run each step.
    for i, (name, args) in enumerate(steps):
        print("\t [Step", str(i + 1) + "] ", name + ": ",)
        if run_step(args + ["--config", config]):
            total_passed += 1
            print("\t\tPASS.")
        else:
            print("\t\tFAIL.")
            break

    # Results.
    print("\nResults:", total_passed, "/", len(steps), "passed. Outputs in", work)


if __name__ == "__main__":
    main()
