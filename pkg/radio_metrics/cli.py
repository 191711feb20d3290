#!/usr/bin/env python
'''
cli.py: Command line surface for the radio metric pipeline.

Subcommands:
    synth       Generate a synthetic city (measurements.csv, buildings.geojson, terrain.asc).
    ingest      Clean a measurement set against a scene; writes kept rows and a drop log.
    features    Write the engineered feature table.
    train       Train a correction model and save its bundle.
    search      Random hyperparameter search.
    predict     Predict a metric with a saved bundle.
    evaluate    RMSE breakdown and KDE curves from a predictions file.
    export-kml  LOS/NLOS link visualization.

Exit codes: 0 success, 1 runtime error (one "error: <Class>: <message>" line on stderr), 2 usage error.
'''

# Python imports.
import argparse
import json
import logging
import os
import sys

# Other imports.
import pandas as pd

from radio_metrics._version import __version__
from radio_metrics.errors import RadioMetricsError
from radio_metrics.evaluation.EvaluationReportClass import emit_report, evaluate
from radio_metrics.experiments.DatasetClass import build_dataset
from radio_metrics.experiments.ExperimentClass import Experiment
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.experiments.ModelBundleClass import ModelBundle
from radio_metrics.experiments.PipelineConfigClass import PipelineConfig
from radio_metrics.experiments.SplitManifestClass import TEST, TRAIN, VALIDATION, SplitManifest
from radio_metrics.features.feature_helpers import assemble_features, features_to_frame
from radio_metrics.run_experiments import hyper_search, predict, train_model
from radio_metrics.tasks.synthetic_city.SynthConfigClass import SynthConfig
from radio_metrics.tasks.synthetic_city.SyntheticCityClass import SyntheticCity
from radio_metrics.utils.additional_datastructures import dumps
from radio_metrics.utils.ingest import ingest, write_drop_log, write_measurements_csv
from radio_metrics.utils.kml_export import export_kml

logger = logging.getLogger(__name__)

SPLIT_MANIFEST_FILE_NAME = "split_manifest.json"
CONFIG_FILE_NAME = "config.json"
DROP_LOG_FILE_NAME = "dropped.csv"


# -------------
# -- Parsing --
# -------------

def _common_parser():
    # Global flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=argparse.SUPPRESS, help="JSON pipeline configuration file.")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="Overrides the configured seed.")
    common.add_argument("--metric", choices=[m.value for m in MetricKind], default=argparse.SUPPRESS,
                        help="Overrides the configured metric.")
    common.add_argument("--verbose", "-v", action="store_true", default=argparse.SUPPRESS, help="Debug logging.")
    return common


def _add_data_args(parser):
    parser.add_argument("--data", type=str, help="Directory holding measurements.csv, buildings.geojson and terrain.asc.")
    parser.add_argument("--measurements", type=str, help="Measurement CSV (overrides --data).")
    parser.add_argument("--buildings", type=str, help="Buildings GeoJSON (overrides --data).")
    parser.add_argument("--terrain", type=str, help="ESRI ASCII terrain grid (overrides --data).")
    parser.add_argument("--device-id", type=str, default=None, help="Keep only this device's records.")
    parser.add_argument("--drop-log", type=str, default=None, help="Write (record_id, reason) for dropped rows here.")


def _region_arg(text):
    ''' A number is a geohash prefix length, anything else a fixed region label. '''
    return int(text) if text.isdigit() else text


def parse_args(argv=None):
    '''
    Args:
        argv (list of str)

    Returns:
        (argparse.Namespace)
    '''
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="radio-metrics", parents=[common],
                                     description="Radio metric prediction from propagation estimates and a correction network.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    synth = subparsers.add_parser("synth", parents=[common], help="Generate a synthetic city.")
    synth.add_argument("--out", type=str, required=True, help="Output directory.")
    synth.add_argument("--samples", type=int, default=None, help="Overrides the number of measurements.")

    ingest_cmd = subparsers.add_parser("ingest", parents=[common], help="Clean measurements against a scene.")
    _add_data_args(ingest_cmd)
    ingest_cmd.add_argument("--out", type=str, required=True, help="Output directory for kept rows and the drop log.")

    features = subparsers.add_parser("features", parents=[common], help="Write the engineered feature table.")
    _add_data_args(features)
    features.add_argument("--out", type=str, required=True, help="Output CSV.")

    train = subparsers.add_parser("train", parents=[common], help="Train a correction model.")
    _add_data_args(train)
    train.add_argument("--holdout-geohash", type=str, default=None,
                       help="Comma separated geohash codes (or prefixes) withheld as the blind test.")
    train.add_argument("--out", type=str, required=True, help="Bundle directory.")
    train.add_argument("--results-dir", type=str, default=None, help="Experiment directory (learning curves).")

    search = subparsers.add_parser("search", parents=[common], help="Random hyperparameter search.")
    _add_data_args(search)
    search.add_argument("--holdout-geohash", type=str, default=None, help="Comma separated blind-test geohash codes.")
    search.add_argument("--trials", type=int, default=None, help="Overrides the configured trial count.")
    search.add_argument("--out", type=str, required=True, help="Directory for trials.csv and best.json.")

    predict_cmd = subparsers.add_parser("predict", parents=[common], help="Predict with a saved bundle.")
    _add_data_args(predict_cmd)
    predict_cmd.add_argument("--bundle", type=str, required=True, help="Bundle directory.")
    predict_cmd.add_argument("--split", choices=[TRAIN, VALIDATION, TEST], default=None,
                             help="Only records of this split of the bundle's split manifest.")
    predict_cmd.add_argument("--manifest", type=str, default=None, help="Split manifest (default: the bundle's).")
    predict_cmd.add_argument("--region", type=_region_arg, default=None,
                             help="Region label, or a geohash prefix length to group by.")
    predict_cmd.add_argument("--out", type=str, required=True, help="Predictions CSV.")

    evaluate_cmd = subparsers.add_parser("evaluate", parents=[common], help="RMSE table and KDE curves.")
    evaluate_cmd.add_argument("--predictions", type=str, required=True, help="Predictions CSV from predict.")
    evaluate_cmd.add_argument("--out", type=str, required=True, help="Report directory.")

    kml = subparsers.add_parser("export-kml", parents=[common], help="Write tx-UE links colored by LOS class.")
    _add_data_args(kml)
    kml.add_argument("--out", type=str, required=True, help="KML file.")

    return parser.parse_args(argv)


# -------------
# -- Helpers --
# -------------

def _load_config(args):
    config = PipelineConfig.load(args.config) if getattr(args, "config", None) else PipelineConfig()
    return config.with_overrides(seed=getattr(args, "seed", None), metric=getattr(args, "metric", None))


def _data_paths(args):
    base = args.data
    paths = {"measurements": args.measurements, "buildings": args.buildings, "terrain": args.terrain}
    names = {"measurements": SyntheticCity.MEASUREMENTS_FILE_NAME, "buildings": SyntheticCity.BUILDINGS_FILE_NAME,
             "terrain": SyntheticCity.TERRAIN_FILE_NAME}
    for kind in paths:
        if paths[kind] is None:
            if base is None:
                raise RadioMetricsError("(radio_metrics) CLI Error: no " + kind + " file (give --data or --" + kind + ").")
            paths[kind] = os.path.join(base, names[kind])
    return paths


def _ingest(args, config, metric_kind=None):
    paths = _data_paths(args)
    result = ingest(paths["measurements"], paths["buildings"], paths["terrain"],
                    metric_kind=metric_kind or config.metric, device_id=args.device_id,
                    utc_offset_hours=config.features["utc_offset_hours"])
    if args.drop_log:
        write_drop_log(result.dropped, args.drop_log)
    return result


def _holdout_config(config, holdout_text):
    if not holdout_text:
        return config
    codes = [code.strip() for code in holdout_text.split(",") if code.strip()]
    return config.with_overrides(split=dict(config.split, holdout_geohashes=codes))


def _write_json(obj, path):
    with open(path, "w") as out_file:
        out_file.write(dumps(obj) + "\n")


# --------------
# -- Commands --
# --------------

def run_synth(args, config):
    params = config.synth
    if "seed" not in params or getattr(args, "seed", None) is not None:
        params["seed"] = config.seed
    if args.samples is not None:
        params["n_samples"] = args.samples
    city = SyntheticCity(SynthConfig.from_parameters(params))
    paths = city.emit_files(args.out)
    _write_json(city.get_parameters(), os.path.join(args.out, "synth_config.json"))
    print("synth: " + str(city) + " -> " + paths["measurements"])


def run_ingest(args, config):
    result = _ingest(args, config)
    os.makedirs(args.out, exist_ok=True)
    write_measurements_csv(result.records, os.path.join(args.out, SyntheticCity.MEASUREMENTS_FILE_NAME))
    write_drop_log(result.dropped, os.path.join(args.out, DROP_LOG_FILE_NAME))
    print("ingest: " + str(result.input_count) + " rows, " + str(len(result.records)) + " kept, "
          + str(len(result.dropped)) + " dropped")


def run_features(args, config):
    result = _ingest(args, config)
    settings = config.features
    dataset = build_dataset(result.records, result.scene, config.metric, config.path_loss_model(),
                            config.n_resource_blocks, settings)
    engineered = [assemble_features(r, result.scene, config.metric, None, settings["use_temporal"],
                                    settings["temporal_for_rssi"], settings["utc_offset_hours"])[1]
                  for r in dataset.records]
    frame = features_to_frame(dataset.ids, engineered, {"rsrp_estimate_dbm": dataset.beta, "target": dataset.targets,
                                                        "line_of_sight_class": [str(c) for c in dataset.los]})
    frame.to_csv(args.out, index=False, lineterminator="\n")
    print("features: " + str(len(frame)) + " rows -> " + args.out)


def run_train(args, config):
    config = _holdout_config(config, args.holdout_geohash)
    result = _ingest(args, config)
    experiment = None
    if args.results_dir:
        experiment = Experiment(config.metric.value, config, scene=result.scene, results_dir=args.results_dir,
                                params={"input_count": result.input_count, "dropped": len(result.dropped)})
    bundle = train_model(result.records, result.scene, config.metric, config, experiment=experiment)
    bundle.save(args.out)
    _write_json(bundle.manifest_split.to_dict(), os.path.join(args.out, SPLIT_MANIFEST_FILE_NAME))
    config.save(os.path.join(args.out, CONFIG_FILE_NAME))
    print("train: " + str(bundle) + " validation RMSE " + str(bundle.metrics["validation_rmse"]) + " dB -> " + args.out)


def run_search(args, config):
    config = _holdout_config(config, args.holdout_geohash)
    result = _ingest(args, config)
    experiment = Experiment("search-" + config.metric.value, config, scene=result.scene, results_dir=args.out,
                            exp_function="hyper_search")
    best, _ = hyper_search(result.records, result.scene, config.metric, trials=args.trials, config=config,
                           experiment=experiment)
    best_path = os.path.join(experiment.exp_directory, "best.json")
    _write_json(best, best_path)
    print("search: best trial " + str(best["trial"]) + " validation RMSE " + str(best["validation_rmse"])
          + " dB -> " + best_path)


def run_predict(args, config):
    bundle = ModelBundle.load(args.bundle)
    result = _ingest(args, config, metric_kind=bundle.metric_kind)
    records = result.records
    if args.split is not None:
        manifest_path = args.manifest or os.path.join(args.bundle, SPLIT_MANIFEST_FILE_NAME)
        with open(manifest_path, "r") as manifest_file:
            manifest = SplitManifest.from_dict(json.load(manifest_file))
        keep = set(manifest.ids[args.split])
        records = [r for r in records if r.record_id in keep]
    region = args.region if args.region is not None else config.region_label
    frame = predict(bundle, records, result.scene, region=region)
    frame.to_csv(args.out, index=False, lineterminator="\n")
    print("predict: " + str(len(frame)) + " rows -> " + args.out)


def run_evaluate(args, config):
    frame = pd.read_csv(args.predictions, dtype={"record_id": str, "metric": str, "geohash6": str, "region": str})
    frame["indoor"] = frame["indoor"].astype(bool)
    # The metric column wins; older files without one fall back to the configured metric.
    report = evaluate(frame, None if "metric" in frame.columns else config.metric)
    emit_report(report, args.out)
    print(str(report))


def run_export_kml(args, config):
    result = _ingest(args, config)
    count = export_kml(result.records, result.scene, args.out)
    print("export-kml: " + str(count) + " links -> " + args.out)


COMMANDS = {
    "synth": run_synth,
    "ingest": run_ingest,
    "features": run_features,
    "train": run_train,
    "search": run_search,
    "predict": run_predict,
    "evaluate": run_evaluate,
    "export-kml": run_export_kml,
}


def main(argv=None):
    '''
    Returns:
        (int): exit code.
    '''
    args = parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if getattr(args, "verbose", False) else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        config = _load_config(args)
        COMMANDS[args.command](args, config)
    except (RadioMetricsError, OSError, ValueError) as err:
        message = " ".join(str(err).split())
        sys.stderr.write("error: " + type(err).__name__ + ": " + message + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
