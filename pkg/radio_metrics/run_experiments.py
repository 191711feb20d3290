#!/usr/bin/env python
'''
Code for running radio metric modeling experiments.

Instructions:
    (1) Load or synthesize records and a Scene.
    (2) Make a PipelineConfig (metric, path loss seed model, architecture, training, split).
    (3) Call train_model(records, scene, metric_kind, config) or hyper_search(...).
    (4) Call predict(bundle, records, scene) and evaluate the predictions.

    -> Writes learning curves and parameter files when given an Experiment.
'''

# Python imports.
import logging
import time

# Other imports.
import numpy as np
import pandas as pd

from radio_metrics.correction.AdamWOptimizerClass import AdamWOptimizer
from radio_metrics.correction.ArchitectureClass import Architecture
from radio_metrics.correction.CorrectionNetworkClass import CorrectionNetwork, train_step
from radio_metrics.errors import NonFiniteLossError, SchemaMismatchError, SearchError, SplitError
from radio_metrics.evaluation.metrics import rmse
from radio_metrics.experiments.DatasetClass import build_dataset
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.experiments.ModelBundleClass import ModelBundle
from radio_metrics.experiments.PipelineConfigClass import PipelineConfig
from radio_metrics.experiments.SplitManifestClass import (BoundarySplitRule, GeohashFractionSplitRule, HoldoutSplitRule,
                                                          split_records)
from radio_metrics.features.StandardizerClass import Standardizer
from radio_metrics.propagation.radio_identities import compose_prediction

logger = logging.getLogger(__name__)

PREDICTION_COLUMNS = ["record_id", "metric", "geohash6", "region", "indoor", "target", "prediction", "estimate"]


# ---------------
# -- Splitting --
# ---------------

def split_rule_from_config(config):
    '''
    Returns:
        (tuple): (train/validation rule, HoldoutSplitRule)
    '''
    split = config.split
    if split.get("boundary"):
        rule = BoundarySplitRule(split["boundary"], split.get("train_side", "left"))
    else:
        rule = GeohashFractionSplitRule(split.get("validation_fraction", 0.326), seed=config.seed)
    return rule, HoldoutSplitRule(split.get("holdout_geohashes") or ())


def _dataset_for(records, scene, config, transmitters=None):
    return build_dataset(records, scene, config.metric, config.path_loss_model(), config.n_resource_blocks,
                         config.features, transmitters, require_targets=True)


# --------------
# -- Training --
# --------------

def train_network(architecture, train_config, train_inputs, train_targets, val_inputs=None, val_targets=None,
                  experiment=None, label="run"):
    '''
    Args:
        architecture (Architecture)
        train_config (TrainConfig)
        train_inputs (np.ndarray): standardized network inputs.
        train_targets (np.ndarray): what the network learns (residual or direct).
        val_inputs (np.ndarray)
        val_targets (np.ndarray)
        experiment (Experiment): records per-epoch RMSE when given.
        label (str)

    Returns:
        (tuple): (best-validation CorrectionNetwork, history dict)

    Summary:
        Mini-batch AdamW on the msle loss with seeded shuffling and early stopping
        on validation RMSE. The final bias starts at the mean training target.
    '''
    init_seq, shuffle_seq = np.random.SeedSequence(train_config.seed).spawn(2)
    network = CorrectionNetwork.init(architecture, train_inputs.shape[1], seed=init_seq)
    network.biases[-1][:] = float(np.mean(train_targets))
    optimizer = AdamWOptimizer(train_config.learning_rate, train_config.weight_decay)
    rng = np.random.default_rng(shuffle_seq)

    has_validation = val_inputs is not None and len(val_targets) > 0
    if not has_validation:
        logger.warning("No validation records: early stopping uses train RMSE.")

    history = {"train_rmse": [], "validation_rmse": [], "loss": []}
    best, best_rmse, best_epoch, stale = network.copy(), np.inf, 0, 0
    n = len(train_targets)
    for epoch in range(1, train_config.max_epochs + 1):
        order = rng.permutation(n)
        losses = []
        for start in range(0, n, train_config.batch_size):
            batch = order[start:start + train_config.batch_size]
            _, loss = train_step(network, optimizer, train_inputs[batch], train_targets[batch], train_config)
            losses.append(loss)

        train_rmse = rmse(network.predict(train_inputs), train_targets)
        val_rmse = rmse(network.predict(val_inputs), val_targets) if has_validation else train_rmse
        if not np.isfinite(val_rmse) or not np.isfinite(train_rmse):
            raise NonFiniteLossError("(radio_metrics) Training Error: non-finite RMSE.",
                                     {"epoch": epoch, "train_rmse": train_rmse, "validation_rmse": val_rmse})
        history["train_rmse"].append(train_rmse)
        history["validation_rmse"].append(val_rmse)
        history["loss"].append(float(np.mean(losses)))
        if experiment is not None:
            experiment.add_epoch(label, train_rmse, val_rmse)
        logger.debug("Epoch %d: loss %.4f, train RMSE %.4f dB, validation RMSE %.4f dB.",
                     epoch, history["loss"][-1], train_rmse, val_rmse)

        if val_rmse < best_rmse:
            best, best_rmse, best_epoch, stale = network.copy(), val_rmse, epoch, 0
        else:
            stale += 1
            if stale >= train_config.patience:
                logger.info("Early stop at epoch %d (best epoch %d).", epoch, best_epoch)
                break

    history["best_epoch"] = best_epoch
    history["epochs"] = len(history["train_rmse"])
    return best, history


def _fit_standardizer(train_set, manifest, standardize_beta):
    matrix, names = train_set.network_matrix(standardize_beta)
    return Standardizer.fit(matrix, names, fitted_on=manifest.train_digest())


def train_model(records, scene, metric_kind, config=None, transmitters=None, manifest=None, experiment=None):
    '''
    Args:
        records (list of MeasurementRecord)
        scene (Scene)
        metric_kind (MetricKind or str)
        config (PipelineConfig)
        transmitters (dict)
        manifest (SplitManifest): computed from the config's split section when absent.
        experiment (Experiment)

    Returns:
        (ModelBundle): with a `history` attribute holding the per-epoch curves.

    Raises:
        LeakageError, SplitError, NonFiniteLossError
    '''
    metric_kind = MetricKind.from_name(metric_kind)
    config = (config or PipelineConfig()).with_overrides(metric=metric_kind)
    logger.info("Running experiment: %s", config)
    start = time.time()

    dataset = _dataset_for(records, scene, config, transmitters)
    if manifest is None:
        rule, holdout = split_rule_from_config(config)
        manifest = split_records(dataset.records, rule, holdout)
    train_set = dataset.subset(manifest.train_ids)
    val_set = dataset.subset(manifest.validation_ids)
    if len(train_set) < config.min_train_records:
        raise SplitError("(radio_metrics) Split Error: " + str(len(train_set)) + " train records, need at least "
                         + str(config.min_train_records) + ".")

    standardize_beta = config.features["standardize_beta"]
    standardizer = _fit_standardizer(train_set, manifest, standardize_beta)
    standardizer.require_fitted_on(manifest.train_digest())

    architecture = config.architecture()
    train_config = config.train_config()
    network, history = train_network(architecture, train_config,
                                     train_set.network_inputs(standardizer, standardize_beta), train_set.residual_targets,
                                     val_set.network_inputs(standardizer, standardize_beta), val_set.residual_targets,
                                     experiment=experiment, label=metric_kind.value)

    bundle = ModelBundle(metric_kind, network, standardizer, config.path_loss_model(), config.n_resource_blocks,
                         train_config, manifest.digest(), manifest.train_digest(), config.features)
    metrics = {"epochs": history["epochs"], "best_epoch": history["best_epoch"],
               "train_records": len(train_set), "validation_records": len(val_set),
               "test_records": len(manifest.test_ids)}
    for name, subset in (("train", train_set), ("validation", val_set), ("test", dataset.subset(manifest.test_ids))):
        if len(subset):
            frame = predict_dataset(bundle, subset)
            metrics[name + "_rmse"] = rmse(frame["prediction"].to_numpy(), frame["target"].to_numpy())
            metrics[name + "_estimate_rmse"] = rmse(frame["estimate"].to_numpy(), frame["target"].to_numpy())
        else:
            metrics[name + "_rmse"] = None
            metrics[name + "_estimate_rmse"] = None
    bundle.metrics = metrics
    bundle.history = history
    bundle.manifest_split = manifest

    if experiment is not None:
        experiment.make_plots()
    logger.info("Trained %s: validation RMSE %s dB.", bundle, metrics["validation_rmse"])
    logger.info("Experiment took %s seconds.", round(time.time() - start, 2))
    return bundle


# ------------
# -- Search --
# ------------

def _log_uniform(rng, bounds):
    lo, hi = float(bounds[0]), float(bounds[1])
    return float(np.exp(rng.uniform(np.log(lo), np.log(hi))))


def sample_search_config(rng, space, base_train_config, trial_seed):
    '''
    Args:
        rng (np.random.Generator): shared search stream; every call consumes the same draws.
        space (dict): see the "search" config section.
        base_train_config (TrainConfig): supplies patience and loss alpha.
        trial_seed (int)

    Returns:
        (tuple): (Architecture, TrainConfig)
    '''
    batch_size = int(rng.integers(space["batch_size"][0], space["batch_size"][1] + 1))
    depth = int(rng.integers(space["trunk_depth"][0], space["trunk_depth"][1] + 1))
    width = int(space["trunk_width"][int(rng.integers(0, len(space["trunk_width"])))])
    head = tuple(space["head"][int(rng.integers(0, len(space["head"])))])
    weight_decay = _log_uniform(rng, space["weight_decay"])
    learning_rate = _log_uniform(rng, space["learning_rate"])
    max_epochs = int(rng.integers(space["max_epochs"][0], space["max_epochs"][1] + 1))
    architecture = Architecture((width,) * depth, head)
    train_config = base_train_config.replace(batch_size=batch_size, learning_rate=learning_rate,
                                             weight_decay=weight_decay, max_epochs=max_epochs, seed=trial_seed)
    return architecture, train_config


def hyper_search(records, scene, metric_kind, search_space=None, trials=None, seed=None, config=None, transmitters=None,
                 manifest=None, experiment=None):
    '''
    Args:
        records (list of MeasurementRecord)
        scene (Scene)
        metric_kind (MetricKind or str)
        search_space (dict): overrides the config's "search" section.
        trials (int)
        seed (int): search stream seed; trial i trains with seed + i.
        config (PipelineConfig)
        transmitters (dict)
        manifest (SplitManifest)
        experiment (Experiment): trials.csv is written through it.

    Returns:
        (tuple): (best dict with "architecture" and "train" parameters, trial table as pd.DataFrame)

    Raises:
        SearchError: when every trial diverged.
    '''
    metric_kind = MetricKind.from_name(metric_kind)
    config = (config or PipelineConfig()).with_overrides(metric=metric_kind)
    space = config.search
    space.update(search_space or {})
    trials = int(trials if trials is not None else space.get("trials", 10))
    seed = config.seed if seed is None else int(seed)
    if trials < 1:
        raise SearchError("(radio_metrics) Search Error: trials must be >= 1.")
    logger.info("Running search: %d trials, %s", trials, config)
    start = time.time()

    dataset = _dataset_for(records, scene, config, transmitters)
    if manifest is None:
        rule, holdout = split_rule_from_config(config)
        manifest = split_records(dataset.records, rule, holdout)
    train_set = dataset.subset(manifest.train_ids)
    val_set = dataset.subset(manifest.validation_ids)
    if len(train_set) < config.min_train_records:
        raise SplitError("(radio_metrics) Split Error: " + str(len(train_set)) + " train records, need at least "
                         + str(config.min_train_records) + ".")
    standardize_beta = config.features["standardize_beta"]
    standardizer = _fit_standardizer(train_set, manifest, standardize_beta)
    train_inputs = train_set.network_inputs(standardizer, standardize_beta)
    val_inputs = val_set.network_inputs(standardizer, standardize_beta)

    rng = np.random.default_rng(seed)
    base = config.train_config()
    rows, best = [], None
    for i in range(trials):
        architecture, train_config = sample_search_config(rng, space, base, seed + i)
        row = {"trial": i, "seed": seed + i, "trunk": str(list(architecture.trunk)), "head": str(list(architecture.head)),
               "batch_size": train_config.batch_size, "learning_rate": train_config.learning_rate,
               "weight_decay": train_config.weight_decay, "max_epochs": train_config.max_epochs}
        try:
            _, history = train_network(architecture, train_config, train_inputs, train_set.residual_targets,
                                       val_inputs, val_set.residual_targets)
            row["validation_rmse"] = min(history["validation_rmse"])
            row["epochs"] = history["epochs"]
            row["diverged"] = False
        except NonFiniteLossError as err:
            logger.warning("Trial %d diverged: %s", i, err)
            row["validation_rmse"] = float("nan")
            row["epochs"] = 0
            row["diverged"] = True
        rows.append(row)
        if experiment is not None:
            experiment.add_trial(row)
        logger.info("Trial %d of %d: validation RMSE %s dB.", i + 1, trials, row["validation_rmse"])
        if not row["diverged"] and (best is None or row["validation_rmse"] < best[0]):
            best = (row["validation_rmse"], architecture, train_config, i)

    if best is None:
        raise SearchError("(radio_metrics) Search Error: all " + str(trials) + " trials diverged.")
    logger.info("Experiment took %s seconds.", round(time.time() - start, 2))
    return ({"trial": best[3], "validation_rmse": best[0], "architecture": best[1].get_parameters(),
             "train": best[2].get_parameters()}, pd.DataFrame(rows))


# ----------------
# -- Prediction --
# ----------------

def _region_labels(records, region):
    if region is None or isinstance(region, str):
        label = region if region is not None else "all"
        return [label] * len(records)
    if isinstance(region, int):
        return [r.geohash6[:region] for r in records]
    if isinstance(region, dict):
        return [region.get(r.record_id, "all") for r in records]
    return [str(region(r)) for r in records]


def predict_dataset(bundle, dataset, region=None):
    '''
    Args:
        bundle (ModelBundle)
        dataset (Dataset): built with the bundle's metric and feature settings.
        region (str, int, dict or callable): label, geohash prefix length, id -> label map, or record -> label.

    Returns:
        (pd.DataFrame): PREDICTION_COLUMNS, one row per record.
    '''
    if dataset.metric_kind is not bundle.metric_kind:
        raise SchemaMismatchError("(radio_metrics) Schema Error: dataset metric " + str(dataset.metric_kind)
                                  + " does not match bundle metric " + str(bundle.metric_kind) + ".")
    standardize_beta = bundle.feature_settings.get("standardize_beta", True)
    _, names = dataset.network_matrix(standardize_beta)
    if tuple(names) != tuple(bundle.standardizer.names):
        raise SchemaMismatchError("(radio_metrics) Schema Error: features " + str(list(names))
                                  + " do not match bundle features " + str(list(bundle.standardizer.names)) + ".")
    if len(dataset):
        correction = bundle.network.predict(dataset.network_inputs(bundle.standardizer, standardize_beta))
    else:
        correction = np.zeros(0)
    prediction = compose_prediction(dataset.beta, correction, residual=bundle.metric_kind.residual)
    return pd.DataFrame({
        "record_id": dataset.ids,
        "metric": bundle.metric_kind.value,
        "geohash6": [r.geohash6 for r in dataset.records],
        "region": _region_labels(dataset.records, region),
        "indoor": dataset.indoor,
        "target": dataset.targets,
        "prediction": prediction,
        "estimate": dataset.beta,
    }, columns=PREDICTION_COLUMNS)


def predict(bundle, records, scene, transmitters=None, region=None, metric_kind=None):
    '''
    Args:
        bundle (ModelBundle)
        records (list of MeasurementRecord)
        scene (Scene)
        transmitters (dict)
        region: see predict_dataset.
        metric_kind (MetricKind): when given, must match the bundle.

    Returns:
        (pd.DataFrame): per-record target (NaN when absent), prediction and estimate.
    '''
    if metric_kind is not None and MetricKind.from_name(metric_kind) is not bundle.metric_kind:
        raise SchemaMismatchError("(radio_metrics) Schema Error: requested " + str(MetricKind.from_name(metric_kind))
                                  + " from a " + str(bundle.metric_kind) + " bundle.")
    dataset = build_dataset(records, scene, bundle.metric_kind, bundle.path_loss_model, bundle.n_resource_blocks,
                            bundle.feature_settings, transmitters)
    return predict_dataset(bundle, dataset, region)


