'''
PipelineConfigClass.py: Contains the PipelineConfig class.

A JSON key-value file covering the metric, path loss model, resource blocks,
architecture, training, features, split, search and synthetic city sections.
Missing keys fall back to the per-metric tuned defaults.
'''

# Python imports.
import copy
import json

# Other imports.
from radio_metrics.correction.ArchitectureClass import Architecture
from radio_metrics.correction.TrainConfigClass import TrainConfig
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.propagation.PathLossModelClass import PathLossModel
from radio_metrics.propagation.radio_identities import N_RESOURCE_BLOCKS

DEFAULTS = {
    "seed": 0,
    "metric": "rsrp",
    "n_resource_blocks": N_RESOURCE_BLOCKS,
    "path_loss": {"kind": "log_distance_clutter", "exponent": 3.0, "k_obs_db_per_m": 0.3, "l_entry_db": 12.0},
    "architecture": None,
    "train": None,
    "features": {"use_temporal": True, "temporal_for_rssi": True, "standardize_beta": True, "utc_offset_hours": 0.0},
    "split": {"boundary": None, "train_side": "left", "holdout_geohashes": [], "validation_fraction": 0.326},
    "search": {"trials": 10,
               "batch_size": [16, 128],
               "trunk_depth": [1, 6],
               "trunk_width": [16, 32, 64],
               "head": [[64, 256, 10, 1], [64, 32, 10, 1], [16, 512, 10, 1], [32, 1]],
               "weight_decay": [1e-7, 1e-2],
               "learning_rate": [1e-5, 1e-2],
               "max_epochs": [10, 50]},
    "synth": {},
    "region_label": "all",
    "min_train_records": 100,
}

_SECTIONS = ("path_loss", "features", "split", "search", "synth")


def _merge(base, override):
    result = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if key in _SECTIONS and isinstance(value, dict):
            section = dict(result.get(key) or {})
            section.update(value)
            result[key] = section
        else:
            result[key] = copy.deepcopy(value)
    return result


class PipelineConfig(object):

    def __init__(self, params=None):
        unknown = set(params or {}) - set(DEFAULTS)
        if unknown:
            raise ValueError("(radio_metrics) Config Error: unknown keys " + ", ".join(sorted(unknown)) + ".")
        self.params = _merge(DEFAULTS, params)
        self.metric = MetricKind.from_name(self.params["metric"])
        self.params["metric"] = self.metric.value

    @classmethod
    def load(cls, path):
        with open(path, "r") as config_file:
            try:
                params = json.load(config_file)
            except json.JSONDecodeError as err:
                raise ValueError("(radio_metrics) Config Error: " + str(path) + ":" + str(err.lineno) + ": " + err.msg)
        return cls(params)

    def save(self, path):
        with open(path, "w") as config_file:
            json.dump(self.get_parameters(), config_file, indent=2, sort_keys=True)
            config_file.write("\n")

    def with_overrides(self, **overrides):
        '''
        Args:
            overrides: top-level keys; None values are ignored.

        Returns:
            (PipelineConfig)
        '''
        params = copy.deepcopy(self.params)
        for key, value in overrides.items():
            if value is not None:
                params[key] = value.value if isinstance(value, MetricKind) else value
        if overrides.get("seed") is not None and params.get("train") and "seed" in params["train"]:
            params["train"] = dict(params["train"], seed=overrides["seed"])
        return PipelineConfig(params)

    # ----------------
    # -- Accessors --
    # ----------------

    @property
    def seed(self):
        return int(self.params["seed"])

    @property
    def n_resource_blocks(self):
        return int(self.params["n_resource_blocks"])

    @property
    def features(self):
        return dict(self.params["features"])

    @property
    def split(self):
        return dict(self.params["split"])

    @property
    def search(self):
        return dict(self.params["search"])

    @property
    def synth(self):
        return dict(self.params["synth"])

    @property
    def region_label(self):
        return self.params["region_label"]

    @property
    def min_train_records(self):
        return int(self.params["min_train_records"])

    def path_loss_model(self):
        return PathLossModel.from_parameters(self.params["path_loss"])

    def architecture(self):
        if self.params["architecture"]:
            return Architecture.from_parameters(self.params["architecture"])
        return Architecture.for_metric(self.metric)

    def train_config(self):
        base = TrainConfig.for_metric(self.metric, seed=self.seed)
        if self.params["train"]:
            return base.replace(**self.params["train"])
        return base

    def uses_temporal(self):
        f = self.params["features"]
        return self.metric.uses_temporal(f["use_temporal"], f["temporal_for_rssi"])

    def get_parameters(self):
        ''' Returns (dict): the full effective configuration. '''
        params = copy.deepcopy(self.params)
        params["architecture"] = self.architecture().get_parameters()
        params["train"] = self.train_config().get_parameters()
        return params

    def __str__(self):
        return "config(" + self.metric.value + ", seed=" + str(self.seed) + ")"
