'''
Pipeline artifacts and experiment bookkeeping.

    MetricKindClass: RSRP / RSRQ / RSSI and their composition mode.
    DatasetClass: features, estimates and targets for a record list.
    SplitManifestClass: leak-free train / validation / blind-test splits.
    ModelBundleClass: saved trained model.
    PipelineConfigClass: JSON configuration.
    ExperimentClass: results directory, learning curves, trial tables.
    ExperimentParametersClass: readable parameter dump.
'''

# Grab classes.
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.experiments.DatasetClass import Dataset, build_dataset
from radio_metrics.experiments.SplitManifestClass import SplitManifest, BoundarySplitRule, HoldoutSplitRule, GeohashFractionSplitRule, split_records
from radio_metrics.experiments.ModelBundleClass import ModelBundle, save_bundle, load_bundle
from radio_metrics.experiments.PipelineConfigClass import PipelineConfig
from radio_metrics.experiments.ExperimentParametersClass import ExperimentParameters
from radio_metrics.experiments.ExperimentClass import Experiment
