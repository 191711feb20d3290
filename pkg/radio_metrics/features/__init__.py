'''
Feature assembly and standardization.

    FeatureVectorClass: path loss features, engineered features, column order.
    StandardizerClass: train-fitted z-scores.
    feature_helpers: per-record assembly and CSV export.
'''

# Grab classes.
from radio_metrics.features.FeatureVectorClass import PathLossFeatures, EngineeredFeatures, feature_names, BETA_COLUMN, FEATURE_RANGES
from radio_metrics.features.StandardizerClass import Standardizer, fit_standardizer, apply_standardizer
from radio_metrics.features.feature_helpers import assemble_features, assemble_link, check_ranges, features_to_frame, resolve_transmitter
