''' DatasetClass.py: Contains the Dataset class, assembled features and targets for a list of records. '''

# Python imports.
import logging

# Other imports.
import numpy as np

from radio_metrics.errors import FeatureRangeError, SceneError, UnknownTransmitterError
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.features.FeatureVectorClass import BETA_COLUMN, feature_names
from radio_metrics.features.feature_helpers import assemble_link
from radio_metrics.propagation.RadioEstimateClass import RadioEstimate

logger = logging.getLogger(__name__)

DEFAULT_FEATURE_SETTINGS = {"use_temporal": True, "temporal_for_rssi": True, "standardize_beta": True, "utc_offset_hours": 0.0}


class Dataset(object):
    ''' Row-aligned arrays for a list of records. Targets are NaN where the record lacks the metric. '''

    def __init__(self, metric_kind, records, features, names, beta, targets, indoor, los, dropped=None):
        self.metric_kind = MetricKind.from_name(metric_kind)
        self.records = list(records)
        self.features = np.asarray(features, dtype=np.float64).reshape(len(self.records), len(names))
        self.names = tuple(names)
        self.beta = np.asarray(beta, dtype=np.float64)
        self.targets = np.asarray(targets, dtype=np.float64)
        self.indoor = np.asarray(indoor, dtype=bool)
        self.los = list(los)
        self.dropped = list(dropped or [])

    @property
    def ids(self):
        return [r.record_id for r in self.records]

    @property
    def residual_targets(self):
        ''' What the network learns: target - beta for residual metrics, the target itself otherwise. '''
        if self.metric_kind.residual:
            return self.targets - self.beta
        return self.targets.copy()

    def subset(self, ids):
        wanted = set(ids)
        keep = [i for i, r in enumerate(self.records) if r.record_id in wanted]
        return Dataset(self.metric_kind, [self.records[i] for i in keep], self.features[keep], self.names,
                       self.beta[keep], self.targets[keep], self.indoor[keep], [self.los[i] for i in keep])

    def network_matrix(self, standardize_beta=True):
        '''
        Returns:
            (tuple): (matrix, names) fed to the standardizer; the estimate column is included
            only when it is standardized with the features.
        '''
        if standardize_beta:
            return np.hstack([self.features, self.beta[:, None]]), self.names + (BETA_COLUMN,)
        return self.features, self.names

    def network_inputs(self, standardizer, standardize_beta=True):
        matrix, _ = self.network_matrix(standardize_beta)
        inputs = standardizer.apply(matrix)
        if not standardize_beta:
            inputs = np.hstack([inputs, self.beta[:, None]])
        return inputs

    def __len__(self):
        return len(self.records)

    def __str__(self):
        return "dataset(" + str(self.metric_kind) + ", " + str(len(self)) + " records, " + str(len(self.dropped)) + " dropped)"


def build_dataset(records, scene, metric_kind, path_loss_model, n_rb=100, feature_settings=None, transmitters=None,
                  require_targets=False, skip_invalid=True):
    '''
    Args:
        records (list of MeasurementRecord)
        scene (Scene)
        metric_kind (MetricKind)
        path_loss_model (PathLossModel): seeds beta.
        n_rb (int)
        feature_settings (dict): see DEFAULT_FEATURE_SETTINGS.
        transmitters (dict): tx_id -> Transmitter for records that carry only an id.
        require_targets (bool): drop records without the metric's target.
        skip_invalid (bool): drop (and log) records whose features cannot be assembled instead of raising.

    Returns:
        (Dataset)
    '''
    metric_kind = MetricKind.from_name(metric_kind)
    settings = dict(DEFAULT_FEATURE_SETTINGS)
    settings.update(feature_settings or {})
    temporal = metric_kind.uses_temporal(settings["use_temporal"], settings["temporal_for_rssi"])
    names = feature_names(temporal)

    kept, rows, betas, targets, indoor, los, dropped = [], [], [], [], [], [], []
    for record in records:
        try:
            _, x, link = assemble_link(record, scene, metric_kind, transmitters, settings["use_temporal"],
                                       settings["temporal_for_rssi"], settings["utc_offset_hours"])
        except (FeatureRangeError, UnknownTransmitterError, SceneError) as err:
            if not skip_invalid:
                raise
            reason = err.reason if isinstance(err, FeatureRangeError) else str(err)
            dropped.append((record.record_id, reason))
            logger.warning("Dropped %s: %s", record, reason)
            continue
        target = record.target(metric_kind, n_rb)
        if target is None and require_targets:
            dropped.append((record.record_id, "missing " + metric_kind.value + " target"))
            logger.warning("Dropped %s: missing %s target", record, metric_kind.value)
            continue
        estimate = RadioEstimate.for_features(path_loss_model, x.path_loss, x.tx_power, n_rb)
        kept.append(record)
        rows.append(x.vector())
        betas.append(estimate.beta_dbm)
        targets.append(np.nan if target is None else target)
        indoor.append(link.ue_building_id is not None)
        los.append(link.los)

    features = np.vstack(rows) if rows else np.zeros((0, len(names)))
    return Dataset(metric_kind, kept, features, names, betas, targets, indoor, los, dropped)
