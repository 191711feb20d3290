'''
ModelBundleClass.py: Contains the ModelBundle class, the saved trained artifact.

Layout of a bundle directory:
    manifest.json  metric, architecture, tuned hyperparameters, standardizer,
                   path loss config, N, split digest, metrics, weight shapes
                   and the length and sha256 of the weight blob.
    weights.bin    little-endian float64, weights then biases per layer.
'''

# Python imports.
import hashlib
import json
import os

# Other imports.
from radio_metrics.correction.ArchitectureClass import Architecture
from radio_metrics.correction.CorrectionNetworkClass import CorrectionNetwork
from radio_metrics.correction.TrainConfigClass import TrainConfig
from radio_metrics.errors import BundleFormatError
from radio_metrics.experiments.MetricKindClass import MetricKind
from radio_metrics.features.StandardizerClass import Standardizer
from radio_metrics.propagation.PathLossModelClass import PathLossModel

FORMAT_VERSION = 1
MANIFEST_FILE_NAME = "manifest.json"
WEIGHTS_FILE_NAME = "weights.bin"


class ModelBundle(object):

    def __init__(self, metric_kind, network, standardizer, path_loss_model, n_resource_blocks, train_config,
                 split_digest, train_digest, feature_settings, metrics=None):
        '''
        Args:
            metric_kind (MetricKind)
            network (CorrectionNetwork)
            standardizer (Standardizer): fitted on the train split (marker = @train_digest).
            path_loss_model (PathLossModel)
            n_resource_blocks (int)
            train_config (TrainConfig)
            split_digest (str)
            train_digest (str)
            feature_settings (dict): use_temporal, temporal_for_rssi, standardize_beta, utc_offset_hours.
            metrics (dict): e.g. train_rmse, validation_rmse, epochs.
        '''
        self.metric_kind = MetricKind.from_name(metric_kind)
        self.network = network
        self.standardizer = standardizer
        self.path_loss_model = path_loss_model
        self.n_resource_blocks = int(n_resource_blocks)
        self.train_config = train_config
        self.split_digest = split_digest
        self.train_digest = train_digest
        self.feature_settings = dict(feature_settings)
        self.metrics = dict(metrics or {})
        standardizer.require_fitted_on(train_digest)

    @property
    def architecture(self):
        return self.network.architecture

    @property
    def feature_names(self):
        ''' Network input columns; the estimate column is last when it is standardized with the features. '''
        return self.standardizer.names

    def manifest(self, blob):
        arch = self.architecture
        weight_shapes, bias_shapes = self.network.shapes()
        return {
            "format_version": FORMAT_VERSION,
            "metric": self.metric_kind.value,
            "architecture": arch.get_parameters(),
            "hyperparameters": {
                "neural_network_layer": list(arch.trunk),
                "output_channel": list(arch.head),
                "batch_size": self.train_config.batch_size,
                "learning_rate": self.train_config.learning_rate,
                "weight_decay": self.train_config.weight_decay,
            },
            "train_config": self.train_config.get_parameters(),
            "input_dim": self.network.input_dim,
            "weight_shapes": weight_shapes,
            "bias_shapes": bias_shapes,
            "weights_bytes": len(blob),
            "weights_sha256": hashlib.sha256(blob).hexdigest(),
            "standardizer": self.standardizer.to_dict(),
            "path_loss": self.path_loss_model.get_parameters(),
            "n_resource_blocks": self.n_resource_blocks,
            "split_digest": self.split_digest,
            "train_digest": self.train_digest,
            "features": self.feature_settings,
            "metrics": self.metrics,
        }

    def _encode(self):
        blob = self.network.to_blob()
        text = json.dumps(self.manifest(blob), indent=2, sort_keys=True) + "\n"
        return text.encode("utf-8"), blob

    def save(self, path):
        '''
        Args:
            path (str): directory, created if missing.
        '''
        os.makedirs(path, exist_ok=True)
        manifest_bytes, blob = self._encode()
        with open(os.path.join(path, MANIFEST_FILE_NAME), "wb") as manifest_file:
            manifest_file.write(manifest_bytes)
        with open(os.path.join(path, WEIGHTS_FILE_NAME), "wb") as weights_file:
            weights_file.write(blob)

    @classmethod
    def load(cls, path):
        '''
        Returns:
            (ModelBundle)

        Raises:
            BundleFormatError: missing files, version mismatch, truncated or corrupt blob.
        '''
        manifest_path = os.path.join(path, MANIFEST_FILE_NAME)
        weights_path = os.path.join(path, WEIGHTS_FILE_NAME)
        if not os.path.isfile(manifest_path) or not os.path.isfile(weights_path):
            raise BundleFormatError("(radio_metrics) Bundle Error: " + str(path) + " is missing "
                                    + MANIFEST_FILE_NAME + " or " + WEIGHTS_FILE_NAME + ".")
        try:
            with open(manifest_path, "r", encoding="utf-8") as manifest_file:
                manifest = json.load(manifest_file)
        except UnicodeDecodeError:
            raise BundleFormatError("(radio_metrics) Bundle Error: manifest is not valid UTF-8.")
        except json.JSONDecodeError as err:
            raise BundleFormatError("(radio_metrics) Bundle Error: corrupt manifest (" + err.msg + ").")
        if not isinstance(manifest, dict):
            raise BundleFormatError("(radio_metrics) Bundle Error: manifest must be a JSON object, got "
                                    + type(manifest).__name__ + ".")
        with open(weights_path, "rb") as weights_file:
            blob = weights_file.read()

        version = manifest.get("format_version")
        if version != FORMAT_VERSION:
            raise BundleFormatError("(radio_metrics) Bundle Error: format version " + repr(version) + " is not supported (expected "
                                    + str(FORMAT_VERSION) + ").")
        if len(blob) != manifest.get("weights_bytes"):
            raise BundleFormatError("(radio_metrics) Bundle Error: weight blob has " + str(len(blob)) + " bytes, manifest says "
                                    + str(manifest.get("weights_bytes")) + ".")
        if hashlib.sha256(blob).hexdigest() != manifest.get("weights_sha256"):
            raise BundleFormatError("(radio_metrics) Bundle Error: weight blob checksum mismatch.")

        try:
            architecture = Architecture.from_parameters(manifest["architecture"])
            network = CorrectionNetwork.from_blob(architecture, manifest["input_dim"], blob)
            return cls(manifest["metric"], network, Standardizer.from_dict(manifest["standardizer"]),
                       PathLossModel.from_parameters(manifest["path_loss"]), manifest["n_resource_blocks"],
                       TrainConfig.from_parameters(manifest["train_config"]), manifest["split_digest"],
                       manifest["train_digest"], manifest["features"], manifest.get("metrics"))
        except (KeyError, TypeError, ValueError) as err:
            raise BundleFormatError("(radio_metrics) Bundle Error: invalid manifest (" + str(err) + ").")

    def digest(self):
        ''' sha256 over the manifest and the weight blob. '''
        manifest_bytes, blob = self._encode()
        return hashlib.sha256(manifest_bytes + blob).hexdigest()

    def get_parameters(self):
        return self.manifest(self.network.to_blob())

    def __str__(self):
        return "bundle(" + self.metric_kind.value + ", " + str(self.architecture) + ")"


def save_bundle(bundle, path):
    bundle.save(path)


def load_bundle(path):
    return ModelBundle.load(path)
