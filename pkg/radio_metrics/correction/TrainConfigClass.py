''' TrainConfigClass.py: Contains the TrainConfig class (optimizer and stopping hyperparameters). '''

# Python imports.
from dataclasses import asdict, dataclass

# Other imports.
from radio_metrics.errors import NetworkShapeError

# Tuned batch size, learning rate and weight decay per metric.
DEFAULT_TRAIN_CONFIGS = {
    "rsrp": (69, 3.03e-2, 2.07e-4),
    "rsrq": (55, 6.06e-6, 3.8e-3),
    "rssi": (52, 6.29e-4, 3.17e-7),
}


@dataclass(frozen=True)
class TrainConfig(object):
    batch_size: int = 69
    learning_rate: float = 3.03e-2
    weight_decay: float = 2.07e-4
    max_epochs: int = 50
    patience: int = 10
    loss_alpha: float = 5.0
    seed: int = 0

    def __post_init__(self):
        if int(self.batch_size) != self.batch_size or self.batch_size < 1:
            raise NetworkShapeError("(radio_metrics) Train Config Error: batch_size must be an integer >= 1.")
        if not self.learning_rate > 0:
            raise NetworkShapeError("(radio_metrics) Train Config Error: learning_rate must be positive.")
        if self.weight_decay < 0:
            raise NetworkShapeError("(radio_metrics) Train Config Error: weight_decay must be non-negative.")
        if not self.loss_alpha > 0:
            raise NetworkShapeError("(radio_metrics) Train Config Error: loss_alpha must be positive.")
        if self.max_epochs < 1 or self.patience < 1:
            raise NetworkShapeError("(radio_metrics) Train Config Error: max_epochs and patience must be >= 1.")
        object.__setattr__(self, "batch_size", int(self.batch_size))
        object.__setattr__(self, "max_epochs", int(self.max_epochs))
        object.__setattr__(self, "patience", int(self.patience))

    @classmethod
    def for_metric(cls, metric_kind, **overrides):
        batch_size, lr, wd = DEFAULT_TRAIN_CONFIGS[str(metric_kind)]
        params = {"batch_size": batch_size, "learning_rate": lr, "weight_decay": wd}
        params.update(overrides)
        return cls(**params)

    def replace(self, **changes):
        params = asdict(self)
        params.update(changes)
        return TrainConfig(**params)

    def get_parameters(self):
        return asdict(self)

    @classmethod
    def from_parameters(cls, params):
        return cls(**params)

    def __str__(self):
        return "train(bs=" + str(self.batch_size) + ",lr=" + str(self.learning_rate) + ",wd=" + str(self.weight_decay) + ")"
