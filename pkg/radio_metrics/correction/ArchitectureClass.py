''' ArchitectureClass.py: Contains the Architecture class (layer widths of the correction network). '''

# Python imports.
from dataclasses import dataclass, field
from typing import Tuple

# Other imports.
from radio_metrics.errors import NetworkShapeError

# Tuned trunk / head widths per metric.
DEFAULT_ARCHITECTURES = {
    "rsrp": ((64, 64, 64, 64, 64, 64), (64, 256, 10, 1)),
    "rsrq": ((64, 64, 64, 64, 64, 64), (64, 32, 10, 1)),
    "rssi": ((16, 16, 16, 16, 16), (16, 512, 10, 1)),
}


@dataclass(frozen=True)
class Architecture(object):
    '''
    Args:
        trunk (tuple of int): repeated hidden layers.
        head (tuple of int): funnel ending in the scalar output.
        negative_slope (float): leaky rectifier slope on hidden layers.
    '''

    trunk: Tuple[int, ...] = field(default=(64,) * 6)
    head: Tuple[int, ...] = field(default=(64, 256, 10, 1))
    negative_slope: float = 0.01

    def __post_init__(self):
        object.__setattr__(self, "trunk", tuple(int(w) for w in self.trunk))
        object.__setattr__(self, "head", tuple(int(w) for w in self.head))
        if not self.head or self.head[-1] != 1:
            raise NetworkShapeError("(radio_metrics) Network Error: head must end in a width of 1, got " + str(list(self.head)) + ".")
        if any(w < 1 for w in self.widths):
            raise NetworkShapeError("(radio_metrics) Network Error: all widths must be >= 1, got " + str(list(self.widths)) + ".")
        if self.negative_slope < 0:
            raise NetworkShapeError("(radio_metrics) Network Error: negative slope must be >= 0.")

    @classmethod
    def for_metric(cls, metric_kind):
        trunk, head = DEFAULT_ARCHITECTURES[str(metric_kind)]
        return cls(trunk, head)

    @property
    def widths(self):
        return self.trunk + self.head

    @property
    def num_layers(self):
        return len(self.widths)

    def get_parameters(self):
        return {"trunk": list(self.trunk), "head": list(self.head), "negative_slope": self.negative_slope}

    @classmethod
    def from_parameters(cls, params):
        return cls(tuple(params["trunk"]), tuple(params["head"]), float(params.get("negative_slope", 0.01)))

    def __str__(self):
        return "arch(" + str(list(self.trunk)) + "+" + str(list(self.head)) + ")"
