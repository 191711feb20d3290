'''
PathLossModelClass.py: Contains the PathLossModel class, the initial path loss estimate.

Kinds:
    FSPL_ONLY: free-space path loss.
    LOG_DISTANCE_CLUTTER: log-distance with obstruction and indoor-entry terms.
    EXTERNAL: a registered callable taking PathLossFeatures.
'''

# Python imports.
import logging
import math
from enum import Enum

# Other imports.
from radio_metrics.errors import PathLossModelError
from radio_metrics.propagation.radio_identities import FSPL_CONSTANT_DB, fspl_db

logger = logging.getLogger(__name__)

_EXTERNAL_MODELS = {}


class PathLossKind(Enum):
    FSPL_ONLY = "fspl_only"
    LOG_DISTANCE_CLUTTER = "log_distance_clutter"
    EXTERNAL = "external"


def register_path_loss(name, func):
    '''
    Args:
        name (str): key stored in configs and bundles.
        func (callable): PathLossFeatures -> path loss (dB).
    '''
    if not callable(func):
        raise PathLossModelError("(radio_metrics) Path Loss Error: external model '" + str(name) + "' is not callable.")
    _EXTERNAL_MODELS[name] = func


def unregister_path_loss(name):
    _EXTERNAL_MODELS.pop(name, None)


class PathLossModel(object):
    ''' Path loss alpha(p) used to seed the RSRP estimate. '''

    def __init__(self, kind=PathLossKind.LOG_DISTANCE_CLUTTER, exponent=3.0, k_obs_db_per_m=0.3, l_entry_db=12.0,
                 external=None, external_name=None):
        '''
        Args:
            kind (PathLossKind or str)
            exponent (float): n, distance exponent.
            k_obs_db_per_m (float): loss per metre of obstruction.
            l_entry_db (float): added once when the ray penetrates the UE's building.
            external (callable): delegate for EXTERNAL; otherwise looked up by @external_name.
            external_name (str)
        '''
        self.kind = PathLossKind(kind) if not isinstance(kind, PathLossKind) else kind
        self.exponent = float(exponent)
        self.k_obs_db_per_m = float(k_obs_db_per_m)
        self.l_entry_db = float(l_entry_db)
        self.external = external
        self.external_name = external_name
        if self.kind is PathLossKind.LOG_DISTANCE_CLUTTER and (self.k_obs_db_per_m < 0 or self.l_entry_db < 0):
            raise PathLossModelError("(radio_metrics) Path Loss Error: loss terms must be non-negative.")

    @classmethod
    def fspl_only(cls):
        return cls(kind=PathLossKind.FSPL_ONLY)

    @classmethod
    def from_parameters(cls, params):
        params = dict(params or {})
        return cls(kind=params.get("kind", PathLossKind.LOG_DISTANCE_CLUTTER.value),
                   exponent=params.get("exponent", 3.0),
                   k_obs_db_per_m=params.get("k_obs_db_per_m", 0.3),
                   l_entry_db=params.get("l_entry_db", 12.0),
                   external_name=params.get("external_name"))

    def _delegate(self):
        if self.external is not None:
            return self.external
        if self.external_name in _EXTERNAL_MODELS:
            return _EXTERNAL_MODELS[self.external_name]
        raise PathLossModelError("(radio_metrics) Path Loss Error: EXTERNAL model has no delegate (name="
                                 + repr(self.external_name) + ").")

    def path_loss(self, frequency_mhz, distance_km, obstruction_m=0.0, penetration_m=0.0):
        if self.kind is PathLossKind.FSPL_ONLY:
            return fspl_db(frequency_mhz, distance_km)
        if self.kind is PathLossKind.LOG_DISTANCE_CLUTTER:
            if not frequency_mhz > 0 or not distance_km > 0:
                raise PathLossModelError("(radio_metrics) Path Loss Error: frequency and distance must be positive.")
            # Same term order as fspl_db so n = 2 with zero losses is bit-identical.
            alpha = FSPL_CONSTANT_DB + 20.0 * math.log10(frequency_mhz) + 10.0 * self.exponent * math.log10(distance_km)
            alpha += self.k_obs_db_per_m * obstruction_m
            if penetration_m > 0:
                alpha += self.l_entry_db
            return alpha
        raise PathLossModelError("(radio_metrics) Path Loss Error: EXTERNAL models need the full feature set; use estimate().")

    def estimate(self, p):
        '''
        Args:
            p (PathLossFeatures)

        Returns:
            (float): alpha(p) in dB.
        '''
        if self.kind is PathLossKind.EXTERNAL:
            alpha = float(self._delegate()(p))
            if not math.isfinite(alpha):
                raise PathLossModelError("(radio_metrics) Path Loss Error: external model returned " + repr(alpha) + ".")
            return alpha
        return self.path_loss(p.downlink_frequency, p.distance_to_transmitter_km,
                              p.total_obstruction_length_3d_m, p.building_penetration_length_m)

    def get_parameters(self):
        params = {"kind": self.kind.value}
        if self.kind is PathLossKind.LOG_DISTANCE_CLUTTER:
            params.update({"exponent": self.exponent, "k_obs_db_per_m": self.k_obs_db_per_m, "l_entry_db": self.l_entry_db})
        if self.kind is PathLossKind.EXTERNAL:
            params["external_name"] = self.external_name
        return params

    def __eq__(self, other):
        return isinstance(other, PathLossModel) and self.get_parameters() == other.get_parameters()

    def __str__(self):
        if self.kind is PathLossKind.LOG_DISTANCE_CLUTTER:
            return "log-distance(n=" + str(self.exponent) + ",k_obs=" + str(self.k_obs_db_per_m) + ",L_entry=" + str(self.l_entry_db) + ")"
        return self.kind.value


def path_loss_estimate(model, p):
    return model.estimate(p)
