''' StandardizerClass.py: Contains the Standardizer class (per-column z-scores fitted on the train split). '''

# Python imports.
from collections import defaultdict

# Other imports.
import numpy as np

from radio_metrics.errors import StandardizerError


class Standardizer(object):
    '''
    Column means and population standard deviations. Zero-variance columns
    store std 1, so every stored std is positive.
    '''

    def __init__(self, names, mean, std, fitted_on=None):
        self.names = tuple(names)
        self.mean = np.asarray(mean, dtype=np.float64).copy()
        self.std = np.asarray(std, dtype=np.float64).copy()
        self.fitted_on = fitted_on
        if self.mean.shape != (len(self.names),) or self.std.shape != self.mean.shape:
            raise StandardizerError("(radio_metrics) Standardizer Error: names, mean and std lengths differ.")
        if np.any(~np.isfinite(self.std)) or np.any(self.std <= 0):
            raise StandardizerError("(radio_metrics) Standardizer Error: every std must be positive and finite.")
        self.mean.setflags(write=False)
        self.std.setflags(write=False)

    @classmethod
    def fit(cls, matrix, names=None, fitted_on=None):
        '''
        Args:
            matrix (array-like): rows x features.
            names (list of str): column names; defaults to "f0", "f1", ...
            fitted_on (str): marker of the split the statistics come from.

        Returns:
            (Standardizer)
        '''
        matrix = np.asarray(matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] < 2 or matrix.shape[1] < 1:
            raise StandardizerError("(radio_metrics) Standardizer Error: need a 2D matrix with at least 2 rows, got shape "
                                    + str(matrix.shape) + ".")
        if not np.all(np.isfinite(matrix)):
            raise StandardizerError("(radio_metrics) Standardizer Error: non-finite values in the fit matrix.")
        if names is None:
            names = ["f" + str(i) for i in range(matrix.shape[1])]
        if len(names) != matrix.shape[1]:
            raise StandardizerError("(radio_metrics) Standardizer Error: " + str(len(names)) + " names for "
                                    + str(matrix.shape[1]) + " columns.")
        mean = matrix.mean(axis=0)
        std = matrix.std(axis=0)
        std[std == 0] = 1.0
        return cls(names, mean, std, fitted_on)

    def _check(self, values):
        values = np.asarray(values, dtype=np.float64)
        if values.shape[-1] != len(self.names):
            raise StandardizerError("(radio_metrics) Standardizer Error: expected " + str(len(self.names))
                                    + " features, got " + str(values.shape[-1]) + ".")
        return values

    def apply(self, values):
        ''' (v - mean) / std per column; accepts a vector or a matrix. '''
        values = self._check(values)
        return (values - self.mean) / self.std

    def invert(self, values):
        values = self._check(values)
        return values * self.std + self.mean

    def require_fitted_on(self, marker):
        if self.fitted_on != marker:
            raise StandardizerError("(radio_metrics) Standardizer Error: fitted on " + repr(self.fitted_on)
                                    + " but expected " + repr(marker) + ".")

    def to_dict(self):
        return {"names": list(self.names), "mean": [float(v) for v in self.mean],
                "std": [float(v) for v in self.std], "fitted_on": self.fitted_on}

    @classmethod
    def from_dict(cls, data):
        return cls(data["names"], data["mean"], data["std"], data.get("fitted_on"))

    def get_parameters(self):
        params = defaultdict(lambda: None)
        params["fitted_on"] = self.fitted_on
        params["num_features"] = len(self.names)
        return params

    def __eq__(self, other):
        return (isinstance(other, Standardizer) and self.names == other.names and self.fitted_on == other.fitted_on
                and np.array_equal(self.mean, other.mean) and np.array_equal(self.std, other.std))

    def __len__(self):
        return len(self.names)

    def __str__(self):
        return "standardizer(" + str(len(self.names)) + " features, fitted_on=" + str(self.fitted_on) + ")"


def fit_standardizer(matrix, names=None, fitted_on=None):
    return Standardizer.fit(matrix, names, fitted_on)


def apply_standardizer(standardizer, features):
    return standardizer.apply(features)
