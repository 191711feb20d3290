''' additional_datastructures.py: JSON encoding for experiment records. '''

# Python imports.
import enum
import json
import math

# Other imports.
import numpy as np


class ExperimentEncoder(json.JSONEncoder):
    '''
    JSON encoder for experiment parameter dumps: numpy scalars and arrays become
    plain numbers and lists, enums their values, non-finite floats null, and
    tuples lists.
    '''

    def encode(self, obj):
        '''
        Args:
            obj (Object): Arbitrary object to encode in JSON.
        '''

        def plain(item):
            if isinstance(item, enum.Enum):
                return item.value
            if isinstance(item, np.ndarray):
                return [plain(e) for e in item.tolist()]
            if isinstance(item, np.generic):
                item = item.item()
            if isinstance(item, float) and not math.isfinite(item):
                return None
            if isinstance(item, (list, tuple)):
                return [plain(e) for e in item]
            if isinstance(item, dict):
                return {str(key): plain(value) for key, value in item.items()}
            return item

        return json.JSONEncoder.encode(self, plain(obj))


def dumps(obj, indent=2):
    ''' Deterministic JSON text (sorted keys) through ExperimentEncoder. '''
    return ExperimentEncoder(indent=indent, sort_keys=True).encode(obj)
