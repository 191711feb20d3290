'''
SplitManifestClass.py: Contains the SplitManifest class and the split rules.

Rules:
    HoldoutSplitRule: blind-test records by geohash code or prefix.
    BoundarySplitRule: train/validation by side of a lon/lat polyline.
    GeohashFractionSplitRule: whole geohash6 cells to validation until a record share is reached.
'''

# Python imports.
import hashlib
import json
import logging

# Other imports.
import numpy as np
from shapely.geometry import LineString, Point

from radio_metrics.errors import LeakageError, SplitError

logger = logging.getLogger(__name__)

TRAIN, VALIDATION, TEST = "train", "validation", "test"


class HoldoutSplitRule(object):
    ''' Sends records whose geohash6 starts with any of @codes to the blind test split. '''

    def __init__(self, codes=()):
        self.codes = tuple(sorted(set(str(c) for c in codes)))
        for code in self.codes:
            if not 1 <= len(code) <= 6:
                raise SplitError("(radio_metrics) Split Error: holdout code '" + code + "' must have 1 to 6 characters.")

    def is_held_out(self, record):
        return any(record.geohash6.startswith(code) for code in self.codes)

    def __str__(self):
        return "holdout(" + ",".join(self.codes) + ")"


class BoundarySplitRule(object):
    '''
    Splits by the side of a polyline given in (lon, lat). Left is relative to the
    polyline's direction; points on the line count as left.
    '''

    def __init__(self, polyline, train_side="left"):
        if len(polyline) < 2:
            raise SplitError("(radio_metrics) Split Error: boundary needs at least 2 vertices.")
        if train_side not in ("left", "right"):
            raise SplitError("(radio_metrics) Split Error: train_side must be 'left' or 'right'.")
        self.polyline = tuple((float(lon), float(lat)) for lon, lat in polyline)
        self.line = LineString(self.polyline)
        if self.line.length == 0:
            raise SplitError("(radio_metrics) Split Error: boundary has zero length.")
        self.train_side = train_side

    @classmethod
    def at_median_longitude(cls, records, train_side="left"):
        ''' A south-to-north line at the median UE longitude; left is west. '''
        if not records:
            raise SplitError("(radio_metrics) Split Error: no records to place a boundary.")
        lons = np.array([r.ue.lon for r in records])
        lats = np.array([r.ue.lat for r in records])
        median = float(np.median(lons))
        return cls([(median, float(lats.min()) - 1.0), (median, float(lats.max()) + 1.0)], train_side)

    def side(self, lon, lat):
        point = Point(lon, lat)
        s = self.line.project(point)
        # Segment containing the nearest point.
        coords = self.polyline
        travelled = 0.0
        a, b = coords[0], coords[1]
        for k in range(len(coords) - 1):
            seg = LineString([coords[k], coords[k + 1]]).length
            a, b = coords[k], coords[k + 1]
            if travelled + seg >= s:
                break
            travelled += seg
        cross = (b[0] - a[0]) * (lat - a[1]) - (b[1] - a[1]) * (lon - a[0])
        return "left" if cross >= 0 else "right"

    def assign(self, record):
        return TRAIN if self.side(record.ue.lon, record.ue.lat) == self.train_side else VALIDATION

    def __str__(self):
        return "boundary(" + ";".join(str(lon) + "," + str(lat) for lon, lat in self.polyline) + ",train=" + self.train_side + ")"


class GeohashFractionSplitRule(object):
    ''' Moves whole geohash6 cells, in seeded random order, to validation until @validation_fraction of records is reached. '''

    def __init__(self, validation_fraction=0.326, seed=0):
        if not 0.0 <= validation_fraction < 1.0:
            raise SplitError("(radio_metrics) Split Error: validation_fraction must be in [0, 1).")
        self.validation_fraction = float(validation_fraction)
        self.seed = int(seed)

    def assign_all(self, records):
        counts = {}
        for r in records:
            counts[r.geohash6] = counts.get(r.geohash6, 0) + 1
        cells = sorted(counts)
        order = np.random.default_rng(self.seed).permutation(len(cells))
        quota = self.validation_fraction * len(records)
        validation, taken = set(), 0
        for k in order:
            if taken >= quota or len(validation) == len(cells) - 1:
                break
            validation.add(cells[k])
            taken += counts[cells[k]]
        return {r.record_id: (VALIDATION if r.geohash6 in validation else TRAIN) for r in records}

    def __str__(self):
        return "geohash-fraction(" + str(self.validation_fraction) + ",seed=" + str(self.seed) + ")"


def _sha256(payload):
    return hashlib.sha256(json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")).hexdigest()


class SplitManifest(object):
    ''' Record ids and geohash6 cells per split. Train and test cells must be disjoint. '''

    def __init__(self, train, validation, test, geohashes, rule=""):
        '''
        Args:
            train (list): record ids.
            validation (list): record ids.
            test (list): record ids.
            geohashes (dict): split name -> iterable of geohash6 codes.
            rule (str): human-readable description of the rule.
        '''
        self.ids = {TRAIN: tuple(sorted(train)), VALIDATION: tuple(sorted(validation)), TEST: tuple(sorted(test))}
        self.geohashes = {name: tuple(sorted(set(geohashes.get(name, ())))) for name in (TRAIN, VALIDATION, TEST)}
        self.rule = str(rule)

        seen = set()
        for name in (TRAIN, VALIDATION, TEST):
            overlap = seen.intersection(self.ids[name])
            if overlap:
                raise SplitError("(radio_metrics) Split Error: record ids in more than one split: " + str(sorted(overlap)[:5]) + ".")
            seen.update(self.ids[name])
        self.check_leakage()

    def check_leakage(self):
        shared = set(self.geohashes[TRAIN]).intersection(self.geohashes[TEST])
        if shared:
            raise LeakageError("(radio_metrics) Split Error: geohash6 cells in both train and blind test: "
                               + ", ".join(sorted(shared)) + ".")

    @property
    def train_ids(self):
        return self.ids[TRAIN]

    @property
    def validation_ids(self):
        return self.ids[VALIDATION]

    @property
    def test_ids(self):
        return self.ids[TEST]

    def to_dict(self):
        return {"ids": {k: list(v) for k, v in self.ids.items()},
                "geohashes": {k: list(v) for k, v in self.geohashes.items()},
                "rule": self.rule}

    @classmethod
    def from_dict(cls, data):
        ids = data["ids"]
        return cls(ids[TRAIN], ids[VALIDATION], ids[TEST], data["geohashes"], data.get("rule", ""))

    def digest(self):
        return _sha256(self.to_dict())

    def train_digest(self):
        ''' Marker stored on standardizers fitted on this manifest's train split. '''
        return _sha256({"train": list(self.ids[TRAIN])})

    def __len__(self):
        return sum(len(v) for v in self.ids.values())

    def __str__(self):
        return ("split(train=" + str(len(self.train_ids)) + ", validation=" + str(len(self.validation_ids))
                + ", test=" + str(len(self.test_ids)) + ", rule=" + self.rule + ")")


def split_records(records, rule=None, holdout=None):
    '''
    Args:
        records (list of MeasurementRecord)
        rule (BoundarySplitRule or GeohashFractionSplitRule): train vs validation; None puts everything in train.
        holdout (HoldoutSplitRule): blind-test cells; None or empty gives a validation-only split.

    Returns:
        (SplitManifest)

    Raises:
        LeakageError, SplitError
    '''
    ids = [r.record_id for r in records]
    if len(set(ids)) != len(ids):
        raise SplitError("(radio_metrics) Split Error: duplicate record ids.")
    for r in records:
        if not r.geohash6:
            raise SplitError("(radio_metrics) Split Error: " + str(r) + " has no geohash6.")

    holdout = holdout or HoldoutSplitRule()
    test = [r for r in records if holdout.is_held_out(r)]
    rest = [r for r in records if not holdout.is_held_out(r)]

    if rule is None:
        assignment = {r.record_id: TRAIN for r in rest}
    elif hasattr(rule, "assign_all"):
        assignment = rule.assign_all(rest)
    else:
        assignment = {r.record_id: rule.assign(r) for r in rest}

    groups = {TRAIN: [], VALIDATION: [], TEST: test}
    for r in rest:
        groups[assignment[r.record_id]].append(r)

    manifest = SplitManifest([r.record_id for r in groups[TRAIN]],
                             [r.record_id for r in groups[VALIDATION]],
                             [r.record_id for r in groups[TEST]],
                             {name: [r.geohash6 for r in group] for name, group in groups.items()},
                             rule=" + ".join(str(part) for part in (rule, holdout) if part is not None and str(part)))
    logger.info("Split %d records: %s", len(records), manifest)
    return manifest
