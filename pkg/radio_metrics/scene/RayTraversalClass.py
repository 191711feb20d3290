''' RayTraversalClass.py: Building intervals crossed by a transmitter-to-UE ray, and the LOS class. '''

# Python imports.
from dataclasses import dataclass
from enum import Enum


class LosClass(Enum):
    ''' Geometric visibility of the direct ray. LOS_TENTATIVE is LOS with under 1 m clearance. '''

    LOS = "LOS"
    NLOS = "NLOS"
    LOS_TENTATIVE = "LOS_TENTATIVE"

    def binary(self):
        '''
        Returns:
            (int): 1 for LOS and LOS_TENTATIVE, 0 for NLOS.
        '''
        return 0 if self is LosClass.NLOS else 1


@dataclass(frozen=True)
class Interval(object):
    building_id: int
    entry_m: float
    exit_m: float

    @property
    def length_m(self):
        return self.exit_m - self.entry_m


class RayTraversal(object):
    ''' In-solid intervals along a segment of length @length_m, sorted by entry distance. '''

    def __init__(self, intervals, length_m):
        self.intervals = tuple(sorted(intervals, key=lambda iv: (iv.entry_m, iv.building_id)))
        self.length_m = float(length_m)

    def building_ids(self, exclude=None):
        '''
        Returns:
            (list): distinct building ids in order of first entry.
        '''
        seen = []
        for iv in self.intervals:
            if iv.building_id != exclude and iv.building_id not in seen:
                seen.append(iv.building_id)
        return seen

    def count(self, exclude=None):
        return len(self.building_ids(exclude=exclude))

    def total_length(self, exclude=None):
        return sum(iv.length_m for iv in self.intervals if iv.building_id != exclude)

    def intervals_for(self, building_id):
        return [iv for iv in self.intervals if iv.building_id == building_id]

    def is_empty(self, exclude=None):
        return self.count(exclude=exclude) == 0

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __eq__(self, other):
        return isinstance(other, RayTraversal) and self.intervals == other.intervals and self.length_m == other.length_m

    def __str__(self):
        return "RayTraversal(" + ", ".join("b" + str(iv.building_id) + "[" + str(round(iv.entry_m, 3)) + ", " + str(round(iv.exit_m, 3)) + "]" for iv in self.intervals) + ")"
