'''
SceneClass.py: Contains the Scene class, the immutable 3D urban world.

Purpose:
    - Local equirectangular projection about the terrain centre.
    - Ray/prism traversal along the direct transmitter-to-UE segment.
    - LOS/NLOS classification, penetration and obstruction lengths.
'''

# Python imports.
import hashlib
import math
from collections import namedtuple

# Other imports.
import numpy as np
from shapely.geometry import LineString, Point
from shapely.strtree import STRtree

from radio_metrics.errors import DegenerateSegmentError, SceneError
from radio_metrics.scene.RayTraversalClass import Interval, LosClass, RayTraversal

EARTH_RADIUS_M = 6371000.0
LOS_TENTATIVE_CLEARANCE_M = 1.0
TERRAIN_SAMPLE_STEP_M = 5.0
_T_EPS = 1e-12

LinkGeometry = namedtuple("LinkGeometry", ["tx_xyz", "ue_xyz", "traversal", "ue_building_id",
                                           "penetration_m", "obstruction_m", "intersection_count", "los"])


def lonlat_to_local(lon, lat, lon0, lat0):
    '''
    Returns:
        (tuple): (x, y) meters east/north of (@lon0, @lat0).
    '''
    x = EARTH_RADIUS_M * math.cos(math.radians(lat0)) * math.radians(lon - lon0)
    y = EARTH_RADIUS_M * math.radians(lat - lat0)
    return x, y


def local_to_lonlat(x, y, lon0, lat0):
    lon = lon0 + math.degrees(x / (EARTH_RADIUS_M * math.cos(math.radians(lat0))))
    lat = lat0 + math.degrees(y / EARTH_RADIUS_M)
    return lon, lat


def _slab_interval(base, top, z0, dz):
    ''' Parameter range t in [0, 1] where z0 + t * dz lies within [base, top], or None. '''
    if abs(dz) < 1e-12:
        return (0.0, 1.0) if base <= z0 <= top else None
    ta = (base - z0) / dz
    tb = (top - z0) / dz
    lo, hi = max(0.0, min(ta, tb)), min(1.0, max(ta, tb))
    return (lo, hi) if hi >= lo else None


def _line_pieces(geom):
    if geom.is_empty:
        return []
    if geom.geom_type == "LineString":
        return [geom]
    if hasattr(geom, "geoms"):
        pieces = []
        for part in geom.geoms:
            pieces.extend(_line_pieces(part))
        return pieces
    return []


def _merge_spans(spans):
    merged = []
    for lo, hi in sorted(spans):
        if merged and lo <= merged[-1][1] + _T_EPS:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


class Scene(object):
    ''' Buildings over a terrain grid, with an STRtree over footprint bounding boxes. '''

    def __init__(self, buildings, terrain, origin=None, use_index=True):
        '''
        Args:
            buildings (list of Building)
            terrain (TerrainGrid)
            origin (tuple): projection reference (lon0, lat0); defaults to the terrain centre.
            use_index (bool): default for ray queries; False scans every building.
        '''
        self.terrain = terrain
        if origin is None:
            origin = terrain.center
        self.lon0, self.lat0 = float(origin[0]), float(origin[1])
        self.buildings = tuple(sorted(buildings, key=lambda b: b.id))
        self.use_index = use_index

        ids = [b.id for b in self.buildings]
        if len(set(ids)) != len(ids):
            raise SceneError("(radio_metrics) Scene Error: duplicate building ids.")
        for b in self.buildings:
            min_x, min_y, max_x, max_y = b.bounds
            for x, y in ((min_x, min_y), (max_x, max_y)):
                lon, lat = self.unproject(x, y)
                if not terrain.contains(lon, lat):
                    raise SceneError("(radio_metrics) Scene Error: " + str(b) + " footprint extends outside the terrain grid.")

        self._by_id = {b.id: b for b in self.buildings}
        self._index = STRtree([b.polygon for b in self.buildings]) if self.buildings else None

    # ----------------
    # -- Projection --
    # ----------------

    def unproject(self, x, y):
        return local_to_lonlat(x, y, self.lon0, self.lat0)

    def unproject_many(self, xs, ys):
        lons = self.lon0 + np.degrees(np.asarray(xs) / (EARTH_RADIUS_M * math.cos(math.radians(self.lat0))))
        lats = self.lat0 + np.degrees(np.asarray(ys) / EARTH_RADIUS_M)
        return lons, lats

    def terrain_altitude(self, lon, lat):
        '''
        Returns:
            (float): ground elevation (m), bilinear over the four surrounding nodes.
        '''
        return self.terrain.altitude(lon, lat)

    def project_local(self, p):
        '''
        Args:
            p (GeoPoint)

        Returns:
            (tuple): (x, y, z) with z the absolute altitude (terrain + @p.alt_ag_m).
        '''
        if not self.terrain.contains(p.lon, p.lat):
            raise SceneError("(radio_metrics) Scene Error: point " + str(p) + " outside terrain extent.")
        x, y = lonlat_to_local(p.lon, p.lat, self.lon0, self.lat0)
        return x, y, self.terrain.altitude(p.lon, p.lat) + p.alt_ag_m

    def get_building(self, building_id):
        return self._by_id[building_id]

    # -----------------
    # -- Ray queries --
    # -----------------

    def trace_ray(self, tx_point, ue_point, use_index=None):
        '''
        Args:
            tx_point (GeoPoint): antenna position, alt_ag_m = tx height.
            ue_point (GeoPoint)
            use_index (bool): overrides the scene default.

        Returns:
            (RayTraversal)
        '''
        p0, p1 = self._segment(tx_point, ue_point)
        return self._trace(p0, p1, use_index)

    def link_geometry(self, tx_point, ue_point, use_index=None):
        '''
        Summary:
            Computes every geometric link quantity from a single traversal. The UE's own
            building counts as penetration only, never as obstruction.

        Returns:
            (LinkGeometry)
        '''
        p0, p1 = self._segment(tx_point, ue_point)
        traversal = self._trace(p0, p1, use_index)
        own = self._containing_building(p1, use_index)

        penetration = 0.0
        if own is not None:
            own_intervals = traversal.intervals_for(own)
            if own_intervals:
                penetration = own_intervals[-1].length_m

        obstruction = traversal.total_length(exclude=own)
        count = traversal.count(exclude=own)

        if count > 0 or self._terrain_blocks(p0, p1, traversal.length_m):
            los = LosClass.NLOS
        elif self._min_clearance(p0, p1, own, use_index) < LOS_TENTATIVE_CLEARANCE_M:
            los = LosClass.LOS_TENTATIVE
        else:
            los = LosClass.LOS

        return LinkGeometry(tuple(p0), tuple(p1), traversal, own, penetration, obstruction, count, los)

    def classify_los(self, tx_point, ue_point, use_index=None):
        return self.link_geometry(tx_point, ue_point, use_index).los

    def building_penetration_length(self, tx_point, ue_point, use_index=None):
        return self.link_geometry(tx_point, ue_point, use_index).penetration_m

    def total_obstruction_length_3d(self, tx_point, ue_point, use_index=None):
        return self.link_geometry(tx_point, ue_point, use_index).obstruction_m

    def building_intersection_count_3d(self, tx_point, ue_point, use_index=None):
        return self.link_geometry(tx_point, ue_point, use_index).intersection_count

    def is_indoor(self, ue_point):
        '''
        Returns:
            (tuple): (bool, building id or None).
        '''
        if not self.terrain.contains(ue_point.lon, ue_point.lat):
            return False, None
        building_id = self._containing_building(np.array(self.project_local(ue_point)), None)
        return building_id is not None, building_id

    # -------------
    # -- Helpers --
    # -------------

    def _segment(self, tx_point, ue_point):
        p0 = np.array(self.project_local(tx_point), dtype=float)
        p1 = np.array(self.project_local(ue_point), dtype=float)
        if np.linalg.norm(p1 - p0) < 1e-9:
            raise DegenerateSegmentError("(radio_metrics) Scene Error: transmitter and UE endpoints coincide.")
        return p0, p1

    def _candidates(self, geom, use_index):
        if not self.buildings:
            return []
        if use_index is None:
            use_index = self.use_index
        if use_index:
            return sorted(int(k) for k in self._index.query(geom))
        return list(range(len(self.buildings)))

    @staticmethod
    def _horizontal(p0, p1):
        if math.hypot(p1[0] - p0[0], p1[1] - p0[1]) < 1e-9:
            return Point(p0[0], p0[1])
        return LineString([(p0[0], p0[1]), (p1[0], p1[1])])

    @staticmethod
    def _footprint_spans(building, geom2d, p0, p1):
        ''' Parameter spans where the horizontal projection of the ray is inside the footprint. '''
        if geom2d.geom_type == "Point":
            return [(0.0, 1.0)] if building.polygon.covers(geom2d) else []
        dx, dy = p1[0] - p0[0], p1[1] - p0[1]
        len_sq = dx * dx + dy * dy
        spans = []
        for piece in _line_pieces(building.polygon.intersection(geom2d)):
            coords = list(piece.coords)
            ts = [((cx - p0[0]) * dx + (cy - p0[1]) * dy) / len_sq for cx, cy in (coords[0], coords[-1])]
            spans.append((max(0.0, min(ts)), min(1.0, max(ts))))
        return _merge_spans(spans)

    def _trace(self, p0, p1, use_index):
        d = p1 - p0
        length = float(np.linalg.norm(d))
        geom2d = self._horizontal(p0, p1)
        intervals = []
        for k in self._candidates(geom2d, use_index):
            b = self.buildings[k]
            slab = _slab_interval(b.base_elev_m, b.top_m, p0[2], d[2])
            if slab is None:
                continue
            for lo, hi in self._footprint_spans(b, geom2d, p0, p1):
                t_in, t_out = max(lo, slab[0]), min(hi, slab[1])
                if t_out - t_in > _T_EPS:
                    intervals.append(Interval(b.id, t_in * length, t_out * length))
        return RayTraversal(intervals, length)

    def _containing_building(self, xyz, use_index):
        pt = Point(xyz[0], xyz[1])
        for k in self._candidates(pt, use_index):
            b = self.buildings[k]
            if b.base_elev_m <= xyz[2] <= b.top_m and b.polygon.covers(pt):
                return b.id
        return None

    def _terrain_blocks(self, p0, p1, length):
        ''' Samples ground clearance every TERRAIN_SAMPLE_STEP_M along the ray, endpoints excluded. '''
        n = int(math.floor(length / TERRAIN_SAMPLE_STEP_M))
        if n < 1:
            return False
        t = np.arange(1, n + 1) * TERRAIN_SAMPLE_STEP_M / length
        t = t[t < 1.0]
        if t.size == 0:
            return False
        pts = p0[None, :] + t[:, None] * (p1 - p0)[None, :]
        lons, lats = self.unproject_many(pts[:, 0], pts[:, 1])
        ground = self.terrain.altitudes(lons, lats)
        return bool(np.any(pts[:, 2] < ground - 1e-9))

    def _min_clearance(self, p0, p1, exclude, use_index):
        '''
        Summary:
            Smallest distance from the ray to any building surface: lateral distance over the
            part of the ray inside the building's height band, or height above the roof where
            the ray passes over the footprint. Only buildings within the tentative threshold
            are inspected, so larger clearances report as inf.
        '''
        d = p1 - p0
        geom2d = self._horizontal(p0, p1)
        zone = geom2d.buffer(LOS_TENTATIVE_CLEARANCE_M)
        best = math.inf
        for k in self._candidates(zone, use_index):
            b = self.buildings[k]
            if b.id == exclude:
                continue
            slab = _slab_interval(b.base_elev_m, b.top_m, p0[2], d[2])
            if slab is not None:
                a = p0 + slab[0] * d
                c = p0 + slab[1] * d
                sub = self._horizontal(a, c)
                best = min(best, b.polygon.distance(sub))
            for lo, hi in self._footprint_spans(b, geom2d, p0, p1):
                over = min(p0[2] + lo * d[2], p0[2] + hi * d[2]) - b.top_m
                if over >= 0:
                    best = min(best, over)
        return best

    def digest(self):
        '''
        Returns:
            (str): sha256 over projection, terrain and buildings.
        '''
        h = hashlib.sha256()
        h.update(repr((self.lon0, self.lat0, self.terrain.get_parameters())).encode("utf-8"))
        h.update(np.ascontiguousarray(self.terrain.elevations, dtype="<f8").tobytes())
        for b in self.buildings:
            h.update(repr((b.id, b.footprint, b.base_elev_m, b.height_m)).encode("utf-8"))
        return h.hexdigest()

    def __str__(self):
        return "scene(" + str(len(self.buildings)) + " buildings, " + str(self.terrain) + ")"
