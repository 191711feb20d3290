''' test_scene.py: Projection, terrain, ray traversal and LOS classification. '''

# Python imports.
import json
import math

# Other imports.
import numpy as np
import pytest

from radio_metrics.errors import DegenerateSegmentError, IngestError, SceneError
from radio_metrics.scene import (Building, GeoPoint, LosClass, Scene, TerrainGrid, load_scene, read_esri_ascii,
                                 write_buildings_geojson, write_esri_ascii)
from radio_metrics.scene.SceneClass import EARTH_RADIUS_M

from conftest import GROUND_M, LAT0, LON0, box, make_scene, point


class TestProjection(object):

    def test_origin_maps_to_zero(self):
        scene = make_scene()
        x, y, z = scene.project_local(GeoPoint(LON0, LAT0, 0.0))
        assert x == pytest.approx(0.0, abs=1e-9)
        assert y == pytest.approx(0.0, abs=1e-9)
        assert z == pytest.approx(GROUND_M)

    def test_latitude_step(self):
        scene = make_scene(half_deg=0.02)
        _, y, _ = scene.project_local(GeoPoint(LON0, LAT0 + 0.01, 0.0))
        assert y == pytest.approx(1111.95, abs=0.01)

    def test_equal_longitude_equal_x(self):
        scene = make_scene()
        a = scene.project_local(GeoPoint(LON0 + 0.003, LAT0 - 0.004, 2.0))
        b = scene.project_local(GeoPoint(LON0 + 0.003, LAT0 + 0.005, 7.0))
        assert a[0] == b[0]

    def test_unproject_inverts_projection(self):
        scene = make_scene()
        lon, lat = scene.unproject(123.4, -56.7)
        x, y, _ = scene.project_local(GeoPoint(lon, lat, 0.0))
        assert x == pytest.approx(123.4, abs=1e-6)
        assert y == pytest.approx(-56.7, abs=1e-6)

    def test_outside_extent_rejected(self):
        scene = make_scene()
        with pytest.raises(SceneError):
            scene.project_local(GeoPoint(LON0 + 1.0, LAT0, 0.0))


class TestTerrain(object):

    def test_node_value(self):
        grid = TerrainGrid(LON0, LAT0, 0.001, [[1.0, 2.0], [3.0, 4.0]])
        assert grid.altitude(LON0 + 0.001, LAT0 + 0.001) == pytest.approx(4.0)
        assert grid.altitude(LON0, LAT0) == pytest.approx(1.0)

    def test_flat_grid_center(self):
        assert make_scene().terrain_altitude(LON0 + 0.0012, LAT0 - 0.0031) == pytest.approx(100.0)

    def test_bilinear_center(self):
        grid = TerrainGrid(LON0, LAT0, 0.001, [[0.0, 0.0], [10.0, 10.0]])
        assert grid.altitude(LON0 + 0.0005, LAT0 + 0.0005) == pytest.approx(5.0)

    def test_out_of_extent(self):
        grid = TerrainGrid(LON0, LAT0, 0.001, [[0.0, 0.0], [10.0, 10.0]])
        with pytest.raises(SceneError):
            grid.altitude(LON0 - 0.01, LAT0)

    def test_edge_half_cell(self):
        grid = TerrainGrid(LON0, LAT0, 0.001, [[0.0, 0.0], [10.0, 10.0]])
        assert grid.extent == pytest.approx((LON0 - 0.0005, LON0 + 0.0015, LAT0 - 0.0005, LAT0 + 0.0015))
        assert grid.altitude(LON0 - 0.0004, LAT0 + 0.0014) == pytest.approx(10.0)
        assert grid.altitude(LON0 + 0.0014, LAT0 - 0.0004) == pytest.approx(0.0)
        with pytest.raises(SceneError):
            grid.altitude(LON0 - 0.0006, LAT0)

    def test_non_finite_rejected(self):
        with pytest.raises(SceneError):
            TerrainGrid(LON0, LAT0, 0.001, [[0.0, float("nan")], [1.0, 1.0]])


class TestTraceRay(object):

    def test_empty_scene(self):
        scene = make_scene()
        traversal = scene.trace_ray(point(scene, -50, 0, 10), point(scene, 50, 0, 10))
        assert len(traversal) == 0
        assert scene.classify_los(point(scene, -50, 0, 10), point(scene, 50, 0, 10)) is LosClass.LOS
        assert scene.total_obstruction_length_3d(point(scene, -50, 0, 10), point(scene, 50, 0, 10)) == 0.0
        assert scene.building_intersection_count_3d(point(scene, -50, 0, 10), point(scene, 50, 0, 10)) == 0

    def test_single_box(self):
        scene = make_scene([box(0, 0, 10, 40)])
        tx, ue = point(scene, -50, 0, 10), point(scene, 50, 0, 10)
        traversal = scene.trace_ray(tx, ue)
        assert len(traversal) == 1
        assert traversal.intervals[0].length_m == pytest.approx(10.0, abs=1e-6)
        assert traversal.intervals[0].entry_m == pytest.approx(45.0, abs=1e-6)
        assert scene.classify_los(tx, ue) is LosClass.NLOS
        assert scene.total_obstruction_length_3d(tx, ue) == pytest.approx(10.0, abs=1e-6)

    def test_above_roofs(self):
        scene = make_scene([box(0, 0, 10, 40)], heights=[5.0])
        tx, ue = point(scene, -50, 0, 10), point(scene, 50, 0, 10)
        assert len(scene.trace_ray(tx, ue)) == 0
        assert scene.classify_los(tx, ue) is LosClass.LOS

    def test_tentative_beside_face(self):
        # Footprint edge 0.5 m from the ray.
        scene = make_scene([[(-5, 0.5), (5, 0.5), (5, 10.5), (-5, 10.5)]])
        tx, ue = point(scene, -50, 0, 10), point(scene, 50, 0, 10)
        assert scene.classify_los(tx, ue) is LosClass.LOS_TENTATIVE
        assert LosClass.LOS_TENTATIVE.binary() == 1
        assert LosClass.NLOS.binary() == 0

    def test_two_boxes(self):
        scene = make_scene([box(-20, 0, 10, 20), [(10, -10), (12.5, -10), (12.5, 10), (10, 10)]])
        tx, ue = point(scene, -50, 0, 10), point(scene, 50, 0, 10)
        assert scene.total_obstruction_length_3d(tx, ue) == pytest.approx(12.5, abs=1e-6)
        assert scene.building_intersection_count_3d(tx, ue) == 2

    def test_concave_footprint_counts_once(self):
        u_shape = [(-10, -10), (10, -10), (10, 10), (5, 10), (5, -5), (-5, -5), (-5, 10), (-10, 10)]
        scene = make_scene([u_shape])
        tx, ue = point(scene, -50, 5, 10), point(scene, 50, 5, 10)
        traversal = scene.trace_ray(tx, ue)
        assert len(traversal) == 2
        assert scene.building_intersection_count_3d(tx, ue) == 1
        assert scene.total_obstruction_length_3d(tx, ue) == pytest.approx(10.0, abs=1e-6)

    def test_degenerate_segment(self):
        scene = make_scene()
        with pytest.raises(DegenerateSegmentError):
            scene.trace_ray(point(scene, 3, 3, 10), point(scene, 3, 3, 10))

    def test_symmetry(self):
        scene = make_scene([box(-20, 2, 10, 20), box(15, -3, 6, 12)])
        a, b = point(scene, -60, 1, 25), point(scene, 60, -1, 3)
        assert scene.total_obstruction_length_3d(a, b) == pytest.approx(scene.total_obstruction_length_3d(b, a), abs=1e-9)
        assert scene.building_intersection_count_3d(a, b) == scene.building_intersection_count_3d(b, a)

    def test_index_matches_scan(self):
        rng = np.random.default_rng(3)
        footprints = [box(x, y, 8, 8) for x in range(-100, 101, 25) for y in range(-100, 101, 25)]
        heights = list(rng.uniform(5, 40, size=len(footprints)))
        scene = make_scene(footprints, heights)
        for _ in range(20):
            a = point(scene, rng.uniform(-120, 120), rng.uniform(-120, 120), 30.0)
            b = point(scene, rng.uniform(-120, 120), rng.uniform(-120, 120), 1.5)
            assert scene.trace_ray(a, b, use_index=True) == scene.trace_ray(a, b, use_index=False)

    def test_adding_building_never_decreases_obstruction(self):
        footprints = [box(-20, 0, 10, 20)]
        tx_xy, ue_xy = (-50, 0), (50, 0)
        first = make_scene(footprints)
        second = make_scene(footprints + [box(20, 0, 6, 6)])
        before = first.total_obstruction_length_3d(point(first, *tx_xy, 10), point(first, *ue_xy, 10))
        after = second.total_obstruction_length_3d(point(second, *tx_xy, 10), point(second, *ue_xy, 10))
        assert after >= before

    def test_terrain_blocks(self):
        elevations = np.full((5, 5), 100.0)
        elevations[:, 2] = 200.0
        terrain = TerrainGrid(LON0 - 0.002, LAT0 - 0.002, 0.001, elevations)
        scene = Scene([], terrain, origin=(LON0, LAT0))
        tx = GeoPoint(LON0 - 0.0015, LAT0, 10.0)
        ue = GeoPoint(LON0 + 0.0015, LAT0, 10.0)
        assert scene.classify_los(tx, ue) is LosClass.NLOS


class TestIndoor(object):

    def test_outdoor_ue_penetration(self):
        scene = make_scene([box(0, 0, 10, 40)])
        assert scene.building_penetration_length(point(scene, -50, 0, 10), point(scene, 50, 0, 10)) == 0.0

    def test_entry_wall(self):
        scene = make_scene([[(0, -10), (20, -10), (20, 10), (0, 10)]])
        tx, ue = point(scene, -50, 0, 10), point(scene, 4, 0, 10)
        link = scene.link_geometry(tx, ue)
        assert link.ue_building_id == 0
        assert link.penetration_m == pytest.approx(4.0, abs=1e-6)
        assert link.obstruction_m == 0.0
        assert link.intersection_count == 0
        assert link.los is not LosClass.NLOS

    def test_roof_entry(self):
        scene = make_scene([box(0, 0, 20, 20)], heights=[20.0])
        tx, ue = point(scene, 0, 0, 50), point(scene, 0, 0, 17)
        assert scene.building_penetration_length(tx, ue) == pytest.approx(3.0, abs=1e-6)

    def test_is_indoor(self):
        scene = make_scene([box(30, 30, 10, 10)], heights=[20.0])
        assert scene.is_indoor(point(scene, 0, 0, 1.5)) == (False, None)
        assert scene.is_indoor(point(scene, 30, 30, 10.0)) == (True, 0)
        assert scene.is_indoor(point(scene, 30, 30, 25.0)) == (False, None)


def _ray_samples(scene, tx, ue, step):
    ''' Segment midpoints every @step metres, with the segment length. '''
    p0 = np.array(scene.project_local(tx))
    p1 = np.array(scene.project_local(ue))
    length = np.linalg.norm(p1 - p0)
    n = int(math.ceil(length / step))
    t = (np.arange(n) + 0.5) / n
    return p0[None, :] + t[:, None] * (p1 - p0)[None, :], length


def _ray_march(scene, tx, ue, step):
    ''' Brute-force in-solid length per axis-aligned building at sample midpoints. '''
    pts, length = _ray_samples(scene, tx, ue, step)
    lengths = {}
    for b in scene.buildings:
        min_x, min_y, max_x, max_y = b.bounds
        inside = ((pts[:, 0] >= min_x) & (pts[:, 0] <= max_x) & (pts[:, 1] >= min_y) & (pts[:, 1] <= max_y)
                  & (pts[:, 2] >= b.base_elev_m) & (pts[:, 2] <= b.top_m))
        if inside.any():
            lengths[b.id] = float(inside.sum()) * length / len(pts)
    return lengths


def _clearance(scene, tx, ue, exclude, step):
    ''' Brute-force gap to other buildings: lateral within their height band, or height over their roof. '''
    pts, _ = _ray_samples(scene, tx, ue, step)
    best = math.inf
    for b in scene.buildings:
        if b.id == exclude:
            continue
        min_x, min_y, max_x, max_y = b.bounds
        gap_x = np.maximum(np.maximum(min_x - pts[:, 0], pts[:, 0] - max_x), 0.0)
        gap_y = np.maximum(np.maximum(min_y - pts[:, 1], pts[:, 1] - max_y), 0.0)
        lateral = np.hypot(gap_x, gap_y)
        in_band = (pts[:, 2] >= b.base_elev_m) & (pts[:, 2] <= b.top_m)
        if in_band.any():
            best = min(best, float(lateral[in_band].min()))
        over_roof = (lateral == 0.0) & (pts[:, 2] > b.top_m)
        if over_roof.any():
            best = min(best, float((pts[over_roof, 2] - b.top_m).min()))
    return best


def _expected_los(scene, tx, ue, own, oracle, step):
    '''
    Returns:
        (LosClass): or None when the brute-force answer sits too close to a class boundary.
    '''
    others = [length for bid, length in oracle.items() if bid != own]
    if any(length > 0.05 for length in others):
        return LosClass.NLOS
    if others:
        return None
    gap = _clearance(scene, tx, ue, own, step)
    if gap < 0.01 or abs(gap - 1.0) < 0.01:
        return None
    return LosClass.LOS_TENTATIVE if gap < 1.0 else LosClass.LOS


def _random_scene(rng):
    # Non-overlapping convex prisms, one per 30 m cell.
    cells = [(x, y) for x in range(-75, 76, 30) for y in range(-75, 76, 30)]
    chosen = rng.choice(len(cells), size=int(rng.integers(1, 21)), replace=False)
    footprints = [box(cells[k][0], cells[k][1], rng.uniform(4, 25), rng.uniform(4, 25)) for k in chosen]
    heights = list(rng.uniform(5, 50, size=len(footprints)))
    return make_scene(footprints, heights)


def _indoor_ue(scene, rng):
    b = scene.buildings[int(rng.integers(len(scene.buildings)))]
    min_x, min_y, max_x, max_y = b.bounds
    return point(scene, rng.uniform(min_x + 0.5, max_x - 0.5), rng.uniform(min_y + 0.5, max_y - 0.5),
                 rng.uniform(0.5, b.height_m - 0.5))


@pytest.mark.slow
class TestGeometryOracle(object):

    def test_random_scenes_match_ray_marching(self):
        rng = np.random.default_rng(11)
        checked = {"indoor": 0, "classes": set()}
        for trial in range(200):
            scene = _random_scene(rng)
            tx = point(scene, rng.uniform(-100, 100), rng.uniform(-100, 100), rng.uniform(20, 60))
            if trial % 2:
                ue = _indoor_ue(scene, rng)
            else:
                ue = point(scene, rng.uniform(-100, 100), rng.uniform(-100, 100), 1.5)
            if scene.is_indoor(tx)[0]:
                continue
            own = scene.is_indoor(ue)[1]
            link = scene.link_geometry(tx, ue)
            oracle = _ray_march(scene, tx, ue, 0.002)

            assert link.ue_building_id == own
            assert link.penetration_m == pytest.approx(oracle.get(own, 0.0) if own is not None else 0.0, abs=0.05)
            assert link.obstruction_m == pytest.approx(sum(v for k, v in oracle.items() if k != own), abs=0.05)
            solid = {bid for bid, length in oracle.items() if length > 0.05}
            traced = set(link.traversal.building_ids())
            assert solid <= traced
            assert traced <= set(oracle) | {iv.building_id for iv in link.traversal if iv.length_m < 0.05}
            if link.los.binary() == 1:
                assert link.obstruction_m == 0.0

            expected = _expected_los(scene, tx, ue, own, oracle, 0.002)
            if expected is not None:
                assert link.los is expected
                checked["classes"].add(expected)
            if own is not None:
                checked["indoor"] += 1

        assert checked["indoor"] >= 50
        assert {LosClass.LOS, LosClass.NLOS} <= checked["classes"]


class TestSceneIO(object):

    def test_round_trip(self, tmp_path):
        scene = make_scene([box(0, 0, 10, 40), box(50, 20, 12, 8)], heights=[12.0, 33.5])
        write_esri_ascii(scene.terrain, str(tmp_path / "terrain.asc"))
        write_buildings_geojson(scene, str(tmp_path / "buildings.geojson"))
        loaded = load_scene(str(tmp_path / "buildings.geojson"), str(tmp_path / "terrain.asc"))
        assert loaded.terrain.get_parameters() == pytest.approx(scene.terrain.get_parameters())
        assert loaded.terrain.elevations == pytest.approx(scene.terrain.elevations)
        assert [b.id for b in loaded.buildings] == [0, 1]
        assert loaded.buildings[1].height_m == 33.5
        tx, ue = point(scene, -50, 0, 10), point(scene, 50, 0, 10)
        assert loaded.total_obstruction_length_3d(tx, ue) == pytest.approx(10.0, abs=1e-5)

    def test_center_header_accepted(self, tmp_path):
        path = tmp_path / "grid.asc"
        path.write_text("ncols 2\nnrows 2\nxllcenter -79.4\nyllcenter 43.7\ncellsize 0.01\n1 2\n3 4\n")
        grid = read_esri_ascii(str(path))
        # First data row is the northern-most.
        assert grid.altitude(-79.4, 43.7) == pytest.approx(3.0)

    def test_nodata_rejected(self, tmp_path):
        path = tmp_path / "grid.asc"
        path.write_text("ncols 2\nnrows 2\nxllcorner -79.4\nyllcorner 43.7\ncellsize 0.01\nNODATA_value -9999\n1 2\n-9999 4\n")
        with pytest.raises(SceneError):
            read_esri_ascii(str(path))

    def test_short_row_reports_file(self, tmp_path):
        path = tmp_path / "grid.asc"
        path.write_text("ncols 2\nnrows 2\nxllcorner -79.4\nyllcorner 43.7\ncellsize 0.01\n1 2\n3\n")
        with pytest.raises(IngestError) as info:
            read_esri_ascii(str(path))
        assert str(path) in str(info.value)

    def test_missing_height(self, tmp_path):
        scene = make_scene()
        write_esri_ascii(scene.terrain, str(tmp_path / "terrain.asc"))
        ring = [[LON0, LAT0], [LON0 + 0.0001, LAT0], [LON0 + 0.0001, LAT0 + 0.0001], [LON0, LAT0]]
        collection = {"type": "FeatureCollection",
                      "features": [{"type": "Feature", "properties": {},
                                    "geometry": {"type": "Polygon", "coordinates": [ring]}}]}
        (tmp_path / "buildings.geojson").write_text(json.dumps(collection))
        with pytest.raises(IngestError):
            load_scene(str(tmp_path / "buildings.geojson"), str(tmp_path / "terrain.asc"))

    def test_building_outside_terrain(self):
        terrain = TerrainGrid(LON0, LAT0, 0.001, [[0.0, 0.0], [0.0, 0.0]])
        with pytest.raises(SceneError):
            Scene([Building(0, box(5000, 5000, 10, 10), 10.0)], terrain, origin=(LON0, LAT0))

    def test_digest_stable(self):
        assert make_scene([box(0, 0, 10, 10)]).digest() == make_scene([box(0, 0, 10, 10)]).digest()
        assert make_scene([box(0, 0, 10, 10)]).digest() != make_scene([box(0, 0, 10, 11)]).digest()


def test_earth_radius():
    assert EARTH_RADIUS_M == 6371000.0
