'''
scene_io.py: Reading and writing scene inputs.

Functions:
    read_esri_ascii: ESRI ASCII grid -> TerrainGrid.
    write_esri_ascii: TerrainGrid -> ESRI ASCII grid.
    read_buildings_geojson: GeoJSON FeatureCollection of Polygons -> list of Building.
    write_buildings_geojson: Scene buildings -> GeoJSON FeatureCollection.
    load_scene: Builds a Scene from the two files.
'''

# Python imports.
import errno
import json
import logging
import math
import os

# Other imports.
import geojson
import numpy as np
import rasterio
from rasterio.errors import RasterioError
from rasterio.transform import from_origin

from radio_metrics.errors import IngestError, SceneError
from radio_metrics.scene.BuildingClass import Building
from radio_metrics.scene.SceneClass import Scene, local_to_lonlat, lonlat_to_local
from radio_metrics.scene.TerrainGridClass import TerrainGrid

logger = logging.getLogger(__name__)

ESRI_DRIVER = "AAIGrid"
NODATA_VALUE = -9999.0
# geojson rounds coordinates to 6 decimals (about 0.1 m) unless told otherwise.
COORD_PRECISION = 15


# -------------
# -- Terrain --
# -------------

def read_esri_ascii(path):
    '''
    Args:
        path (str)

    Returns:
        (TerrainGrid)

    Notes:
        The first data row is the northern-most. Values sit at cell centres: half a cell
        in from xllcorner/yllcorner, or exactly at xllcenter/yllcenter. NODATA cells are
        rejected.
    '''
    if not os.path.isfile(path):
        raise FileNotFoundError(errno.ENOENT, os.strerror(errno.ENOENT), str(path))
    try:
        # The driver reads Float32 unless asked otherwise.
        with rasterio.Env(AAIGRID_DATATYPE="Float64"), rasterio.open(path, driver=ESRI_DRIVER) as src:
            band = src.read(1, masked=True)
            transform = src.transform
    except RasterioError as err:
        raise IngestError(str(err), position=str(path))

    if not math.isclose(transform.a, -transform.e, rel_tol=1e-9) or transform.b != 0 or transform.d != 0:
        raise IngestError("cells must be square and north-up, got transform " + repr(tuple(transform)[:6]), position=str(path))
    if np.ma.is_masked(band):
        raise SceneError("(radio_metrics) Scene Error: terrain grid " + str(path) + " contains NODATA cells.")

    cell = float(transform.a)
    rows = band.shape[0]
    south_west_lon = transform.c + cell / 2.0
    south_west_lat = transform.f - (rows - 0.5) * cell
    return TerrainGrid(south_west_lon, south_west_lat, cell, np.ma.getdata(band)[::-1])


def write_esri_ascii(terrain, path):
    ''' Writes @terrain with an xllcorner/yllcorner header, north row first. '''
    cell = terrain.cell_size_deg
    lon_min, _, _, lat_max = terrain.extent
    profile = {"driver": ESRI_DRIVER,
               "height": terrain.rows,
               "width": terrain.cols,
               "count": 1,
               "dtype": "float64",
               "nodata": NODATA_VALUE,
               "transform": from_origin(lon_min, lat_max, cell, cell)}
    with rasterio.open(path, "w", SIGNIFICANT_DIGITS=17, **profile) as dst:
        dst.write(np.ascontiguousarray(terrain.elevations[::-1]), 1)


# ---------------
# -- Buildings --
# ---------------

def _geojson_object(mapping):
    ''' geojson object hook that keeps full coordinate precision on polygons. '''
    if mapping.get("type") == "Polygon" and "coordinates" in mapping:
        return geojson.Polygon(mapping["coordinates"], precision=COORD_PRECISION)
    return geojson.GeoJSON.to_instance(mapping)


def _exterior_ring(geometry, where):
    coordinates = geometry.get("coordinates")
    if not isinstance(coordinates, list) or not coordinates:
        raise IngestError("Polygon has no coordinates", position=where)
    ring = coordinates[0]
    if not all(isinstance(r, list) for r in coordinates):
        raise IngestError("Polygon rings must be lists of positions", position=where)
    if (not isinstance(ring, list) or len(ring) < 4
            or not all(isinstance(c, list) and len(c) >= 2 for c in ring)):
        raise IngestError("exterior ring must be a list of at least 4 [lon, lat] positions", position=where)
    if not geometry.is_valid:
        raise IngestError(str(geometry.errors()), position=where)
    return ring


def read_buildings_geojson(path, terrain, origin=None):
    '''
    Args:
        path (str)
        terrain (TerrainGrid): supplies base elevations when `base_elev_m` is absent.
        origin (tuple): projection reference, defaults to the terrain centre.

    Returns:
        (list of Building): footprints projected to local metric coordinates.
    '''
    lon0, lat0 = origin if origin is not None else terrain.center
    try:
        with open(path, "r", encoding="utf-8") as geo_file:
            collection = geojson.load(geo_file, object_hook=_geojson_object)
    except UnicodeDecodeError as err:
        raise IngestError("not valid UTF-8 (byte offset " + str(err.start) + ")", position=str(path))
    except json.JSONDecodeError as err:
        raise IngestError(err.msg, position=str(path) + ":" + str(err.lineno) + ":" + str(err.colno))
    except (TypeError, ValueError) as err:
        raise IngestError(str(err), position=str(path))

    if not isinstance(collection, dict) or collection.get("type") != "FeatureCollection":
        raise IngestError("expected a GeoJSON FeatureCollection", position=str(path))
    features = collection.get("features") or []
    if not isinstance(features, list):
        raise IngestError("features must be a list", position=str(path))

    buildings = []
    for i, feature in enumerate(features):
        where = str(path) + " feature " + str(i)
        if not isinstance(feature, dict):
            raise IngestError("feature must be an object", position=where)
        geometry = feature.get("geometry") or {}
        if geometry.get("type") != "Polygon":
            raise IngestError("geometry must be a Polygon, got " + str(geometry.get("type")), position=where)
        props = feature.get("properties") or {}
        if not isinstance(props, dict):
            raise IngestError("properties must be an object", position=where)
        height = props.get("height_m")
        if not isinstance(height, (int, float)) or isinstance(height, bool) or not math.isfinite(height):
            raise IngestError("missing or non-numeric property height_m", position=where)

        # Exterior ring only.
        ring = _exterior_ring(geometry, where)
        try:
            footprint = [lonlat_to_local(float(c[0]), float(c[1]), lon0, lat0) for c in ring]
            building_id = int(props.get("id", feature.get("id", i)))
            base = float(props["base_elev_m"]) if props.get("base_elev_m") is not None else None
        except (TypeError, ValueError) as err:
            raise IngestError(str(err), position=where)
        try:
            building = Building(building_id, footprint, float(height), 0.0 if base is None else base)
        except ValueError as err:
            raise IngestError(str(err), position=where)
        if base is None:
            centroid = building.polygon.centroid
            base = terrain.altitude(*local_to_lonlat(centroid.x, centroid.y, lon0, lat0))
            building = Building(building_id, footprint, float(height), base)
        buildings.append(building)

    logger.info("Read %d buildings from %s.", len(buildings), path)
    return buildings


def write_buildings_geojson(scene, path):
    features = []
    for b in scene.buildings:
        ring = [list(scene.unproject(x, y)) for x, y in b.footprint]
        ring.append(ring[0])
        features.append(geojson.Feature(geometry=geojson.Polygon([ring], precision=COORD_PRECISION),
                                        properties={"id": b.id, "height_m": b.height_m, "base_elev_m": b.base_elev_m}))
    with open(path, "w", encoding="utf-8") as geo_file:
        geojson.dump(geojson.FeatureCollection(features), geo_file, indent=1, sort_keys=True)


def load_scene(buildings_path, terrain_path, use_index=True):
    '''
    Returns:
        (Scene)
    '''
    terrain = read_esri_ascii(terrain_path)
    buildings = read_buildings_geojson(buildings_path, terrain)
    return Scene(buildings, terrain, use_index=use_index)
