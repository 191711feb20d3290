'''
The 3D urban scene: buildings as flat-roofed prisms over a terrain grid.

    GeoPointClass: lon/lat plus height above ground.
    BuildingClass: footprint + height prism.
    TerrainGridClass: bilinear elevation grid.
    RayTraversalClass: in-solid intervals along a ray, LosClass.
    SceneClass: projection, ray tracing, LOS classification.
    scene_io: GeoJSON / ESRI ASCII grid ingestion.
'''

# Grab classes.
from radio_metrics.scene.GeoPointClass import GeoPoint
from radio_metrics.scene.BuildingClass import Building
from radio_metrics.scene.TerrainGridClass import TerrainGrid, flat_terrain
from radio_metrics.scene.RayTraversalClass import Interval, LosClass, RayTraversal
from radio_metrics.scene.SceneClass import Scene, LinkGeometry, EARTH_RADIUS_M, lonlat_to_local, local_to_lonlat
from radio_metrics.scene.scene_io import load_scene, read_buildings_geojson, read_esri_ascii, write_buildings_geojson, write_esri_ascii
