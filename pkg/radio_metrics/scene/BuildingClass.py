''' BuildingClass.py: Contains the Building class, a flat-roofed vertical prism. '''

# Python imports.
from collections import defaultdict

# Other imports.
from shapely.geometry import Point, Polygon

from radio_metrics.errors import SceneError


class Building(object):
    ''' A building footprint (local metric x/y) extruded from @base_elev_m up by @height_m. '''

    def __init__(self, building_id, footprint, height_m, base_elev_m=0.0):
        '''
        Args:
            building_id (int)
            footprint (list of tuples: [(float, float), ...]): local metric vertices, open or closed ring.
            height_m (float)
            base_elev_m (float): terrain elevation at the footprint centroid.
        '''
        vertices = [(float(x), float(y)) for x, y in footprint]
        if len(vertices) > 1 and vertices[0] == vertices[-1]:
            vertices = vertices[:-1]
        if len(vertices) < 3:
            raise SceneError("(radio_metrics) Scene Error: building " + str(building_id) + " needs at least 3 footprint vertices.")
        if not height_m > 0:
            raise SceneError("(radio_metrics) Scene Error: building " + str(building_id) + " has non-positive height " + str(height_m) + ".")

        polygon = Polygon(vertices)
        if not polygon.is_valid:
            raise SceneError("(radio_metrics) Scene Error: building " + str(building_id) + " footprint is not a simple polygon.")
        if polygon.area <= 0:
            raise SceneError("(radio_metrics) Scene Error: building " + str(building_id) + " footprint has zero area.")

        self.id = int(building_id)
        self.footprint = tuple(vertices)
        self.polygon = polygon
        self.height_m = float(height_m)
        self.base_elev_m = float(base_elev_m)

    @property
    def top_m(self):
        return self.base_elev_m + self.height_m

    @property
    def bounds(self):
        ''' Returns (min_x, min_y, max_x, max_y) of the footprint. '''
        return self.polygon.bounds

    def covers_xy(self, x, y):
        return self.polygon.covers(Point(x, y))

    def get_parameters(self):
        '''
        Returns:
            (dict) key=param_name (str) --> val=param_val (object).
        '''
        param_dict = defaultdict(int)
        param_dict["id"] = self.id
        param_dict["footprint"] = [list(v) for v in self.footprint]
        param_dict["height_m"] = self.height_m
        param_dict["base_elev_m"] = self.base_elev_m
        return param_dict

    def __str__(self):
        return "building-" + str(self.id)
