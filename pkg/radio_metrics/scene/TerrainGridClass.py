''' TerrainGridClass.py: Contains the TerrainGrid class (elevation cells on a regular lon/lat grid). '''

# Python imports.
import math

# Other imports.
import numpy as np

from radio_metrics.errors import SceneError

# Slack for extent checks so points computed from the grid's own corners are accepted.
_EXTENT_EPS_DEG = 1e-9


class TerrainGrid(object):
    '''
    Square cells @cell_size_deg wide, each value sitting at its cell centre.
    Cell (i, j) is centred on (origin_lon + j * cell_size_deg, origin_lat + i * cell_size_deg),
    so row 0 is the southern-most row. Altitudes between centres are bilinear; in the
    outer half cell they hold the edge value.
    '''

    def __init__(self, origin_lon, origin_lat, cell_size_deg, elevations):
        '''
        Args:
            origin_lon (float): longitude of the south-west cell centre.
            origin_lat (float): latitude of the south-west cell centre.
            cell_size_deg (float)
            elevations (array-like): rows x cols, row 0 south.
        '''
        grid = np.array(elevations, dtype=float)
        if grid.ndim != 2 or grid.shape[0] < 2 or grid.shape[1] < 2:
            raise SceneError("(radio_metrics) Scene Error: terrain grid needs at least 2 x 2 nodes, got shape " + str(grid.shape) + ".")
        if not np.all(np.isfinite(grid)):
            raise SceneError("(radio_metrics) Scene Error: terrain grid contains non-finite elevations.")
        if not cell_size_deg > 0:
            raise SceneError("(radio_metrics) Scene Error: terrain cell size must be positive.")

        self.origin_lon = float(origin_lon)
        self.origin_lat = float(origin_lat)
        self.cell_size_deg = float(cell_size_deg)
        self.elevations = grid
        self.elevations.setflags(write=False)

    @property
    def rows(self):
        return self.elevations.shape[0]

    @property
    def cols(self):
        return self.elevations.shape[1]

    @property
    def extent(self):
        '''
        Returns:
            (tuple): (lon_min, lon_max, lat_min, lat_max) of the outer cell edges.
        '''
        half = self.cell_size_deg / 2.0
        return (self.origin_lon - half,
                self.origin_lon + (self.cols - 1) * self.cell_size_deg + half,
                self.origin_lat - half,
                self.origin_lat + (self.rows - 1) * self.cell_size_deg + half)

    @property
    def center(self):
        lon_min, lon_max, lat_min, lat_max = self.extent
        return (lon_min + lon_max) / 2.0, (lat_min + lat_max) / 2.0

    def contains(self, lon, lat):
        lon_min, lon_max, lat_min, lat_max = self.extent
        return (lon_min - _EXTENT_EPS_DEG <= lon <= lon_max + _EXTENT_EPS_DEG
                and lat_min - _EXTENT_EPS_DEG <= lat <= lat_max + _EXTENT_EPS_DEG)

    def altitude(self, lon, lat):
        '''
        Args:
            lon (float)
            lat (float)

        Returns:
            (float): bilinear interpolation of the four surrounding cell centres.
        '''
        if not self.contains(lon, lat):
            raise SceneError("(radio_metrics) Scene Error: terrain query (" + str(lon) + ", " + str(lat) + ") outside grid extent " + str(self.extent) + ".")
        return float(self.altitudes(np.array([lon]), np.array([lat]))[0])

    def altitudes(self, lons, lats):
        '''
        Summary:
            Vectorized bilinear lookup. Callers guarantee the points are in extent.
        '''
        fx = (np.asarray(lons, dtype=float) - self.origin_lon) / self.cell_size_deg
        fy = (np.asarray(lats, dtype=float) - self.origin_lat) / self.cell_size_deg
        fx = np.clip(fx, 0.0, self.cols - 1)
        fy = np.clip(fy, 0.0, self.rows - 1)
        j = np.minimum(np.floor(fx).astype(int), self.cols - 2)
        i = np.minimum(np.floor(fy).astype(int), self.rows - 2)
        tx = fx - j
        ty = fy - i
        e = self.elevations
        return ((1.0 - tx) * (1.0 - ty) * e[i, j]
                + tx * (1.0 - ty) * e[i, j + 1]
                + (1.0 - tx) * ty * e[i + 1, j]
                + tx * ty * e[i + 1, j + 1])

    def get_parameters(self):
        return {"origin_lon": self.origin_lon,
                "origin_lat": self.origin_lat,
                "cell_size_deg": self.cell_size_deg,
                "rows": self.rows,
                "cols": self.cols}

    def __eq__(self, other):
        return (isinstance(other, TerrainGrid)
                and self.get_parameters() == other.get_parameters()
                and np.array_equal(self.elevations, other.elevations))

    def __str__(self):
        return "terrain-" + str(self.rows) + "x" + str(self.cols) + "@" + str(self.cell_size_deg) + "deg"


def flat_terrain(lon_min, lat_min, lon_max, lat_max, elevation_m=0.0, cell_size_deg=None):
    '''
    Summary:
        Convenience constructor for a constant-elevation grid covering the given box.
    '''
    if cell_size_deg is None:
        cell_size_deg = max(lon_max - lon_min, lat_max - lat_min)
    cols = max(2, int(math.ceil((lon_max - lon_min) / cell_size_deg)) + 1)
    rows = max(2, int(math.ceil((lat_max - lat_min) / cell_size_deg)) + 1)
    return TerrainGrid(lon_min, lat_min, cell_size_deg, np.full((rows, cols), float(elevation_m)))
