'''
kml_export.py: KML 2.2 export of transmitter-to-UE links colored by LOS class.

Colors use the KML aabbggrr byte order: NLOS red, LOS green, LOS_TENTATIVE blue.
'''

# Python imports.
import logging

# Other imports.
import simplekml

from radio_metrics.errors import ReportError
from radio_metrics.scene.RayTraversalClass import LosClass

logger = logging.getLogger(__name__)

LOS_COLORS = {
    LosClass.NLOS: "ff0000ff",
    LosClass.LOS: "ff00ff00",
    LosClass.LOS_TENTATIVE: "ffff0000",
}


class LinkKml(object):
    ''' One line placemark per link, sharing one style per LOS class. '''

    def __init__(self, name="links", width=2):
        self.kml = simplekml.Kml(name=name)
        self.styles = {}
        for los, color in LOS_COLORS.items():
            style = simplekml.Style()
            style.linestyle.color = color
            style.linestyle.width = width
            self.styles[los] = style
        self.count = 0

    def add_link(self, name, tx_point, ue_point, los):
        '''
        Args:
            name (str)
            tx_point (GeoPoint)
            ue_point (GeoPoint)
            los (LosClass)
        '''
        ls = self.kml.newlinestring(name=str(name), description=los.value)
        ls.coords = [(tx_point.lon, tx_point.lat, tx_point.alt_ag_m), (ue_point.lon, ue_point.lat, ue_point.alt_ag_m)]
        ls.altitudemode = simplekml.AltitudeMode.relativetoground
        ls.style = self.styles[los]
        self.count += 1

    def save(self, path):
        try:
            self.kml.save(path)
        except OSError as err:
            raise ReportError("(radio_metrics) Report Error: cannot write KML to " + str(path) + " (" + str(err) + ").")


def export_kml(records, scene, path, los=None):
    '''
    Args:
        records (list of MeasurementRecord)
        scene (Scene)
        path (str)
        los (list of LosClass): precomputed classes; classified with the scene when absent.

    Returns:
        (int): placemark count (= record count).
    '''
    doc = LinkKml()
    for k, record in enumerate(records):
        tx = record.transmitter
        link_los = los[k] if los is not None else scene.classify_los(tx.point, record.ue)
        doc.add_link(record.record_id, tx.point, record.ue, link_los)
    doc.save(path)
    logger.info("Wrote %d links to %s.", doc.count, path)
    return doc.count
