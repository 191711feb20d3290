'''
Crowdsourced measurement records.

    TransmitterClass: serving cell antenna.
    MeasurementRecordClass: one UE report with its targets.
'''

# Grab classes.
from radio_metrics.measurements.TransmitterClass import Transmitter
from radio_metrics.measurements.MeasurementRecordClass import MeasurementRecord
