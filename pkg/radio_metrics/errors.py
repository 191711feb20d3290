''' errors.py: Exception types raised across radio_metrics. '''


class RadioMetricsError(Exception):
    ''' Base class for every error raised by radio_metrics. '''


class SceneError(RadioMetricsError, ValueError):
    ''' Bad scene input or a query outside the scene extent. '''


class DegenerateSegmentError(SceneError):
    ''' Ray endpoints coincide. '''


class GeohashError(RadioMetricsError, ValueError):
    pass


class FeatureRangeError(RadioMetricsError, ValueError):
    '''
    Raised when an assembled feature falls outside its documented range.
    The record is flagged for exclusion, never clamped.
    '''

    def __init__(self, field, value, reason=None):
        self.field = field
        self.value = value
        self.reason = reason if reason is not None else field + " out of range"
        RadioMetricsError.__init__(self, "(radio_metrics) Feature Error: " + self.reason + " (value=" + repr(value) + ").")


class UnknownTransmitterError(RadioMetricsError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class StandardizerError(RadioMetricsError, ValueError):
    pass


class PathLossModelError(RadioMetricsError, ValueError):
    pass


class NetworkShapeError(RadioMetricsError, ValueError):
    pass


class NonFiniteLossError(RadioMetricsError, RuntimeError):
    ''' Training produced a NaN/inf loss. @diagnostics holds the step context. '''

    def __init__(self, message, diagnostics=None):
        self.diagnostics = dict(diagnostics or {})
        detail = ", ".join(key + "=" + str(val) for key, val in sorted(self.diagnostics.items()))
        RadioMetricsError.__init__(self, message + (" [" + detail + "]" if detail else ""))


class SplitError(RadioMetricsError, ValueError):
    pass


class LeakageError(SplitError):
    ''' Train and blind-test splits share a geohash6 cell. '''


class SearchError(RadioMetricsError, RuntimeError):
    pass


class BundleFormatError(RadioMetricsError, ValueError):
    pass


class SchemaMismatchError(RadioMetricsError, ValueError):
    pass


class IngestError(RadioMetricsError, ValueError):
    ''' Malformed input file. @position names the file and line/field where parsing failed. '''

    def __init__(self, message, position=None):
        self.position = position
        where = " at " + str(position) if position is not None else ""
        RadioMetricsError.__init__(self, "(radio_metrics) Ingest Error" + where + ": " + message)


class ReportError(RadioMetricsError, ValueError):
    pass
