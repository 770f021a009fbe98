"""Exception hierarchy.

Three branches map onto the CLI exit codes: ConfigError -> 2,
DataError -> 3, NumericalError -> 4.
"""


class EigenloadError(Exception):
    """Base class for all package errors."""


class ConfigError(EigenloadError):
    """Bad configuration file or incompatible option values."""


class DataError(EigenloadError):
    """Input data violates a contract of the pipeline."""


class NumericalError(EigenloadError):
    """A numerical routine failed to produce a usable result."""


# ingest
class DuplicateTimestamp(DataError):
    pass


class IrregularGrid(DataError):
    pass


class EmptyInput(DataError):
    pass


class SchemaError(DataError):
    pass


class UnknownBuilding(DataError):
    pass


# behavior
class MissingArea(DataError):
    pass


class DegenerateSeries(DataError):
    pass


class NoCompleteDays(DataError):
    pass


# eigen
class NotSymmetric(DataError):
    pass


class NoConvergence(NumericalError):
    pass


class DegenerateSpectrum(NumericalError):
    pass


class ShapeError(DataError):
    pass


# embed / cluster
class TooFewPoints(DataError):
    pass


class OptimizationDiverged(NumericalError):
    pass


# reporting
class ReportInputMissing(DataError):
    pass
