"""Custom Errors"""

from __future__ import annotations

from typing import TYPE_CHECKING, ClassVar

if TYPE_CHECKING:
    from moodgauge.ingestion.diagnostics import DiagnosticsReport
    from moodgauge.model import CountryPanel


class MoodGaugeBaseError(Exception):
    """
    Base Exception from which all other custom Exceptions defined in moodgauge
    inherit
    """


class InvalidConfiguration(MoodGaugeBaseError):
    """Raised when configuration is deemed invalid"""


class InvalidSeries(ValueError, MoodGaugeBaseError):
    """
    Raised when a model object is constructed from values which violate its
    invariants. Values are never repaired silently.
    """


######
# Ingestion
######
class IngestionError(MoodGaugeBaseError):
    """
    Base class for every failure while turning raw input files into aligned pairs.
    ``code`` is the machine-readable identifier written to the diagnostics report.
    """

    code: ClassVar[str] = "IngestionError"


class MalformedRow(IngestionError):
    """Raised when a CSV row cannot be parsed, or a date appears twice"""

    code = "MalformedRow"


class OutOfRange(IngestionError):
    """Raised when a search value lies outside [0, 100] or a price is negative"""

    code = "OutOfRange"


class NonMonotoneDates(IngestionError):
    """Raised when the dates of a series are not strictly increasing"""

    code = "NonMonotoneDates"


class EmptySeries(IngestionError):
    code = "EmptySeries"


class AllZero(IngestionError):
    """Raised when a search series never records a nonnull value"""

    code = "AllZero"


class AllZeroPrices(IngestionError):
    """Raised when every price of a series is zero, so no maximum can scale it"""

    code = "AllZeroPrices"


class InsufficientOverlap(IngestionError):
    """Raised when fewer than two trading days remain after alignment"""

    code = "InsufficientOverlap"


class MissingSearchValue(IngestionError):
    """
    Raised when a trading day inside the span of the search series has no search
    row. A missing row is not the same thing as a zero.
    """

    code = "MissingSearchValue"


class InputReadError(IngestionError):
    """Raised when an input file cannot be read"""

    code = "IoError"


class CountryEmpty(IngestionError):
    """
    Raised once a whole panel has been attempted and at least one country lost all
    of its indexes. The panels which could be built and the full diagnostics are
    attached so callers can still report them.
    """

    code = "CountryEmpty"

    def __init__(
        self,
        message: str,
        *,
        countries: tuple[str, ...] = (),
        panels: list[CountryPanel] | None = None,
        diagnostics: DiagnosticsReport | None = None,
    ) -> None:
        super().__init__(message)
        self.countries = countries
        self.panels = panels or []
        self.diagnostics = diagnostics


######
# Indicators
######
class IndicatorError(MoodGaugeBaseError):
    """Base class for failures while evaluating an indicator"""


class ZeroTotal(IndicatorError):
    """Raised when a total used as a denominator is zero"""


class IndexOutOfRange(IndexError, IndicatorError):
    """Raised when a time index or window falls outside 1..T"""


class EmptyList(IndicatorError):
    """Raised when an average is requested over no values"""


class OutOfDomain(ValueError, IndicatorError):
    """Raised when a joint variation is outside {-2, -1, 0, 1, 2}"""


class BadGrid(ValueError, IndicatorError):
    """
    Raised when a threshold grid is empty, not strictly increasing or leaves
    [0, 100]
    """


class WindowTooLong(IndicatorError):
    """
    Raised when a calendar week holds more trading days than a window may contain
    """


class IndicatorRangeError(IndicatorError):
    """
    Raised when an indicator evaluates outside [0, 1]. This can only be caused by a
    logic error and is never clamped.
    """


######
# Reporting
######
class ReportError(MoodGaugeBaseError):
    """Base class for failures while building report artifacts"""


class EmptyInput(ValueError, ReportError):
    pass


class ShapeMismatch(ValueError, ReportError):
    """Raised when the cells of a matrix do not match its row and column labels"""


class InvalidCell(ValueError, ReportError):
    """Raised when a heatmap cell lies outside [0, 1]"""


class NonFiniteCell(InvalidCell):
    pass
