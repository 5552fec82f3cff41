"""Country mood indicators from pandemic attention and stock prices"""

from __future__ import annotations

from moodgauge.enums import ColorScale, MoodLabel, SeriesKind, Side, WindowMode
from moodgauge.errors import (
    IndicatorError,
    IngestionError,
    InvalidConfiguration,
    InvalidSeries,
    MoodGaugeBaseError,
    ReportError,
)
from moodgauge.indicators import (
    ThresholdProfile,
    h_index,
    mood_window_index,
    normalize_prices,
    r_index,
    weekly_windows,
    zeta_sweep,
)
from moodgauge.ingestion import PanelConfig, build_panel, parse_series
from moodgauge.model import AlignedPair, CountryPanel, ObservationSeries
from moodgauge.pipeline import CountryResult, compute_all

__version__ = "1.0.0"
