from moodgauge.ingestion.alignment import align, trim_to_first_nonnull
from moodgauge.ingestion.config import CountrySource, IndexSource, PanelConfig
from moodgauge.ingestion.diagnostics import Diagnostic, DiagnosticsReport
from moodgauge.ingestion.panel import FileResolver, build_panel, path_resolver
from moodgauge.ingestion.reader import parse_series
