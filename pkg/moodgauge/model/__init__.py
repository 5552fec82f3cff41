from moodgauge.enums import MoodLabel, SeriesKind
from moodgauge.model.panel import (
    AlignedPair,
    CountryCode,
    CountryCodeLike,
    CountryPanel,
    NormalizedSeries,
    PairAggregates,
)
from moodgauge.model.series import (
    Observation,
    ObservationSeries,
    PriceLike,
    TradingDate,
    as_decimal,
)
