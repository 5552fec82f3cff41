from moodgauge.indicators.normalization import normalize_prices
from moodgauge.indicators.temporal import (
    MoodWindowScore,
    WeekLabel,
    Window,
    country_mood_window,
    mood_window_index,
    pair_aggregates,
    pair_window_scores,
    weekly_country_scores,
    weekly_windows,
)
from moodgauge.indicators.threshold import (
    DEFAULT_ZETA_GRID,
    ThresholdProfile,
    classify_delta,
    country_mean,
    delta,
    deltas,
    h_index,
    r_index,
    sign_variation,
    zeta_grid,
    zeta_sweep,
)
