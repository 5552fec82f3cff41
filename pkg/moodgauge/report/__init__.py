from moodgauge.report.artifacts import build_artifacts, rankings, replication_summary
from moodgauge.report.heatmap import color_of, emit_heatmap_svg
from moodgauge.report.matrix import (
    ABSENT,
    Matrix,
    emit_matrix,
    emit_matrix_csv,
    emit_table_csv,
    format_value,
    parse_matrix_csv,
)
from moodgauge.report.ranking import (
    RankedCountry,
    WeeklyRanking,
    rank_trajectories,
    rank_week,
)
from moodgauge.report.stats import SummaryStats, fraction_beyond_half, summarize
