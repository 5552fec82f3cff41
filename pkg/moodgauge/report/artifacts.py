"""
Assembly of every report file of a run.

All files are rendered in memory first; :func:`build_artifacts` returns them in a
fixed order so that writing and digesting them is deterministic.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple

from moodgauge.const import SCALE_MAX
from moodgauge.enums import ColorScale, Side
from moodgauge.indicators import pair_aggregates
from moodgauge.report.heatmap import emit_heatmap_svg
from moodgauge.report.matrix import (
    ABSENT,
    Matrix,
    emit_matrix,
    emit_table_csv,
    format_value,
)
from moodgauge.report.ranking import rank_trajectories, rank_week
from moodgauge.report.stats import fraction_beyond_half, summarize

if TYPE_CHECKING:
    from datetime import date
    from typing import Callable, Iterable, Sequence

    from moodgauge.ingestion import DiagnosticsReport
    from moodgauge.pipeline import CountryResult
    from moodgauge.report.matrix import Cell
    from moodgauge.report.ranking import WeeklyRanking

log = logging.getLogger(__name__)

SUMMARY_HEADER = ("family", "subject", "n_obs", "min", "max", "mean", "std_dev_pop")
RANKINGS_HEADER = ("week", "rank", "country", "value")
BREADTH_HEADER = (
    "week",
    "n_countries",
    "mean",
    "share_below_half",
    "share_above_half",
)
PROFILE_HEADER = (
    "country",
    "indicator",
    "min",
    "at_min",
    "max",
    "at_max",
    "share_above_half",
    "share_below_half",
)
PAIRS_HEADER = (
    "country",
    "index_id",
    "start",
    "end",
    "T",
    "W",
    "P_bar",
    "search_peak",
    "search_peak_on_grid",
    "price_argmax_date",
)


def _pair_label(country: object, index_id: str) -> str:
    return f"{country}:{index_id}"


def _weeks(results: Sequence[CountryResult]) -> list[str]:
    labels = {score.week for result in results for score in result.weekly}
    return [str(label) for label in sorted(labels)]


def weekly_by_index(results: Sequence[CountryResult]) -> Matrix:
    values = {
        (_pair_label(result.country, pw.pair.index_id), str(week)): value
        for result in results
        for pw in result.pair_weeks
        for week, value in pw.weeks
    }
    rows = [
        _pair_label(result.country, pw.pair.index_id)
        for result in results
        for pw in result.pair_weeks
    ]
    return Matrix.build(
        rows,
        _weeks(results),
        lambda row, week: values.get((row, week), ABSENT),  # type: ignore[arg-type]
        corner="pair",
    )


def weekly_by_country(results: Sequence[CountryResult]) -> Matrix:
    values = {
        (str(result.country), str(score.week)): score.country_value
        for result in results
        for score in result.weekly
    }
    return Matrix.build(
        [str(result.country) for result in results],
        _weeks(results),
        lambda row, week: values.get((row, week), ABSENT),  # type: ignore[arg-type]
        corner="country",
    )


def _zeta_grid(results: Sequence[CountryResult]) -> tuple[int, ...]:
    return results[0].profile.zeta_grid if results else ()


def by_zeta(results: Sequence[CountryResult], name: str) -> Matrix:
    series = {str(result.country): result.profile.series(name) for result in results}
    grid = _zeta_grid(results)
    return Matrix(
        row_labels=tuple(series),
        col_labels=tuple(str(zeta) for zeta in grid),
        cells=tuple(tuple(values) for values in series.values()),
        corner="country",
    )


def by_zeta_by_index(results: Sequence[CountryResult], name: str) -> Matrix:
    rows = {
        _pair_label(result.country, index_id): result.profile.series(name, index_id)
        for result in results
        for index_id in result.profile.index_ids
    }
    return Matrix(
        row_labels=tuple(rows),
        col_labels=tuple(str(zeta) for zeta in _zeta_grid(results)),
        cells=tuple(tuple(values) for values in rows.values()),
        corner="pair",
    )


def _date_matrix(
    rows: dict[str, dict[date, int]], corner: str, scale: Callable[[int], Cell]
) -> Matrix:
    dates = sorted({day for values in rows.values() for day in values})
    return Matrix.build(
        rows,
        dates,
        lambda row, day: (
            scale(rows[row][day]) if day in rows[row] else ABSENT  # type: ignore[index]
        ),
        corner=corner,
    )


def _search_rows(results: Sequence[CountryResult]) -> dict[str, dict[date, int]]:
    rows: dict[str, dict[date, int]] = {}
    for result in results:
        values = rows.setdefault(str(result.country), {})
        for pair in result.panel.pairs:
            values.update(zip(pair.dates, pair.w))
    return rows


def _price_rows(results: Sequence[CountryResult]) -> dict[str, dict[date, int]]:
    return {
        pair.label: dict(zip(pair.dates, pair.p_norm.values))
        for result in results
        for pair in result.panel.pairs
    }


def _on_unit_scale(value: int) -> Fraction:
    return Fraction(value, SCALE_MAX)


def rankings(results: Sequence[CountryResult]) -> list[WeeklyRanking]:
    """One ranking per week; countries without a value that week are left out"""
    by_week: dict[object, dict[str, Fraction]] = {}
    for result in results:
        for score in result.weekly:
            by_week.setdefault(score.week, {})[str(result.country)] = (
                score.country_value
            )
    return [rank_week(scores, week) for week, scores in sorted(by_week.items())]


def _rankings_rows(ranked: Iterable[WeeklyRanking]) -> list[list[Cell]]:
    return [
        [ranking.week, entry.rank, str(entry.country), entry.value]
        for ranking in ranked
        for entry in ranking.entries
    ]


class WeekBreadth(NamedTuple):
    week: str
    n_countries: int
    mean: Fraction
    share_below_half: Fraction
    share_above_half: Fraction


def week_breadth(ranking: WeeklyRanking) -> WeekBreadth:
    values = [Fraction(entry.value) for entry in ranking.entries]
    return WeekBreadth(
        week=ranking.week,
        n_countries=len(values),
        mean=sum(values, Fraction(0)) / len(values),
        share_below_half=fraction_beyond_half(values, Side.BELOW),
        share_above_half=fraction_beyond_half(values, Side.ABOVE),
    )


def _summary_row(family: str, subject: str, values: Sequence) -> list[Cell]:
    stats = summarize(values)
    return [
        family,
        subject,
        stats.n_obs,
        stats.min,
        stats.max,
        stats.mean,
        stats.std_dev,
    ]


def _summary_rows(results: Sequence[CountryResult]) -> list[list[Cell]]:
    rows: list[list[Cell]] = []
    for result in results:
        for pair in result.panel.pairs:
            rows.append(_summary_row("search", pair.label, pair.w))
            if pair.raw_prices:
                rows.append(_summary_row("price", pair.label, pair.raw_prices))
            rows.append(
                _summary_row("normalized_price", pair.label, pair.p_norm.values)
            )
    for result in results:
        for pw in result.pair_weeks:
            if pw.weeks:
                rows.append(
                    _summary_row(
                        "A_by_index",
                        pw.pair.label,
                        [value for _, value in pw.weeks],
                    )
                )
    for result in results:
        if result.weekly:
            rows.append(
                _summary_row(
                    "A_by_country",
                    str(result.country),
                    [score.country_value for score in result.weekly],
                )
            )
    for name in ("H", "R"):
        for result in results:
            for index_id in result.profile.index_ids:
                rows.append(
                    _summary_row(
                        f"{name}_by_index",
                        _pair_label(result.country, index_id),
                        result.profile.series(name, index_id),
                    )
                )
        for result in results:
            rows.append(
                _summary_row(
                    f"{name}_by_country",
                    str(result.country),
                    result.profile.series(name),
                )
            )
    return rows


def _extremes(labels: Sequence[str], values: Sequence[Fraction]) -> list[Cell]:
    # ties resolve to the first label in order
    low = min(range(len(values)), key=lambda i: values[i])
    high = max(range(len(values)), key=lambda i: (values[i], -i))
    return [values[low], labels[low], values[high], labels[high]]


def _profile_rows(results: Sequence[CountryResult]) -> list[list[Cell]]:
    rows: list[list[Cell]] = []
    for result in results:
        indicators: list[tuple[str, list[str], list[Fraction]]] = []
        if result.weekly:
            indicators.append(
                (
                    "A",
                    [str(score.week) for score in result.weekly],
                    [score.country_value for score in result.weekly],
                )
            )
        grid_labels = [str(zeta) for zeta in result.profile.zeta_grid]
        indicators.append(("H", grid_labels, result.profile.series("H")))
        indicators.append(("R", grid_labels, result.profile.series("R")))
        for name, labels, values in indicators:
            rows.append(
                [
                    str(result.country),
                    name,
                    *_extremes(labels, values),
                    fraction_beyond_half(values, Side.ABOVE),
                    fraction_beyond_half(values, Side.BELOW),
                ]
            )
    return rows


def _pairs_rows(results: Sequence[CountryResult]) -> list[list[Cell]]:
    rows: list[list[Cell]] = []
    for result in results:
        for pair in result.panel.pairs:
            agg = pair_aggregates(pair)
            rows.append(
                [
                    str(pair.country),
                    pair.index_id,
                    pair.dates[0].isoformat(),
                    pair.dates[-1].isoformat(),
                    pair.T,
                    agg.W,
                    agg.P_bar,
                    pair.search_peak,
                    "true" if pair.search_peak_on_grid else "false",
                    pair.price_argmax_date.isoformat(),
                ]
            )
    return rows


def replication_summary(
    results: Sequence[CountryResult], ranked: Sequence[WeeklyRanking]
) -> dict[str, str]:
    """
    Headline figures of a run as ``key=value`` pairs: per week the number of
    countries, their mean mood and the share below and above one half; and the
    lowest and highest country H and R at the smallest threshold of the grid.
    """
    summary: dict[str, str] = {}
    for breadth in map(week_breadth, ranked):
        prefix = f"week.{breadth.week}"
        summary[f"{prefix}.n_countries"] = str(breadth.n_countries)
        summary[f"{prefix}.mean"] = format_value(breadth.mean)
        summary[f"{prefix}.share_below_half"] = format_value(breadth.share_below_half)
        summary[f"{prefix}.share_above_half"] = format_value(breadth.share_above_half)

    grid = _zeta_grid(results)
    if grid:
        zeta = grid[0]
        summary["threshold.zeta"] = str(zeta)
        countries = [str(result.country) for result in results]
        for name in ("H", "R"):
            values = [result.profile.series(name)[0] for result in results]
            low, low_country, high, high_country = _extremes(countries, values)
            key = f"threshold.{name}"
            summary[f"{key}.min"] = format_value(low)
            summary[f"{key}.min_country"] = str(low_country)
            summary[f"{key}.max"] = format_value(high)
            summary[f"{key}.max_country"] = str(high_country)
    return summary


def render_key_values(values: dict[str, str]) -> bytes:
    return "".join(f"{key}={value}\n" for key, value in values.items()).encode(
        "utf-8"
    )


def _heatmap_pair(
    files: dict[str, bytes],
    stem: str,
    matrix: Matrix,
    *,
    title: str,
    csv_matrix: Matrix | None = None,
    scale: ColorScale = ColorScale.DIVERGING,
) -> None:
    files[f"{stem}.csv"] = emit_matrix(csv_matrix or matrix)
    if matrix.present_values():
        files[f"{stem}.svg"] = emit_heatmap_svg(matrix, scale, title=title)
    else:
        log.warning("%s has no values, no heatmap is drawn", stem)


def build_artifacts(
    results: Sequence[CountryResult],
    diagnostics: DiagnosticsReport | None = None,
) -> dict[str, bytes]:
    """Render every report file, keyed by file name"""
    files: dict[str, bytes] = {}

    _heatmap_pair(
        files,
        "A_weekly_by_index",
        weekly_by_index(results),
        title="Weekly mood index by stock index",
    )
    _heatmap_pair(
        files,
        "A_weekly_by_country",
        weekly_by_country(results),
        title="Weekly mood index by country",
    )
    for name, caption in (("H", "Aggregated mood"), ("R", "Optimism ratio")):
        _heatmap_pair(
            files,
            f"{name}_by_zeta",
            by_zeta(results, name),
            title=f"{caption} by threshold",
        )
        _heatmap_pair(
            files,
            f"{name}_by_zeta_by_index",
            by_zeta_by_index(results, name),
            title=f"{caption} by threshold and stock index",
        )

    search_rows = _search_rows(results)
    _heatmap_pair(
        files,
        "search_by_date",
        _date_matrix(search_rows, "country", _on_unit_scale),
        csv_matrix=_date_matrix(search_rows, "country", int),
        title="Attention series by trading day",
        scale=ColorScale.SEQUENTIAL,
    )
    price_rows = _price_rows(results)
    _heatmap_pair(
        files,
        "prices_by_date",
        _date_matrix(price_rows, "pair", _on_unit_scale),
        csv_matrix=_date_matrix(price_rows, "pair", int),
        title="Normalized prices by trading day",
        scale=ColorScale.SEQUENTIAL,
    )

    ranked = rankings(results)
    files["rankings.csv"] = emit_table_csv(RANKINGS_HEADER, _rankings_rows(ranked))
    files["rank_trajectories.csv"] = emit_matrix(rank_trajectories(ranked))
    files["weekly_breadth.csv"] = emit_table_csv(
        BREADTH_HEADER, [list(week_breadth(ranking)) for ranking in ranked]
    )
    files["summary_stats.csv"] = emit_table_csv(SUMMARY_HEADER, _summary_rows(results))
    files["country_profiles.csv"] = emit_table_csv(
        PROFILE_HEADER, _profile_rows(results)
    )
    files["pairs.csv"] = emit_table_csv(PAIRS_HEADER, _pairs_rows(results))
    if diagnostics is not None:
        files["diagnostics.csv"] = diagnostics.to_csv_bytes()
    files["replication.txt"] = render_key_values(replication_summary(results, ranked))

    log.info("rendered %s report files", len(files))
    return files
