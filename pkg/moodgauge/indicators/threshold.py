"""
Threshold-based mood measures.

A one-step change of a series counts as a rise (+1) or a fall (-1) only when it
exceeds the threshold ``zeta`` in absolute value. The joint variation of a pair is
the sign variation of its searches minus that of its prices, so +2 is the most
anxious day (searches up, prices down) and -2 the most trusting one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Mapping

import numpy as np

from moodgauge.const import DEFAULT_ZETA_MAX, DEFAULT_ZETA_MIN, SCALE_MAX
from moodgauge.enums import MoodLabel
from moodgauge.errors import BadGrid, IndexOutOfRange, IndicatorRangeError, OutOfDomain
from moodgauge.indicators.temporal import mean_in_unit_interval
from moodgauge.model import CountryCode

if TYPE_CHECKING:
    from typing import Iterable, Sequence

    from numpy.typing import NDArray

    from moodgauge.model import AlignedPair, CountryPanel

log = logging.getLogger(__name__)

DEFAULT_ZETA_GRID: tuple[int, ...] = tuple(range(DEFAULT_ZETA_MIN, DEFAULT_ZETA_MAX + 1))


def sign_variation(x: Sequence[int], t: int, zeta: float) -> int:
    """
    Sign of the step from ``x[t]`` to ``x[t+1]`` (1-based ``t``) against ``zeta``.
    A step of exactly ``zeta`` in either direction is no change.
    """
    if not 1 <= t <= len(x) - 1:
        raise IndexOutOfRange(f"t = {t} is outside [1, {len(x) - 1}]")
    step = x[t] - x[t - 1]
    if step > zeta:
        return 1
    if step < -zeta:
        return -1
    return 0


def delta(pair: AlignedPair, t: int, zeta: float) -> int:
    """Joint variation of ``pair`` at 1-based step ``t``"""
    return sign_variation(pair.w, t, zeta) - sign_variation(pair.p_norm.values, t, zeta)


def classify_delta(d: int) -> MoodLabel:
    try:
        return MoodLabel(d)
    except ValueError as err:
        raise OutOfDomain(f"joint variation must be one of -2..2, got {d!r}") from err


def _sign_variations(x: NDArray[np.int64], zeta: float) -> NDArray[np.int64]:
    steps = np.diff(x)
    return (steps > zeta).astype(np.int64) - (steps < -zeta).astype(np.int64)


def deltas(pair: AlignedPair, zeta: float) -> NDArray[np.int64]:
    """All ``T - 1`` joint variations of ``pair`` as an integer array"""
    w = np.asarray(pair.w, dtype=np.int64)
    p = np.asarray(pair.p_norm.values, dtype=np.int64)
    return _sign_variations(w, zeta) - _sign_variations(p, zeta)


def active_steps(x: Sequence[int], zeta: float) -> int:
    """Number of steps registering a rise or a fall at threshold ``zeta``"""
    return int(np.count_nonzero(_sign_variations(np.asarray(x, dtype=np.int64), zeta)))


def _checked(value: Fraction, name: str, pair: AlignedPair, zeta: float) -> Fraction:
    if not 0 <= value <= 1:
        raise IndicatorRangeError(
            f"{name} of {pair.label} at zeta = {zeta} evaluated to {float(value)}"
        )
    return value


def h_index(pair: AlignedPair, zeta: float) -> Fraction:
    """
    Aggregated mood index ``(sum(Delta) + 2(T-1)) / (4(T-1))``.

    0 means every step was strongly optimistic, 1 strongly pessimistic.
    """
    steps = pair.T - 1
    total = int(deltas(pair, zeta).sum())
    return _checked(Fraction(total + 2 * steps, 4 * steps), "H", pair, zeta)


def r_index(pair: AlignedPair, zeta: float) -> Fraction:
    """
    Ratio index ``(n_plus - n_minus + (T-1)) / (2(T-1))`` where ``n_plus`` and
    ``n_minus`` count the steps with a joint variation of +2 and -2.
    """
    steps = pair.T - 1
    values = deltas(pair, zeta)
    n_plus = int(np.count_nonzero(values == 2))
    n_minus = int(np.count_nonzero(values == -2))
    return _checked(Fraction(n_plus - n_minus + steps, 2 * steps), "R", pair, zeta)


def mood_label_counts(pair: AlignedPair, zeta: float) -> dict[MoodLabel, int]:
    """How many steps of ``pair`` fall under each mood label at ``zeta``"""
    values = deltas(pair, zeta)
    return {label: int(np.count_nonzero(values == label)) for label in MoodLabel}


def country_mean(values: Sequence[Fraction]) -> Fraction:
    """Country-level indicator: arithmetic mean over the per-index values"""
    return mean_in_unit_interval(values, "indicator values")


def validate_grid(grid: Iterable[int]) -> tuple[int, ...]:
    grid = tuple(grid)
    if not grid:
        raise BadGrid("the threshold grid cannot be empty")
    for zeta in grid:
        if isinstance(zeta, bool) or not isinstance(zeta, int):
            raise BadGrid(f"thresholds must be integers, got {zeta!r}")
        if not 0 <= zeta <= SCALE_MAX:
            raise BadGrid(f"thresholds must lie in [0, {SCALE_MAX}], got {zeta}")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise BadGrid(f"the threshold grid must be strictly increasing, got {grid}")
    return grid


def zeta_grid(
    zeta_min: int = DEFAULT_ZETA_MIN, zeta_max: int = DEFAULT_ZETA_MAX
) -> tuple[int, ...]:
    """Every integer threshold from ``zeta_min`` to ``zeta_max`` inclusive"""
    return validate_grid(range(zeta_min, zeta_max + 1))


@dataclass(frozen=True)
class ThresholdProfile:
    """H and R of every index of a country, and their country means, over a grid"""

    country: CountryCode
    zeta_grid: tuple[int, ...]
    per_index_H: Mapping[tuple[str, int], Fraction] = field(repr=False)  # noqa: N815
    per_index_R: Mapping[tuple[str, int], Fraction] = field(repr=False)  # noqa: N815
    country_H: Mapping[int, Fraction] = field(repr=False)  # noqa: N815
    country_R: Mapping[int, Fraction] = field(repr=False)  # noqa: N815

    def __post_init__(self) -> None:
        validate_grid(self.zeta_grid)
        index_ids = self.index_ids
        for per_index, per_country, name in (
            (self.per_index_H, self.country_H, "H"),
            (self.per_index_R, self.country_R, "R"),
        ):
            for zeta in self.zeta_grid:
                expected = country_mean([per_index[(k, zeta)] for k in index_ids])
                if per_country[zeta] != expected:
                    raise IndicatorRangeError(
                        f"country {name} of {self.country} at zeta = {zeta} is not the "
                        "mean of its per-index values"
                    )

    @property
    def index_ids(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(index_id for index_id, _ in self.per_index_H))

    def series(self, name: str, index_id: str | None = None) -> list[Fraction]:
        """Values of ``H`` or ``R`` over the grid, for the country or one index"""
        if name not in ("H", "R"):
            raise ValueError(f"Unknown indicator {name!r}, expected 'H' or 'R'")
        if index_id is None:
            by_zeta = self.country_H if name == "H" else self.country_R
            return [by_zeta[zeta] for zeta in self.zeta_grid]
        per_index = self.per_index_H if name == "H" else self.per_index_R
        return [per_index[(index_id, zeta)] for zeta in self.zeta_grid]


def zeta_sweep(
    panel: CountryPanel, grid: Iterable[int] = DEFAULT_ZETA_GRID
) -> ThresholdProfile:
    """Evaluate H and R for every index and threshold, then average per country"""
    grid = validate_grid(grid)

    per_index_h: dict[tuple[str, int], Fraction] = {}
    per_index_r: dict[tuple[str, int], Fraction] = {}
    for pair in panel.pairs:
        for zeta in grid:
            per_index_h[(pair.index_id, zeta)] = h_index(pair, zeta)
            per_index_r[(pair.index_id, zeta)] = r_index(pair, zeta)

    country_h = {
        zeta: country_mean([per_index_h[(k, zeta)] for k in panel.index_ids])
        for zeta in grid
    }
    country_r = {
        zeta: country_mean([per_index_r[(k, zeta)] for k in panel.index_ids])
        for zeta in grid
    }
    log.debug(
        "swept %s thresholds over %s indexes of %s", len(grid), panel.K, panel.country
    )
    return ThresholdProfile(
        country=panel.country,
        zeta_grid=grid,
        per_index_H=per_index_h,
        per_index_R=per_index_r,
        country_H=country_h,
        country_R=country_r,
    )
