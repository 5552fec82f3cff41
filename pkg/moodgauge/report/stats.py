from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np

from moodgauge.const import HALF
from moodgauge.enums import Side
from moodgauge.errors import EmptyInput, NonFiniteCell

if TYPE_CHECKING:
    from decimal import Decimal
    from typing import Sequence, Union

    Number = Union[Fraction, Decimal, float, int]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SummaryStats:
    """
    Descriptive statistics of a series. ``std_dev`` is the population standard
    deviation (divisor ``n_obs``).
    """

    n_obs: int
    min: float
    max: float
    mean: float
    std_dev: float

    def __post_init__(self) -> None:
        if self.n_obs < 1:
            raise EmptyInput("summary statistics need at least one observation")
        if not self.min <= self.mean <= self.max:
            raise ValueError(
                f"mean {self.mean} lies outside [{self.min}, {self.max}]"
            )
        if self.std_dev < 0:
            raise ValueError(f"negative standard deviation {self.std_dev}")


def _as_array(values: Sequence[Number], what: str) -> np.ndarray:
    if len(values) == 0:
        raise EmptyInput(f"cannot compute {what} of an empty list")
    array = np.asarray([float(value) for value in values], dtype=np.float64)
    if not np.isfinite(array).all():
        raise NonFiniteCell(f"cannot compute {what} of non-finite values")
    return array


def summarize(values: Sequence[Number]) -> SummaryStats:
    array = _as_array(values, "summary statistics")
    low, high = float(array.min()), float(array.max())
    # rounding in the float sum can push the mean of a constant series past its bounds
    mean = float(np.clip(array.mean(), low, high))
    return SummaryStats(
        n_obs=int(array.size),
        min=low,
        max=high,
        mean=mean,
        std_dev=float(array.std(ddof=0)),
    )


def fraction_beyond_half(values: Sequence[Number], side: Side) -> Fraction:
    """Share of ``values`` strictly above (or strictly below) one half"""
    if len(values) == 0:
        raise EmptyInput("cannot count an empty list")
    if side is Side.ABOVE:
        hits = sum(1 for value in values if value > HALF)
    else:
        hits = sum(1 for value in values if value < HALF)
    return Fraction(hits, len(values))
