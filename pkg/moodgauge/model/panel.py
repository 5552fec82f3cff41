from __future__ import annotations

import logging
from dataclasses import dataclass, field
from decimal import Decimal
from typing import TYPE_CHECKING, Union

from moodgauge.const import COUNTRY_CODE_REGEX, SCALE_MAX
from moodgauge.errors import InvalidSeries

if TYPE_CHECKING:
    from typing import Iterable, Iterator

    from moodgauge.model.series import TradingDate

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CountryCode:
    """ISO 3166-1 alpha-3 country code, e.g. ``ITA``"""

    code: str

    def __post_init__(self) -> None:
        if not isinstance(self.code, str) or not COUNTRY_CODE_REGEX.match(self.code):
            raise InvalidSeries(
                f"{self.code!r} is not an ISO 3166-1 alpha-3 code "
                "(exactly 3 uppercase letters)"
            )

    def __str__(self) -> str:
        return self.code

    @classmethod
    def parse(cls, value: CountryCodeLike) -> CountryCode:
        return value if isinstance(value, CountryCode) else cls(value)


CountryCodeLike = Union[CountryCode, str]


@dataclass(frozen=True)
class NormalizedSeries:
    """
    Prices mapped to integers in [0, 100], with ``argmax_index`` the (0-based)
    position of the earliest raw-price maximum, which always maps to 100.
    """

    values: tuple[int, ...]
    argmax_index: int

    def __post_init__(self) -> None:
        if not self.values:
            raise InvalidSeries("a normalized series cannot be empty")
        for value in self.values:
            if type(value) is not int or not 0 <= value <= SCALE_MAX:
                raise InvalidSeries(
                    f"normalized values are integers in [0, {SCALE_MAX}], got {value!r}"
                )
        if not 0 <= self.argmax_index < len(self.values):
            raise InvalidSeries(
                f"argmax index {self.argmax_index} outside series of length "
                f"{len(self.values)}"
            )
        if self.values[self.argmax_index] != SCALE_MAX:
            raise InvalidSeries(
                f"value at argmax index {self.argmax_index} must be {SCALE_MAX}, "
                f"got {self.values[self.argmax_index]}"
            )

    @classmethod
    def from_values(cls, values: Iterable[int]) -> NormalizedSeries:
        """Wrap already-normalized values, locating the first 100"""
        values = tuple(values)
        try:
            argmax_index = values.index(SCALE_MAX)
        except ValueError as err:
            raise InvalidSeries(
                f"a normalized series must reach {SCALE_MAX}, got max "
                f"{max(values, default=None)}"
            ) from err
        return cls(values=values, argmax_index=argmax_index)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, position: int) -> int:
        return self.values[position]


@dataclass(frozen=True)
class AlignedPair:
    """
    One (country, index) pair on a common trading-day grid of length ``T``.

    ``w`` is the attention series reduced to trading days and starting on its first
    nonnull day; ``p_norm`` holds the normalized prices on the same grid. The raw
    prices on the grid are kept for reporting, they are optional when a pair is
    built directly from normalized values.
    """

    country: CountryCode
    index_id: str
    dates: tuple[TradingDate, ...]
    w: tuple[int, ...]
    p_norm: NormalizedSeries
    raw_prices: tuple[Decimal, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.country, CountryCode):
            raise InvalidSeries(f"{self.country!r} is not a CountryCode")
        if not self.index_id:
            raise InvalidSeries("index_id cannot be empty")

        n_days = len(self.dates)
        if n_days < 2:
            raise InvalidSeries(f"a pair needs at least 2 trading days, got {n_days}")
        if len(self.w) != n_days or len(self.p_norm) != n_days:
            raise InvalidSeries(
                f"length mismatch: {n_days} dates, {len(self.w)} search values, "
                f"{len(self.p_norm)} prices"
            )
        if self.raw_prices and len(self.raw_prices) != n_days:
            raise InvalidSeries(
                f"length mismatch: {n_days} dates, {len(self.raw_prices)} raw prices"
            )
        if any(b <= a for a, b in zip(self.dates, self.dates[1:])):
            raise InvalidSeries("pair dates must be strictly increasing")
        for value in self.w:
            if type(value) is not int or not 0 <= value <= SCALE_MAX:
                raise InvalidSeries(
                    f"search values are integers in [0, {SCALE_MAX}], got {value!r}"
                )
        if self.w[0] <= 0:
            raise InvalidSeries(
                "the search series must start on its first nonnull day, "
                f"got w[0] = {self.w[0]}"
            )

    @classmethod
    def from_values(
        cls,
        country: CountryCodeLike,
        index_id: str,
        dates: Iterable[TradingDate],
        w: Iterable[int],
        p_norm: Iterable[int],
    ) -> AlignedPair:
        return cls(
            country=CountryCode.parse(country),
            index_id=index_id,
            dates=tuple(dates),
            w=tuple(w),
            p_norm=NormalizedSeries.from_values(p_norm),
        )

    @property
    def T(self) -> int:  # noqa: N802
        return len(self.dates)

    @property
    def label(self) -> str:
        return f"{self.country}:{self.index_id}"

    @property
    def search_peak(self) -> int:
        return max(self.w)

    @property
    def search_peak_on_grid(self) -> bool:
        """
        False when the provider's 100 fell on a day without trading, so the
        attention series on the grid never reaches 100. The series is not rescaled.
        """
        return self.search_peak == SCALE_MAX

    @property
    def price_argmax_date(self) -> TradingDate:
        return self.dates[self.p_norm.argmax_index]


@dataclass(frozen=True)
class PairAggregates:
    """Totals of the attention series (``W``) and normalized prices (``P_bar``)"""

    W: int  # noqa: N815
    P_bar: int  # noqa: N815

    def __post_init__(self) -> None:
        for name in ("W", "P_bar"):
            value = getattr(self, name)
            if type(value) is not int or value <= 0:
                raise InvalidSeries(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class CountryPanel:
    """All pairs of one country; ``K`` is the number of surviving indexes"""

    country: CountryCode
    pairs: tuple[AlignedPair, ...]

    def __post_init__(self) -> None:
        if not self.pairs:
            raise InvalidSeries(f"country {self.country} needs at least one index")
        for pair in self.pairs:
            if pair.country != self.country:
                raise InvalidSeries(
                    f"pair {pair.label} does not belong to country {self.country}"
                )
        index_ids = [pair.index_id for pair in self.pairs]
        if len(set(index_ids)) != len(index_ids):
            raise InvalidSeries(f"duplicate index ids in country {self.country}")

    @property
    def K(self) -> int:  # noqa: N802
        return len(self.pairs)

    @property
    def index_ids(self) -> tuple[str, ...]:
        return tuple(pair.index_id for pair in self.pairs)
