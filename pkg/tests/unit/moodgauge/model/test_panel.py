from __future__ import annotations

from datetime import date
from decimal import Decimal

import pytest

from moodgauge.errors import InvalidSeries
from moodgauge.model import (
    AlignedPair,
    CountryCode,
    CountryPanel,
    NormalizedSeries,
    PairAggregates,
)

from tests.util import make_pair, weekdays


@pytest.mark.parametrize("code", ["ITA", "GRC", "BHR"])
def test_country_code(code: str):
    assert str(CountryCode(code)) == code
    assert CountryCode.parse(code) == CountryCode.parse(CountryCode(code))


@pytest.mark.parametrize("code", ["it", "ITAL", "ita", "I1A", ""])
def test_country_code_rejects(code: str):
    with pytest.raises(InvalidSeries):
        CountryCode(code)


def test_normalized_series_locates_first_hundred():
    series = NormalizedSeries.from_values([40, 100, 100, 0])
    assert series.argmax_index == 1
    assert len(series) == 4
    assert series[1] == 100


@pytest.mark.parametrize(
    "values, argmax_index",
    [((), 0), ((50, 99), 1), ((100, 101), 0), ((100, 50), 1)],
)
def test_normalized_series_invariants(values, argmax_index):
    with pytest.raises(InvalidSeries):
        NormalizedSeries(values=values, argmax_index=argmax_index)


def test_normalized_series_must_reach_hundred():
    with pytest.raises(InvalidSeries):
        NormalizedSeries.from_values([10, 20])


def test_aligned_pair_properties():
    dates = weekdays(date(2020, 3, 9), 3)
    pair = make_pair([5, 60, 0], [100, 50, 25], country="ITA", index_id="FTSEMIB", dates=dates)

    assert pair.T == 3
    assert pair.label == "ITA:FTSEMIB"
    assert pair.search_peak == 60
    assert pair.search_peak_on_grid is False
    assert pair.price_argmax_date == dates[0]


@pytest.mark.parametrize(
    "w, p_norm",
    [
        ([5], [100]),
        ([0, 5], [100, 50]),
        ([5, 101], [100, 50]),
        ([5, 6, 7], [100, 50]),
    ],
)
def test_aligned_pair_invariants(w, p_norm):
    with pytest.raises(InvalidSeries):
        AlignedPair(
            country=CountryCode("TST"),
            index_id="IDX",
            dates=tuple(weekdays(date(2020, 1, 6), len(w))),
            w=tuple(w),
            p_norm=NormalizedSeries.from_values(p_norm),
        )


def test_aligned_pair_rejects_unordered_dates():
    with pytest.raises(InvalidSeries):
        make_pair([1, 2], [100, 1], dates=[date(2020, 1, 7), date(2020, 1, 6)])


def test_aligned_pair_rejects_raw_price_length_mismatch():
    with pytest.raises(InvalidSeries):
        AlignedPair(
            country=CountryCode("TST"),
            index_id="IDX",
            dates=tuple(weekdays(date(2020, 1, 6), 2)),
            w=(1, 2),
            p_norm=NormalizedSeries.from_values([100, 1]),
            raw_prices=(Decimal(1),),
        )


def test_raw_prices_do_not_affect_equality():
    pair = make_pair([1, 2], [100, 1])
    with_prices = AlignedPair(
        country=pair.country,
        index_id=pair.index_id,
        dates=pair.dates,
        w=pair.w,
        p_norm=pair.p_norm,
        raw_prices=(Decimal(100), Decimal(1)),
    )
    assert with_prices == pair


@pytest.mark.parametrize("W, P_bar", [(0, 100), (10, 0), (-1, 100), (True, 100)])
def test_pair_aggregates_must_be_positive(W, P_bar):  # noqa: N803
    with pytest.raises(InvalidSeries):
        PairAggregates(W=W, P_bar=P_bar)


def test_country_panel():
    panel = CountryPanel(
        country=CountryCode("ITA"),
        pairs=(
            make_pair([1, 2], [100, 1], country="ITA", index_id="A"),
            make_pair([1, 2], [100, 1], country="ITA", index_id="B"),
        ),
    )
    assert panel.K == 2
    assert panel.index_ids == ("A", "B")


@pytest.mark.parametrize(
    "pairs",
    [
        (),
        (make_pair([1, 2], [100, 1], country="GRC"),),
        (
            make_pair([1, 2], [100, 1], country="ITA", index_id="A"),
            make_pair([3, 2], [100, 1], country="ITA", index_id="A"),
        ),
    ],
)
def test_country_panel_invariants(pairs):
    with pytest.raises(InvalidSeries):
        CountryPanel(country=CountryCode("ITA"), pairs=pairs)
