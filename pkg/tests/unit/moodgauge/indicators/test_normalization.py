from __future__ import annotations

from decimal import Decimal

import pytest

from moodgauge.errors import AllZeroPrices, InvalidSeries
from moodgauge.indicators import normalize_prices

from tests.util import oracle_normalize, random_raw_prices


@pytest.mark.parametrize(
    "raw, expected, argmax_index",
    [
        ((3, 7, 9), (33, 77, 100), 2),
        ((5, 5, 5), (100, 100, 100), 0),
        ((0, 10), (0, 100), 1),
        (("0.3", "0.7", "0.9"), (33, 77, 100), 2),
        (("21345.67", "21345.66", "10672.835"), (100, 99, 50), 0),
        (("1", "0.0099"), (100, 0), 0),
    ],
)
def test_normalize_prices(raw, expected, argmax_index):
    result = normalize_prices(raw)
    assert result.values == expected
    assert result.argmax_index == argmax_index


def test_all_zero_prices():
    with pytest.raises(AllZeroPrices):
        normalize_prices((0, Decimal("0.00")))


@pytest.mark.parametrize("raw", [(), (-1, 5)])
def test_invalid_prices(raw):
    with pytest.raises(InvalidSeries):
        normalize_prices(raw)


def test_matches_integer_oracle(rng):
    for _ in range(200):
        raw = random_raw_prices(rng, rng.randint(1, 30))
        assert list(normalize_prices(raw).values) == oracle_normalize(raw)


@pytest.mark.parametrize("factor", [Decimal(2), Decimal(10), Decimal("0.5")])
def test_scale_invariance(factor: Decimal, rng):
    for _ in range(100):
        raw = random_raw_prices(rng, rng.randint(1, 30))
        assert normalize_prices([p * factor for p in raw]) == normalize_prices(raw)


def test_idempotent_on_normalized_series(rng):
    for _ in range(100):
        once = normalize_prices(random_raw_prices(rng, rng.randint(1, 30)))
        assert normalize_prices(once.values) == once


def test_monotone(rng):
    for _ in range(100):
        raw = random_raw_prices(rng, rng.randint(2, 30))
        values = normalize_prices(raw).values
        for i in range(len(raw)):
            for j in range(len(raw)):
                if raw[i] <= raw[j]:
                    assert values[i] <= values[j]
