"""
Price normalization onto the attention scale.

Every price is divided by the period maximum, scaled to 100 and truncated to its
integer part. The ratio is evaluated as an exact rational of the decimal prices,
so rescaling all prices by a decimal factor never changes the result.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import TYPE_CHECKING

from moodgauge.const import SCALE_MAX
from moodgauge.errors import AllZeroPrices, InvalidSeries
from moodgauge.model import NormalizedSeries, as_decimal

if TYPE_CHECKING:
    from typing import Sequence

    from moodgauge.model import PriceLike

log = logging.getLogger(__name__)


def normalize_prices(raw: Sequence[PriceLike]) -> NormalizedSeries:
    """
    Map nonnegative prices to integers in [0, 100]:
    ``floor(100 * raw[t] / max(raw))``.

    The earliest maximizer is recorded as ``argmax_index`` and is set to a literal
    100; tied maxima also map to 100. Zero prices map to 0.
    """
    if not raw:
        raise InvalidSeries("cannot normalize an empty price series")

    exact = [Fraction(as_decimal(value)) for value in raw]
    for value in exact:
        if value < 0:
            raise InvalidSeries(f"prices must be nonnegative, got {float(value)}")

    top = max(exact)
    if top == 0:
        raise AllZeroPrices(f"all {len(exact)} prices are zero")

    argmax_index = exact.index(top)
    values = tuple(
        SCALE_MAX if t == argmax_index else math.floor(SCALE_MAX * value / top)
        for t, value in enumerate(exact)
    )
    log.debug(
        "normalized %s prices, maximum %s at position %s",
        len(values),
        float(top),
        argmax_index,
    )
    return NormalizedSeries(values=values, argmax_index=argmax_index)
