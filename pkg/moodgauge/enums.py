from __future__ import annotations

from enum import Enum, IntEnum, unique


@unique
class SeriesKind(str, Enum):
    """The two kinds of observation series a panel is built from"""

    SEARCH = "search"
    PRICE = "price"

    def __str__(self) -> str:
        return self.value


@unique
class MoodLabel(IntEnum):
    """
    Reading of a joint variation value. Negative values are optimistic (searches
    fall while prices rise), positive values pessimistic.
    We use an IntEnum so that a label compares equal to its joint variation.
    """

    STRONG_OPTIMISM = -2
    MILD_OPTIMISM = -1
    NEUTRAL = 0
    MILD_PESSIMISM = 1
    STRONG_PESSIMISM = 2

    def __str__(self) -> str:
        """
        Return the label name rather than 'MoodLabel.<label>'
        E.g.
        >>> str(MoodLabel.STRONG_OPTIMISM)
        'strong_optimism'
        """
        return self.name.lower()


@unique
class WindowMode(str, Enum):
    ISO_WEEK = "iso-week"
    FIXED_5 = "fixed-5"

    def __str__(self) -> str:
        return self.value


@unique
class Side(str, Enum):
    """Which side of the fair value 1/2 is being counted"""

    ABOVE = "above"
    BELOW = "below"

    def __str__(self) -> str:
        return self.value


@unique
class ColorScale(str, Enum):
    DIVERGING = "diverging"
    SEQUENTIAL = "sequential"

    def __str__(self) -> str:
        return self.value
