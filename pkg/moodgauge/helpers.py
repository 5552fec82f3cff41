from __future__ import annotations

import hashlib
import logging
import os
import re
from functools import wraps
from typing import TYPE_CHECKING, Any, Callable, NamedTuple, TypeVar

from moodgauge.const import THREADS_ENV_VAR

if TYPE_CHECKING:
    from moodgauge.indicators import WeekLabel

log = logging.getLogger(__name__)


def format_arg(value: Any) -> str:
    """Helper to format an argument for logging"""
    if type(value) == str:
        return f"'{value.strip()}'"
    if isinstance(value, (bytes, bytearray)):
        return f"<{len(value)} bytes>"
    return str(value)


_R = TypeVar("_R")
_FuncType = Callable[..., _R]


def logged_function(logger: logging.Logger) -> Callable[[_FuncType[_R]], _FuncType[_R]]:
    """
    Decorator which adds debug logging of a function's input arguments and return
    value.

    The input arguments are logged before the function is called, and the
    return value is logged once it has completed.

    :param logger: Logger to send output to.
    """

    def _logged_function(func: _FuncType[_R]) -> _FuncType[_R]:
        @wraps(func)
        def _wrapper(*args: Any, **kwargs: Any) -> _R:
            logger.debug(
                "%s(%s, %s)",
                func.__name__,
                ", ".join([format_arg(x) for x in args]),
                ", ".join([f"{k}={format_arg(v)}" for k, v in kwargs.items()]),
            )

            # Call function
            result = func(*args, **kwargs)

            # Log result
            logger.debug("%s -> %s", func.__qualname__, str(result))
            return result

        return _wrapper

    return _logged_function


class WeekRange(NamedTuple):
    """
    Inclusive range of ISO weeks, either by bare week number (``10:11``) or by
    full label (``2020-W10:2020-W11``)
    """

    start: tuple[int, int] | int
    end: tuple[int, int] | int

    def contains(self, year: int, week: int) -> bool:
        if isinstance(self.start, int) and isinstance(self.end, int):
            return self.start <= week <= self.end
        return self.start <= (year, week) <= self.end  # type: ignore[operator]

    def contains_label(self, label: WeekLabel) -> bool:
        return self.contains(label.year, label.week)


_WEEK_LABEL_RE = re.compile(r"^(?P<year>\d{4})-W(?P<week>\d{1,2})$")


def _parse_week_bound(text: str) -> tuple[int, int] | int:
    text = text.strip()
    if text.isdigit():
        return int(text)
    match = _WEEK_LABEL_RE.fullmatch(text)
    if not match:
        raise ValueError(f"Cannot parse {text!r} as a week number or YYYY-Www label")
    return (int(match.group("year")), int(match.group("week")))


def parse_week_range(text: str) -> WeekRange:
    """
    Parse a week range given as ``A:B``. Both bounds must be of the same kind.

    >>> parse_week_range("10:11").contains(2020, 10)
    True
    """
    start_text, sep, end_text = text.partition(":")
    if not sep:
        raise ValueError(f"Week range {text!r} must be given as A:B")

    start, end = _parse_week_bound(start_text), _parse_week_bound(end_text)
    if type(start) is not type(end):
        raise ValueError(f"Week range {text!r} mixes week numbers and week labels")
    if start > end:  # type: ignore[operator]
        raise ValueError(f"Week range {text!r} is empty")
    return WeekRange(start, end)


def parse_country_codes(text: str) -> tuple[str, ...]:
    """Split a comma separated list of country codes, normalising case"""
    codes = tuple(
        dict.fromkeys(code.strip().upper() for code in text.split(",") if code.strip())
    )
    if not codes:
        raise ValueError("No country codes given")
    return codes


def resolve_worker_count(requested: int | None = None) -> int:
    """
    Work out how many workers to fan out to. An explicit request wins, then the
    environment, then the same default as ``ThreadPoolExecutor``.
    """
    if requested is None:
        env_value = os.getenv(THREADS_ENV_VAR, "").strip()
        if env_value:
            try:
                requested = int(env_value)
            except ValueError:
                log.warning(
                    "Ignoring %s=%r, it is not an integer", THREADS_ENV_VAR, env_value
                )

    if requested is not None and requested >= 1:
        return requested

    return min(32, (os.cpu_count() or 1) + 4)


def sha256_digest(content: bytes) -> str:
    return hashlib.sha256(content).hexdigest()
