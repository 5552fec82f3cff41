from __future__ import annotations

import re
from fractions import Fraction

ISO_DATE_FORMAT = "%Y-%m-%d"

# Attention series are delivered on a 0..100 scale, prices are mapped onto it
SCALE_MAX = 100

# Threshold sweep defaults, zeta = 0, 1, ..., 50
DEFAULT_ZETA_MIN = 0
DEFAULT_ZETA_MAX = 50

WEEK_WINDOW_DAYS = 5

HALF = Fraction(1, 2)

COUNTRY_CODE_REGEX = re.compile(r"^[A-Z]{3}$")

CSV_HEADER = ("date", "value")
CSV_LINE_TERMINATOR = "\r\n"
VALUE_DECIMALS = 6

THREADS_ENV_VAR = "MOODGAUGE_THREADS"
