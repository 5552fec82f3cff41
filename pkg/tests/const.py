from datetime import date
from pathlib import Path

SUCCESS_EXIT_CODE = 0
DATA_ERROR_EXIT_CODE = 1
USAGE_ERROR_EXIT_CODE = 2

# Reference outputs, compared byte for byte
GOLDEN_DIR = Path(__file__).parent / "fixtures" / "golden"

# A Monday, so runs of weekdays starting here fill whole ISO weeks
A_MONDAY = date(2020, 1, 6)

# Calendar span of the bundled fixture panel, Monday of 2020-W08 to Sunday of 2020-W12
FIXTURE_FIRST_DAY = date(2020, 2, 17)
FIXTURE_LAST_DAY = date(2020, 3, 22)
FIXTURE_WEEKS = ("2020-W08", "2020-W09", "2020-W10", "2020-W11", "2020-W12")
FIXTURE_COUNTRIES = ("ITA", "GRC", "BHR")
FIXTURE_PAIRS = ("ITA:FTSEMIB", "ITA:FTSEITALIA", "GRC:ATHEX", "BHR:BAX")

# Thresholds exercised against the brute-force oracles
ORACLE_ZETAS = (0, 1, 5, 50, 100)

EXPECTED_REPORT_FILES = (
    "A_weekly_by_index.csv",
    "A_weekly_by_index.svg",
    "A_weekly_by_country.csv",
    "A_weekly_by_country.svg",
    "H_by_zeta.csv",
    "H_by_zeta.svg",
    "H_by_zeta_by_index.csv",
    "H_by_zeta_by_index.svg",
    "R_by_zeta.csv",
    "R_by_zeta.svg",
    "R_by_zeta_by_index.csv",
    "R_by_zeta_by_index.svg",
    "search_by_date.csv",
    "search_by_date.svg",
    "prices_by_date.csv",
    "prices_by_date.svg",
    "rankings.csv",
    "rank_trajectories.csv",
    "weekly_breadth.csv",
    "summary_stats.csv",
    "country_profiles.csv",
    "pairs.csv",
    "diagnostics.csv",
    "replication.txt",
)

# Reference figures of the 2020 country panel, checked only against user data
REPLICATION_CONFIG_ENV_VAR = "MOODGAUGE_REPLICATION_CONFIG"
REPLICATION_TOLERANCE = 0.02
REPLICATION_WEEK11_SHARE_BELOW_HALF = 0.81
REPLICATION_WEEK10_MEAN = 0.485
REPLICATION_WEEK11_MEAN = 0.483
REPLICATION_LOWEST = ("ITA", 0.400, 0.421)
REPLICATION_HIGHEST = ("BHR", 0.559, 0.565)
