DEFAULT_CONFIG_FILE = "moodgauge.toml"
DEFAULT_OUTPUT_DIR = "moodgauge-out"
MANIFEST_FILE = "manifest.txt"

# Exit codes
EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_USAGE_ERROR = 2
