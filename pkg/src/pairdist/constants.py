SERVICE_NAME = "pairdist"
DEFAULT_MAX_ENUM = 10_000_000
MAX_TABLE_ORDER = 512  # largest q with precomputed add/mul tables
MAX_PROP22_PAIRS = 1 << 20
DEFAULT_TRIALS = 100

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INCOMPLETE = 3
