# Constants used throughout
K_DEFAULT = 1
M_DEFAULT = 2  # Choice of m used to compare against the rank-free bounds
EPSILON_DEFAULT = 0.01
DELTA_DEFAULT = 0.0075
RANK_C_DEFAULT = 0.722
RANK_C0_DEFAULT = 0
P_LIMIT_DEFAULT = 200

WORKERS_DEFAULT = 1
MEMORY_BUDGET_MB_DEFAULT = 512
MEMORY_BUDGET_ENV = "PENCIL_POINTS_MEMORY_BUDGET_MB"
POINT_MEMORY_BYTES = 200  # Rough size of one stored point with its tuple
ENUM_ROW_BYTES = 64  # numpy work arrays per x1 value in one x0 row

SEARCH_RADIUS_DEFAULT = 10
SEARCH_B_DEFAULT = 20
SEARCH_MIN_POINTS_DEFAULT = 8
SEARCH_PRIMES = (3, 5, 7)

CURVE_KEYS = ("a", "b")
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

POINT_COLUMNS = ["x0", "x1", "x2", "x3", "height"]
BOUND_COLUMNS = [
    "curve",
    "B",
    "H",
    "absD",
    "rank_source",
    "thm11",
    "cor12",
    "eq13",
    "eq14",
    "thm31",
    "thm13",
    "NB",
]
CSV_FLOAT_FORMAT = "%.12g"

INFINITE_STRING = "infinite"

OUTPUT_FORMATS = ("text", "json", "csv")
CSV_FILE_EXT = ".csv"
JSON_FILE_EXT = ".json"
