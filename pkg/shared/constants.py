"""
Constants and configuration parameters for fan graph spanning tree listings.
"""

# Graph Configuration
MIN_VERTICES = 2  # F_2 is a single edge between v_2 and the hub
FIRST_PATH_LABEL = 2  # Path vertices are labeled v_2 .. v_n

# Tree Text Format
HUB_TOKEN = "inf"
EDGE_SEPARATOR = ";"
VERTEX_SEPARATOR = ","
MOVE_REMOVE_PREFIX = "-"
MOVE_ADD_PREFIX = "+"

# Ranking Configuration
FIB_TABLE_DEFAULT_N = 64  # Fibonacci numbers precomputed up to f_{2(N-1)}
BASE_CASE_MAX_N = 4  # Rank/unrank fall back to frozen listings for n <= 4

# Oracle Configuration
ORACLE_MAX_N = 14  # Subset enumeration over C(2n-3, n-1) candidates

# Greedy Configuration
GREEDY_WARN_N = 14  # Visited set holds t_n bitsets; warn above this size

# Benchmark Configuration
BENCH_DEFAULT_REPEAT = 1
