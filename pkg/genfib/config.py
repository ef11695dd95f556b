"""Central configuration for genfib: default grids, tolerances and bounds."""

from pathlib import Path

# --- Paths ---
PROJECT_ROOT = Path(__file__).resolve().parent.parent
OUTPUT_DIR = PROJECT_ROOT / "output"
ERRATA_PATH = OUTPUT_DIR / "errata_ledger.json"

# --- Families ---
FAMILIES = ("fib", "lucas")
DET_MODES = ("corrected", "verbatim")
OUTPUT_FORMATS = ("plain", "json", "csv")
SHOW_CHOICES = ("det", "inverse", "basis", "gram")

# --- Identity sweep grid ---
# Ranges are inclusive (lo, hi) pairs.
SWEEP_K_RANGE = (1, 8)
SWEEP_N_RANGE = (-20, 60)
SMALL_INDEX_RANGE = (-3, 3)
ALPHA_RANGE = (1, 4)
M_RANGE = (1, 10)
# Classical product-difference formulas only make sense at k = 1
CLASSICAL_K_RANGE = (1, 1)
RECIPROCAL_N_RANGE = (1, 12)

# --- Hankel / orthogonality grid ---
HANKEL_K_RANGE = (1, 5)
HANKEL_ALPHA_RANGE = (1, 4)
HANKEL_N_RANGE = (0, 6)
GRAM_N_MAX = 4

# --- Convolution grid ---
CONVOLUTION_M_MAX = 6
CONVOLUTION_N_MAX = 40
CONVOLUTION_K_MAX = 4
# composition enumeration is exponential in n
BRUTE_COMPOSITION_N_MAX = 20

# --- Analytic checks ---
FLOAT_TOLERANCE = 1e-9
ARCTAN_TAIL_TERMS = 25
ARCTAN_EXACT_M_MAX = 1000
DEFAULT_DIGITS = 12
CATALAN_PRIMES_BELOW = 200

# --- Pell / Diophantine ---
BRUTE_FORCE_MAX_BOUND = 10**6
SURFACE_MAX_BOUND = 500
PELL_ENUM_BOUND = 10**5
CLASSIFY_SCAN_BOUND = 10**6
# descent depth cap: DESCENT_LOG_FACTOR * log_phi(x) + DESCENT_SLACK
DESCENT_LOG_FACTOR = 4
DESCENT_SLACK = 16

# --- Correction solver ---
CORRECTION_FIT_K = (1, 8)
CORRECTION_FIT_N = (2, 12)
CORRECTION_CHECK_N = (13, 30)

# --- Caches ---
# per-function lru_cache size for recurrence terms, fibonomial rows and power series
CACHE_SIZE = 4096
