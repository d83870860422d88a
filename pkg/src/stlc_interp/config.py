"""
config.py - Configuration constants for stlc_interp.

All configuration is immutable and defined at module level.
No mutable global state is permitted.
"""

from typing import Final

# Step budget for normalization. Well-typed terms always normalize;
# exhausting the budget signals a bug or a budget set too low.
DEFAULT_FUEL: Final[int] = 10_000

# Joinability search bounds
DEFAULT_JOIN_BOUND: Final[int] = 20
ETA_SWAP_JOIN_BOUND: Final[int] = 8

# Visited-term limit when exploring every reduction path of a term
DEFAULT_EXPLORATION_LIMIT: Final[int] = 5_000

# Memoized one-step reduct sets kept by the confluence checks
SUCCESSOR_CACHE_SIZE: Final[int] = 65_536

# Depth of enum_types used for cut types during term enumeration
ANNOTATION_DEPTH: Final[int] = 1

# Certificate document format
CERTIFICATE_FORMAT_VERSION: Final[int] = 1

# Partition tag characters, leftmost = oldest binding
TAG_SOURCE: Final[str] = "s"
TAG_TARGET: Final[str] = "t"

# Environment overrides read by the CLI (flags win)
FUEL_ENV_VAR: Final[str] = "STLC_INTERP_FUEL"
LOG_LEVEL_ENV_VAR: Final[str] = "STLC_INTERP_LOG_LEVEL"

# CLI exit codes
EXIT_FAILED: Final[int] = 1
EXIT_INPUT_ERROR: Final[int] = 2
