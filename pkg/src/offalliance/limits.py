"""Size guards for exhaustive searches, overridable through the environment."""

import os

from .errors import CapacityError

EXACT_MAX_N = 24
ENUM_MAX_N = 16


def exact_max_n() -> int:
    return int(os.environ.get("OFFALLIANCE_MAX_EXACT_N", EXACT_MAX_N))


def enum_max_n() -> int:
    return int(os.environ.get("OFFALLIANCE_MAX_ENUM_N", ENUM_MAX_N))


def require_exact(n: int, what: str) -> None:
    limit = exact_max_n()
    if n > limit:
        raise CapacityError(f"{what}: n={n} exceeds exact-search guard {limit} "
                            f"(set OFFALLIANCE_MAX_EXACT_N to override)")


def require_enum(n: int, what: str) -> None:
    limit = enum_max_n()
    if n > limit:
        raise CapacityError(f"{what}: n={n} exceeds enumeration guard {limit} "
                            f"(set OFFALLIANCE_MAX_ENUM_N to override)")
