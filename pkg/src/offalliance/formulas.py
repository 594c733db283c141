"""Closed-form bound expressions with the rounding used in the catalog.

Integer-valued expressions use exact integer arithmetic. Expressions that
involve the Laplacian spectral radius take ``mu_hi = mu + tolerance`` (every
such expression is monotone nondecreasing in mu, so this is conservative in
both the lower- and upper-bound direction) and round with a 1e-9 guard.
"""

from __future__ import annotations

import math

from .errors import DomainError

EPS = 1e-9


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ceil_guarded(x: float) -> int:
    return math.ceil(x - EPS)


def floor_guarded(x: float) -> int:
    return math.floor(x + EPS)


def _ceil_minus_sqrt(c: int, radicand: int) -> int:
    """ceil((c - sqrt(radicand)) / 4), exact.

    For an integer t, t <= sqrt(R) iff t <= isqrt(R), so the smallest k with
    c - 4k <= sqrt(R) is ceil((c - isqrt(R)) / 4).
    """
    if radicand < 0:
        raise DomainError(f"negative radicand {radicand}")
    return ceil_div(c - math.isqrt(radicand), 4)


# lower bounds on the global offensive numbers

def k_domination_lower(n: int, max_deg: int, k: int) -> int:
    return ceil_div(k * n, max_deg + k)


def degree_parity_lower(n: int, min_deg: int, max_deg: int, strong: bool) -> int | None:
    """Lower bound through ceil((d+1)/2)- or ceil((d+2)/2)-domination.

    Returns None when the expression is 0/0 (edgeless, plain kind).
    """
    if strong:
        a = min_deg + 3 if min_deg % 2 else min_deg + 2
    else:
        a = min_deg + 1 if min_deg % 2 else min_deg
    den = 2 * max_deg + a
    if den == 0:
        return None
    return ceil_div(n * a, den)


def order_size_lower(n: int, m: int, strong: bool) -> int:
    if strong:
        return _ceil_minus_sqrt(3 * n + 1, 9 * n * n - 10 * n - 16 * m + 1)
    return _ceil_minus_sqrt(3 * n, 9 * n * n - 8 * n - 16 * m)


def max_degree_lower(n: int, m: int, max_deg: int, strong: bool) -> int:
    if strong:
        return ceil_div(2 * (m + n), 3 * max_deg + 2)
    return ceil_div(2 * m + n, 3 * max_deg + 1)


def spectral_lower(n: int, min_deg: int, mu_hi: float, strong: bool) -> int | None:
    if mu_hi <= 0:
        return None
    need = (ceil_div(min_deg, 2) + 1) if strong else ceil_div(min_deg + 1, 2)
    return ceil_guarded(n / mu_hi * need)


def connected_lower(n: int, m: int, max_deg: int, diam: int, strong: bool) -> int:
    if strong:
        return ceil_div(2 * (m + n + (diam - 1) ** 2), 2 * n + max_deg + 2)
    return ceil_div(2 * m + n + 2 * (diam - 1) ** 2, 2 * n + max_deg + 1)


def minimal_connected_complement_lower(n: int, max_deg: int, strong: bool) -> int:
    if strong:
        return ceil_div(4 * n - 2, max_deg + 4)
    return ceil_div(3 * n - 2, max_deg + 3)


# upper bounds

def spectral_upper(n: int, min_deg: int, mu_hi: float) -> int:
    return floor_guarded(n * (2 * mu_hi - min_deg) / (2 * mu_hi))


def independence_spectral_upper(n: int, min_deg: int, mu_hi: float) -> float:
    return n * (mu_hi - min_deg) / mu_hi
