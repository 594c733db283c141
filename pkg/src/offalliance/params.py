"""Exact classical graph parameters: alpha, gamma_k, gamma_c, max-cut, mu.

Minimum/maximum-set solvers return the lexicographically smallest optimal
witness (comparing sorted vertex tuples), so output is deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

import numpy as np

from .errors import DomainError, InputError
from .graph import Graph, bits
from .limits import require_exact

MAXCUT_EXACT_MAX = 20
DENSE_EIG_MAX_N = 64
SPECTRAL_TOL = 1e-9


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# -- independence number ------------------------------------------------------

def _mis_size(adj: tuple[int, ...], cand: int, memo: dict[int, int]) -> int:
    if not cand:
        return 0
    hit = memo.get(cand)
    if hit is not None:
        return hit
    taken = 0
    rest = cand
    # vertices of degree <= 1 within cand can always be taken
    while True:
        low = None
        for v in bits(rest):
            if (adj[v] & rest).bit_count() <= 1:
                low = v
                break
        if low is None:
            break
        taken += 1
        rest &= ~(adj[low] | 1 << low)
    if not rest:
        best = taken
    else:
        pivot = max(bits(rest), key=lambda v: (adj[v] & rest).bit_count())
        without = _mis_size(adj, rest & ~(1 << pivot), memo)
        with_ = 1 + _mis_size(adj, rest & ~(adj[pivot] | 1 << pivot), memo)
        best = taken + max(without, with_)
    memo[cand] = best
    return best


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Maximum independent set size and the lexicographically smallest witness."""
    adj = g.adj
    memo: dict[int, int] = {}
    alpha = _mis_size(adj, g.full_mask, memo)
    chosen, cand = 0, g.full_mask
    for v in range(g.n):
        if not cand >> v & 1:
            continue
        after = cand & ~(adj[v] | 1 << v)
        if chosen.bit_count() + 1 + _mis_size(adj, after, memo) == alpha:
            chosen |= 1 << v
            cand = after
        else:
            cand &= ~(1 << v)
    return alpha, g.members(chosen)


def is_independent_mask(g: Graph, sm: int) -> bool:
    return all(not (g.adj[v] & sm) for v in bits(sm))


# -- domination ---------------------------------------------------------------

def _min_subset(g: Graph, forced: int, start: int, accept) -> int:
    """Smallest-then-lex-first mask containing ``forced`` that ``accept`` admits."""
    free = [v for v in range(g.n) if not forced >> v & 1]
    base = forced.bit_count()
    for size in range(max(start, base), g.n + 1):
        for combo in combinations(free, size - base):
            sm = forced
            for v in combo:
                sm |= 1 << v
            if accept(sm):
                return sm
    raise AssertionError("no admissible subset; V itself should always qualify")


def k_domination_number(g: Graph, k: int) -> tuple[int, frozenset[int]]:
    """Minimum H with |N_H(v)| >= k for every v outside H."""
    if not isinstance(k, int) or k < 1:
        raise InputError(f"k must be a positive integer, got {k!r}")
    require_exact(g.n, f"{k}-domination number")
    adj = g.adj
    forced = 0
    for v in range(g.n):
        if adj[v].bit_count() < k:
            forced |= 1 << v
    start = max(1, ceil_div(k * g.n, g.max_degree + k))
    outside = g.full_mask

    def accept(sm: int) -> bool:
        return all((adj[v] & sm).bit_count() >= k for v in bits(outside & ~sm))

    sm = _min_subset(g, forced, start, accept)
    return sm.bit_count(), g.members(sm)


def domination_number(g: Graph) -> tuple[int, frozenset[int]]:
    return k_domination_number(g, 1)


def closed_neighborhood_union(g: Graph, sm: int) -> int:
    out = sm
    for v in bits(sm):
        out |= g.adj[v]
    return out


def connected_domination_number(g: Graph) -> tuple[int, frozenset[int]]:
    if g.n < 2:
        raise DomainError("connected domination number needs n >= 2")
    if not g.is_connected():
        raise DomainError("connected domination number is undefined for a disconnected graph")
    require_exact(g.n, "connected domination number")
    full = g.full_mask

    def accept(sm: int) -> bool:
        return closed_neighborhood_union(g, sm) == full and g.mask_is_connected(sm)

    sm = _min_subset(g, 0, 1, accept)
    return sm.bit_count(), g.members(sm)


# -- max-cut ------------------------------------------------------------------

@dataclass(frozen=True)
class CutPartition:
    x: frozenset[int]
    y: frozenset[int]
    cut_size: int


def cut_size(g: Graph, xm: int, ym: int) -> int:
    return sum((g.adj[v] & ym).bit_count() for v in bits(xm))


def _orient(g: Graph, am: int, bm: int) -> CutPartition:
    """Put the smaller side (or, on ties, the side holding the smallest vertex) in x."""
    a, b = am.bit_count(), bm.bit_count()
    if b < a or (a == b and bm and (bm & -bm) < (am & -am)):
        am, bm = bm, am
    return CutPartition(g.members(am), g.members(bm), cut_size(g, am, bm))


def _exact_cut(g: Graph, verts: list[int]) -> CutPartition:
    k = len(verts)
    pos = {v: j for j, v in enumerate(verts)}
    idx = np.arange(1 << k, dtype=np.int64)
    cut = np.zeros(1 << k, dtype=np.int32)
    for u in verts:
        for w in bits(g.adj[u]):
            if w in pos and w > u:
                cut += ((idx >> pos[u]) ^ (idx >> pos[w])) & 1
    cand = np.flatnonzero(cut == cut.max())
    pc = np.bitwise_count(cand).astype(np.int64)
    full = (1 << k) - 1
    # orient each optimum so x is the smaller side; equal splits keep both
    xs = np.concatenate([cand[pc <= k - pc], full ^ cand[pc >= k - pc]])
    sizes = np.bitwise_count(xs)
    xs = xs[sizes == sizes.min()]
    # lexicographically smallest sorted tuple == largest bit-reversed code
    rev = np.zeros_like(xs)
    for j in range(k):
        rev |= ((xs >> j) & 1) << (k - 1 - j)
    best = int(xs[np.argmax(rev)])
    xm = sum(1 << verts[j] for j in range(k) if best >> j & 1)
    ym = sum(1 << v for v in verts) & ~xm
    return CutPartition(g.members(xm), g.members(ym), cut_size(g, xm, ym))


def _local_cut(g: Graph, verts: list[int]) -> CutPartition:
    xm = sum(1 << v for i, v in enumerate(verts) if i % 2 == 0)
    allm = sum(1 << v for v in verts)
    adj = g.adj
    moved = True
    while moved:
        moved = False
        for v in verts:
            side = xm if xm >> v & 1 else allm & ~xm
            same = (adj[v] & side).bit_count()
            other = (adj[v] & allm & ~side).bit_count()
            if same > other:
                xm ^= 1 << v
                moved = True
    return _orient(g, xm, allm & ~xm)


def max_cut_partition(sub: Iterable[int], g: Graph,
                      mode: Literal["auto", "exact", "local_search"] = "auto") -> CutPartition:
    """Bipartition ``sub`` into (x, y) with |x| <= |y| and a maximal edge cut.

    ``exact`` enumerates all bipartitions; ``local_search`` returns a
    single-vertex-move local optimum, i.e. every vertex has at least as many
    neighbors on the opposite side as on its own. ``auto`` is exact up to
    20 vertices.
    """
    verts = sorted(g.members(g.mask(sub)))
    if len(verts) < 2:
        raise InputError("max-cut partition needs at least two vertices")
    if mode == "auto":
        mode = "exact" if len(verts) <= MAXCUT_EXACT_MAX else "local_search"
    if mode == "exact":
        return _exact_cut(g, verts)
    if mode == "local_search":
        return _local_cut(g, verts)
    raise InputError(f"unknown max-cut mode {mode!r}")


# -- Laplacian spectral radius --------------------------------------------------

@dataclass(frozen=True)
class SpectralResult:
    mu: float
    tolerance: float
    vector: tuple[float, ...]


def laplacian_matrix(g: Graph) -> np.ndarray:
    L = np.zeros((g.n, g.n))
    for u, v in g.edges:
        L[u, v] = L[v, u] = -1.0
    L[np.diag_indices(g.n)] = g.degrees()
    return L


def laplacian_spectral_radius(g: Graph, tol: float = SPECTRAL_TOL,
                              max_iter: int = 100_000) -> SpectralResult:
    """Largest Laplacian eigenvalue with a residual-certified error bound.

    For symmetric L and unit w, some eigenvalue lies within
    ``||L w - mu w||`` of the Rayleigh quotient ``mu``.
    """
    L = laplacian_matrix(g)
    if g.m == 0:
        w = np.zeros(g.n)
        w[0] = 1.0
        return SpectralResult(0.0, 0.0, tuple(w))
    if g.n <= DENSE_EIG_MAX_N:
        vals, vecs = np.linalg.eigh(L)
        w = vecs[:, -1]
    else:
        w = np.asarray(g.degrees(), dtype=float)
        w[0] += 1.0
        w /= np.linalg.norm(w)
        for _ in range(max_iter):
            y = L @ w
            w = y / np.linalg.norm(y)
            rho = float(w @ L @ w)
            if np.linalg.norm(L @ w - rho * w) <= tol:
                break
    mu = float(w @ L @ w)
    residual = float(np.linalg.norm(L @ w - mu * w))
    return SpectralResult(mu, max(tol, residual), tuple(float(x) for x in w))
