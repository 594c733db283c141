"""Exact alliance numbers by cardinality-ascending subset search.

Candidates of each size are generated in lexicographic order, so the first
hit is the lexicographically smallest optimum. Global searches start at the
best closed-form lower bound and force every vertex whose degree is below
the margin (such a vertex can never be outside a global alliance).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import formulas
from .alliance import (AllianceKind, alliance_table, first_violator,
                       minimal_mask_table)
from .errors import DomainError, ModeError
from .graph import Graph, bits
from .limits import require_enum, require_exact
from .params import laplacian_spectral_radius


@dataclass(frozen=True)
class SolveResult:
    kind: AllianceKind
    connected: bool
    value: int
    witness: frozenset[int]
    nodes_explored: int

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "connected": self.connected,
                "value": self.value, "witness": sorted(self.witness)}


def global_lower_bound(g: Graph, kind: AllianceKind) -> int:
    """Largest applicable closed-form lower bound on gamma_o / gamma_o-hat."""
    strong = kind.is_strong
    n, m = g.n, g.m
    delta, Delta = g.min_degree, g.max_degree
    best = [1, formulas.order_size_lower(n, m, strong),
            formulas.max_degree_lower(n, m, Delta, strong)]
    if g.is_connected():
        lb = formulas.degree_parity_lower(n, delta, Delta, strong)
        if lb is not None:
            best.append(lb)
    if m:
        spec = laplacian_spectral_radius(g)
        lb = formulas.spectral_lower(n, delta, spec.mu + spec.tolerance, strong)
        if lb is not None:
            best.append(lb)
    return max(best)


def _search(g: Graph, kind: AllianceKind, start: int, connected: bool) -> SolveResult:
    adj = g.adj
    full = g.full_mask
    forced = 0
    if kind.is_global:
        for v in range(g.n):
            if adj[v].bit_count() < kind.margin:
                forced |= 1 << v
    # necessary condition: every outside vertex is ceil((delta+margin)/2)-dominated
    kdom = formulas.ceil_div(g.min_degree + kind.margin, 2) if kind.is_global else 0
    free = [v for v in range(g.n) if not forced >> v & 1]
    base = forced.bit_count()
    explored = 0
    for size in range(max(start, base, 1), g.n + 1):
        for combo in combinations(free, size - base):
            sm = forced
            for v in combo:
                sm |= 1 << v
            explored += 1
            if kdom and any((adj[v] & sm).bit_count() < kdom for v in bits(full & ~sm)):
                continue
            if first_violator(g, sm, kind) >= 0:
                continue
            if connected and not g.mask_is_connected(sm):
                continue
            return SolveResult(kind, connected, size, g.members(sm), explored)
    raise AssertionError("V is always an alliance; search cannot fail")


def min_alliance(g: Graph, kind: AllianceKind | str, seed_lower_bound: bool = True) -> SolveResult:
    """a_o, a_o-hat, gamma_o or gamma_o-hat with a lexicographically smallest witness."""
    kind = AllianceKind.parse(kind)
    require_exact(g.n, f"min {kind.value} alliance")
    start = global_lower_bound(g, kind) if (seed_lower_bound and kind.is_global) else 1
    return _search(g, kind, start, connected=False)


def min_connected_alliance(g: Graph, kind: AllianceKind | str,
                           seed_lower_bound: bool = True) -> SolveResult:
    """gamma_co or gamma_co-hat: global alliances inducing a connected subgraph."""
    kind = AllianceKind.parse(kind)
    if not kind.is_global:
        raise ModeError("connected alliance numbers are defined for global kinds only")
    if not g.is_connected():
        raise DomainError("connected alliance number is undefined for a disconnected graph")
    require_exact(g.n, f"min connected {kind.value} alliance")
    start = global_lower_bound(g, kind) if seed_lower_bound else 1
    return _search(g, kind, start, connected=True)


def enumerate_minimal_global_alliances(g: Graph, kind: AllianceKind | str,
                                       require_connected_complement: bool = False,
                                       limit: int | None = None) -> list[frozenset[int]]:
    """All minimal global alliances of ``kind``, ordered by size then lexicographically.

    With ``require_connected_complement`` only sets whose complement is
    nonempty and induces a connected subgraph are kept.
    """
    kind = AllianceKind.parse(kind)
    if not kind.is_global:
        raise ModeError("enumeration is defined for global kinds only")
    require_enum(g.n, f"minimal {kind.value} alliance enumeration")
    table = alliance_table(g, kind)
    minimal = np.flatnonzero(minimal_mask_table(table, g.n))
    full = g.full_mask
    masks = [int(s) for s in minimal]
    if require_connected_complement:
        masks = [s for s in masks if g.mask_is_connected(full & ~s)]
    sets = sorted((g.members(s) for s in masks), key=lambda s: (len(s), sorted(s)))
    return sets if limit is None else sets[:limit]
