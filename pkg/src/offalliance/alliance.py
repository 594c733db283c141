"""Offensive-alliance predicates, boundary, and minimality.

Every predicate is evaluated in margin form: a vertex ``v`` outside ``S`` is
satisfied when ``|N_S(v)| - |N_{V-S}(v)| >= margin`` with margin 1 for the
plain kinds and 2 for the strong kinds. Plain kinds only look at the
boundary of ``S``; global kinds look at every vertex outside ``S``.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, InputError
from .graph import Graph, bits


class AllianceKind(enum.Enum):
    OFFENSIVE = "offensive"
    STRONG_OFFENSIVE = "strong_offensive"
    GLOBAL_OFFENSIVE = "global_offensive"
    GLOBAL_STRONG_OFFENSIVE = "global_strong_offensive"

    @property
    def margin(self) -> int:
        return 2 if self in (AllianceKind.STRONG_OFFENSIVE,
                             AllianceKind.GLOBAL_STRONG_OFFENSIVE) else 1

    @property
    def is_global(self) -> bool:
        return self in (AllianceKind.GLOBAL_OFFENSIVE, AllianceKind.GLOBAL_STRONG_OFFENSIVE)

    @property
    def is_strong(self) -> bool:
        return self.margin == 2

    @classmethod
    def parse(cls, text: str | AllianceKind) -> AllianceKind:
        if isinstance(text, AllianceKind):
            return text
        key = text.strip().lower().replace("-", "_")
        for kind in cls:
            if key in (kind.value, kind.name.lower()):
                return kind
        raise InputError(f"unknown alliance kind {text!r}; "
                         f"choose from {', '.join(k.value for k in cls)}")


@dataclass(frozen=True)
class Violation:
    vertex: int
    inside: int   # |N_S(v)|
    outside: int  # |N_{V-S}(v)|


@dataclass(frozen=True)
class PredicateCertificate:
    kind: AllianceKind
    set: frozenset[int]
    satisfied: bool
    violator: Violation | None = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind.value, "set": sorted(self.set), "satisfied": self.satisfied,
               "violator": None}
        if self.violator is not None:
            v = self.violator
            out["violator"] = {"vertex": v.vertex, "inside": v.inside, "outside": v.outside}
        return out


def _nonempty_mask(g: Graph, s: Iterable[int] | int) -> int:
    sm = g.mask(s)
    if not sm:
        raise InputError("alliances are nonempty vertex sets")
    return sm


def boundary_mask(g: Graph, sm: int) -> int:
    out = 0
    for v in bits(sm):
        out |= g.adj[v]
    return out & ~sm


def boundary(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """The vertices outside ``s`` with at least one neighbor in ``s``."""
    return g.members(boundary_mask(g, _nonempty_mask(g, s)))


def first_violator(g: Graph, sm: int, kind: AllianceKind) -> int:
    """Smallest vertex breaking the predicate for mask ``sm``, or -1."""
    margin = kind.margin
    adj = g.adj
    scope = (g.full_mask & ~sm) if kind.is_global else boundary_mask(g, sm)
    for v in bits(scope):
        inside = (adj[v] & sm).bit_count()
        if 2 * inside - adj[v].bit_count() < margin:
            return v
    return -1


def is_alliance_mask(g: Graph, sm: int, kind: AllianceKind) -> bool:
    return sm != 0 and first_violator(g, sm, kind) < 0


def check_alliance(g: Graph, s: Iterable[int], kind: AllianceKind | str) -> PredicateCertificate:
    kind = AllianceKind.parse(kind)
    sm = _nonempty_mask(g, s)
    v = first_violator(g, sm, kind)
    members = g.members(sm)
    if v < 0:
        return PredicateCertificate(kind, members, True)
    inside = (g.adj[v] & sm).bit_count()
    return PredicateCertificate(kind, members, False,
                                Violation(v, inside, g.adj[v].bit_count() - inside))


def margin_holds(inside: int, outside: int, margin: int) -> bool:
    """|N_S(v)| >= |N_{V-S}(v)| + margin."""
    return inside >= outside + margin


def degree_form_holds(inside: int, degree: int, margin: int) -> bool:
    """2|N_S(v)| >= deg(v) + margin; equivalent to :func:`margin_holds`."""
    return 2 * inside >= degree + margin


def is_k_dominating_mask(g: Graph, sm: int, k: int) -> bool:
    adj = g.adj
    return all((adj[v] & sm).bit_count() >= k for v in bits(g.full_mask & ~sm))


# -- vectorized evaluation over a subset lattice ----------------------------

def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int16)


def alliance_table(g: Graph, kind: AllianceKind, universe: Iterable[int] | None = None) -> np.ndarray:
    """Predicate value for every subset of ``universe`` (all of V by default).

    Index ``i`` of the result encodes the subset ``{universe[j] : bit j of i}``.
    Index 0 (the empty set) is always False.
    """
    kind = AllianceKind.parse(kind)
    verts = list(range(g.n)) if universe is None else sorted(set(universe))
    k = len(verts)
    pos = {v: j for j, v in enumerate(verts)}
    idx = np.arange(1 << k, dtype=np.int64)
    ok = np.ones(1 << k, dtype=bool)
    ok[0] = False
    margin = kind.margin
    for v in range(g.n):
        loc = 0
        for u in bits(g.adj[v]):
            if u in pos:
                loc |= 1 << pos[u]
        deg = g.adj[v].bit_count()
        inside = _popcount(idx & loc) if loc else np.zeros(1 << k, dtype=np.int16)
        good = 2 * inside >= deg + margin
        if not kind.is_global:
            good |= inside == 0
        if v in pos:
            good |= (idx >> pos[v] & 1).astype(bool)
        ok &= good
    return ok


def minimal_mask_table(table: np.ndarray, k: int) -> np.ndarray:
    """Entries of ``table`` with no True entry at a proper subset."""
    below = table.copy()
    for i in range(k):
        view = below.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    # below[S] = some subset of S (S included) is True
    strict = np.zeros_like(table)
    idx = np.arange(table.size, dtype=np.int64)
    for i in range(k):
        has = (idx >> i & 1).astype(bool)
        strict[has] |= below[idx[has] ^ (1 << i)]
    return table & ~strict


MAX_MINIMALITY_SIZE = 20


def is_minimal_alliance(g: Graph, s: Iterable[int], kind: AllianceKind | str,
                        max_size: int | None = None) -> bool:
    """Whether no proper nonempty subset of ``s`` is an alliance of ``kind``.

    The property is not hereditary, so every proper subset is examined.
    """
    kind = AllianceKind.parse(kind)
    sm = _nonempty_mask(g, s)
    if first_violator(g, sm, kind) >= 0:
        raise InputError(f"{sorted(bits(sm))} is not a {kind.value} alliance")
    limit = max_size if max_size is not None else int(
        os.environ.get("OFFALLIANCE_MAX_MINIMALITY", MAX_MINIMALITY_SIZE))
    size = sm.bit_count()
    if size > limit:
        raise CapacityError(f"minimality test over 2^{size} subsets exceeds guard 2^{limit}")
    table = alliance_table(g, kind, bits(sm))
    return not table[:-1].any()
