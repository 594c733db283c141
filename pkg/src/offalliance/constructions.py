"""Upper-bound witness constructions.

Two recipes build global offensive alliances on a connected graph:

``independent_complement``
    The complement of a maximum independent set. Every outside vertex has
    all of its neighbors inside, so the set is global offensive, and global
    strong offensive once the minimum degree is at least 2.

``maxcut_refined``
    Start from a base set B (maximum independent, minimum dominating or
    minimum 2-dominating), split V - B into X, Y along a locally maximal
    edge cut with |X| <= |Y|, and return B + X. A vertex v in Y has at least
    as many neighbors in X as in Y and at least one (two, for the
    2-dominating base) in B, which is exactly the margin needed.

Every output is re-verified with :func:`check_alliance` before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .alliance import AllianceKind, PredicateCertificate, check_alliance
from .errors import HypothesisError, ModeError
from .graph import Graph
from .params import (MAXCUT_EXACT_MAX, domination_number, independence_number,
                     k_domination_number, max_cut_partition)

Base = Literal["independent", "dominating", "two_dominating"]


@dataclass(frozen=True)
class WitnessReport:
    construction: str
    set: frozenset[int]
    kind: AllianceKind
    size_bound_claimed: int
    certificate: PredicateCertificate
    base: str | None = None
    base_set: frozenset[int] = frozenset()
    x: frozenset[int] = frozenset()
    y: frozenset[int] = frozenset()
    cut_mode: str | None = None

    @property
    def size(self) -> int:
        return len(self.set)

    def to_dict(self) -> dict:
        return {
            "construction": self.construction,
            "kind": self.kind.value,
            "set": sorted(self.set),
            "size": self.size,
            "size_bound_claimed": self.size_bound_claimed,
            "base": self.base,
            "base_set": sorted(self.base_set),
            "x": sorted(self.x),
            "y": sorted(self.y),
            "cut_mode": self.cut_mode,
            "certificate": self.certificate.to_dict(),
        }


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise HypothesisError("construction requires a connected graph")


def _certified(g: Graph, s: frozenset[int], kind: AllianceKind) -> PredicateCertificate:
    cert = check_alliance(g, s, kind)
    if not cert.satisfied:
        raise RuntimeError(f"construction produced a non-alliance: {cert}")
    return cert


def independent_complement_alliance(g: Graph, strong: bool = False) -> WitnessReport:
    _require_connected(g)
    if g.n < 2:
        raise HypothesisError("complement of a maximum independent set is empty for n = 1")
    if strong and g.min_degree < 2:
        raise HypothesisError("strong variant needs minimum degree >= 2 "
                              f"(got {g.min_degree})")
    alpha, s = independence_number(g)
    w = g.complement_of(s)
    kind = AllianceKind.GLOBAL_STRONG_OFFENSIVE if strong else AllianceKind.GLOBAL_OFFENSIVE
    return WitnessReport("independent_complement", w, kind, g.n - alpha,
                         _certified(g, w, kind), base="independent", base_set=s)


def maxcut_refined_alliance(g: Graph, base: Base = "independent", strong: bool | None = None,
                            cut_mode: str = "auto") -> WitnessReport:
    _require_connected(g)
    if base not in ("independent", "dominating", "two_dominating"):
        raise ModeError(f"unknown base {base!r}")
    if strong is None:
        strong = base == "two_dominating"
    if strong and base != "two_dominating":
        raise ModeError("the strong construction needs the 2-dominating base")
    kind = AllianceKind.GLOBAL_STRONG_OFFENSIVE if strong else AllianceKind.GLOBAL_OFFENSIVE

    if base == "independent":
        size, b = independence_number(g)
    elif base == "dominating":
        size, b = domination_number(g)
    else:
        size, b = k_domination_number(g, 2)
    claimed = (g.n + size) // 2
    rest = g.complement_of(b)

    if len(rest) == 1 and base == "independent":
        # only a star has a single vertex outside a maximum independent set
        w, x, y, mode = rest, frozenset(), frozenset(), None
    elif len(rest) <= 1:
        w, x, y, mode = b, frozenset(), rest, None
    else:
        cut = max_cut_partition(rest, g, mode=cut_mode)
        mode = cut_mode if cut_mode != "auto" else (
            "exact" if len(rest) <= MAXCUT_EXACT_MAX else "local_search")
        x, y = cut.x, cut.y
        w = b | x
    return WitnessReport("maxcut_refined", frozenset(w), kind, claimed,
                         _certified(g, frozenset(w), kind), base=base, base_set=b,
                         x=x, y=y, cut_mode=mode)
