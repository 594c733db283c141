"""Catalog of alliance-number inequalities, evaluated against exact values.

Catalog ids are a stable naming contract:

* ``U1``..``U13`` upper bounds (``U12a``/``U12b`` split the two plain ones),
* ``L1``..``L8`` lower bounds on the global numbers, ``L9(k=..)`` on gamma_k,
* ``X1``..``X3`` cited parameter inequalities,
* ``C1``..``C5`` statements about minimal and connected alliances.

A record whose hypothesis fails is marked not-applicable (``holds`` and
``tight`` are ``None``). A record whose exact value exceeds a search guard is
marked not-evaluable and never guessed.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import asdict, dataclass, field
from functools import cached_property

from . import formulas as F
from .alliance import AllianceKind
from .errors import CapacityError
from .graph import Graph
from .params import (SpectralResult, connected_domination_number, domination_number,
                     independence_number, k_domination_number, laplacian_spectral_radius)
from .solvers import (SolveResult, enumerate_minimal_global_alliances, min_alliance,
                      min_connected_alliance)

GO = AllianceKind.GLOBAL_OFFENSIVE
GSO = AllianceKind.GLOBAL_STRONG_OFFENSIVE


@dataclass(frozen=True)
class BoundRecord:
    id: str
    description: str
    sense: str  # "upper": exact <= bound; "lower": exact >= bound
    hypothesis_met: bool
    evaluable: bool = True
    bound_value: int | float | None = None
    exact_value: int | float | None = None
    holds: bool | None = None
    tight: bool | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def violated(self) -> bool:
        return self.holds is False


class Profile:
    """Lazily computed exact invariants of one graph, shared across records."""

    def __init__(self, g: Graph):
        self.g = g
        self.n, self.m = g.n, g.m
        self.delta, self.Delta = g.min_degree, g.max_degree
        self._kdom: dict[int, tuple[int, frozenset[int]]] = {}
        self._cache: dict = {}

    @cached_property
    def connected(self) -> bool:
        return self.g.is_connected()

    @cached_property
    def diameter(self) -> int:
        return self.g.diameter()

    @cached_property
    def alpha(self) -> tuple[int, frozenset[int]]:
        return independence_number(self.g)

    def gamma_k(self, k: int) -> tuple[int, frozenset[int]]:
        if k not in self._kdom:
            self._kdom[k] = domination_number(self.g) if k == 1 else k_domination_number(self.g, k)
        return self._kdom[k]

    @cached_property
    def gamma_c(self) -> tuple[int, frozenset[int]]:
        return connected_domination_number(self.g)

    @cached_property
    def spectral(self) -> SpectralResult:
        return laplacian_spectral_radius(self.g)

    @property
    def mu_hi(self) -> float:
        return self.spectral.mu + self.spectral.tolerance

    def _memo(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def alliance(self, kind: AllianceKind) -> SolveResult:
        return self._memo(("min", kind), lambda: min_alliance(self.g, kind))

    def connected_alliance(self, kind: AllianceKind) -> SolveResult:
        return self._memo(("connected", kind), lambda: min_connected_alliance(self.g, kind))

    def minimal_with_connected_complement(self, kind: AllianceKind) -> list[frozenset[int]]:
        return self._memo(("minimal", kind), lambda: enumerate_minimal_global_alliances(
            self.g, kind, require_connected_complement=True))


def _record(rid: str, desc: str, sense: str, hyp: bool,
            bound: Callable[[], int | float], exact: Callable[[], int | float],
            compare: Callable[[int | float, int | float], tuple[bool, bool]] | None = None,
            ) -> BoundRecord:
    if not hyp:
        return BoundRecord(rid, desc, sense, False)
    try:
        b = bound()
    except CapacityError as exc:
        return BoundRecord(rid, desc, sense, True, evaluable=False, detail=str(exc))
    try:
        e = exact()
    except CapacityError as exc:
        return BoundRecord(rid, desc, sense, True, evaluable=False, bound_value=b,
                           detail=str(exc))
    if compare is not None:
        holds, tight = compare(b, e)
    else:
        holds = e <= b if sense == "upper" else e >= b
        tight = e == b
    return BoundRecord(rid, desc, sense, True, True, b, e, holds, tight)


def _real_compare(sense: str):
    def compare(b: float, e: int) -> tuple[bool, bool]:
        holds = e <= b + F.EPS if sense == "upper" else e >= b - F.EPS
        return holds, abs(e - b) <= F.EPS
    return compare


def _connected_complement_records(p: Profile) -> list[BoundRecord]:
    """C1-C3, quantified over minimal global alliances with connected complement."""
    out = []
    specs = [
        ("C1", "D <= n - |S| + 1 for minimal global offensive S with connected complement",
         "upper", GO),
        ("C2", "|S| >= ceil((3n-2)/(Delta+3)) for minimal global offensive S with "
               "connected complement", "lower", GO),
        ("C3", "|S| >= ceil((4n-2)/(Delta+4)) for minimal global strong offensive S with "
               "connected complement", "lower", GSO),
    ]
    for rid, desc, sense, kind in specs:
        hyp = p.connected if rid == "C1" else True
        if not hyp:
            out.append(BoundRecord(rid, desc, sense, False))
            continue
        try:
            sets = p.minimal_with_connected_complement(kind)
        except CapacityError as exc:
            out.append(BoundRecord(rid, desc, sense, True, evaluable=False, detail=str(exc)))
            continue
        if not sets:
            out.append(BoundRecord(rid, desc, sense, True, True, None, None, True, False,
                                   detail="vacuous: no qualifying minimal alliance"))
            continue
        smallest = min(len(s) for s in sets)
        detail = f"{len(sets)} qualifying sets"
        if rid == "C1":
            # tightest instance: largest |S|
            bound = p.n - max(len(s) for s in sets) + 1
            exact = p.diameter
            out.append(BoundRecord(rid, desc, sense, True, True, bound, exact,
                                   exact <= bound, exact == bound, detail))
        else:
            bound = F.minimal_connected_complement_lower(p.n, p.Delta, rid == "C3")
            out.append(BoundRecord(rid, desc, sense, True, True, bound, smallest,
                                   smallest >= bound, smallest == bound, detail))
    return out


def evaluate_all_bounds(g: Graph, profile: Profile | None = None) -> list[BoundRecord]:
    """One record per catalog entry, in catalog order."""
    p = profile if profile is not None else Profile(g)
    n, m, d, D = p.n, p.m, p.delta, p.Delta
    conn2 = p.connected and n >= 2
    cubic = p.connected and d == D == 3
    go = lambda: p.alliance(GO).value  # noqa: E731
    gso = lambda: p.alliance(GSO).value  # noqa: E731
    ao = lambda: p.alliance(AllianceKind.OFFENSIVE).value  # noqa: E731
    aso = lambda: p.alliance(AllianceKind.STRONG_OFFENSIVE).value  # noqa: E731
    alpha = lambda: p.alpha[0]  # noqa: E731
    gamma = lambda: p.gamma_k(1)[0]  # noqa: E731
    gamma2 = lambda: p.gamma_k(2)[0]  # noqa: E731

    recs = [
        _record("U1", "gamma_o <= n - alpha", "upper", conn2, lambda: n - alpha(), go),
        _record("U2", "gamma_o <= floor((n + alpha)/2)", "upper", conn2,
                lambda: (n + alpha()) // 2, go),
        _record("U3", "gamma_o <= floor(2n/3)", "upper", conn2, lambda: 2 * n // 3, go),
        _record("U4", "gamma_o <= floor((gamma + n)/2)", "upper", conn2,
                lambda: (gamma() + n) // 2, go),
        _record("U5", "gamma_o <= floor(n(2mu - delta)/(2mu))", "upper", conn2,
                lambda: F.spectral_upper(n, d, p.mu_hi), go),
        _record("U6", "2 gamma_o - gamma_c <= n, i.e. gamma_o <= floor((n + gamma_c)/2)",
                "upper", conn2, lambda: (n + p.gamma_c[0]) // 2, go),
        _record("U7", "gamma_o <= floor((2n - Delta)/2)", "upper", conn2,
                lambda: (2 * n - D) // 2, go),
        _record("U8", "gamma_o-hat <= floor((n + gamma_2)/2)", "upper", p.connected,
                lambda: (n + gamma2()) // 2, gso),
        _record("U9", "gamma_o-hat <= n - alpha (delta >= 2)", "upper", p.connected and d >= 2,
                lambda: n - alpha(), gso),
        _record("U10", "gamma_o-hat <= floor(5n/6) (delta >= 2)", "upper",
                p.connected and d >= 2, lambda: 5 * n // 6, gso),
        _record("U11", "gamma_o-hat <= floor(3n/4) (cubic)", "upper", cubic,
                lambda: 3 * n // 4, gso),
        _record("U12a", "a_o <= floor(2n/3)", "upper", n >= 2, lambda: 2 * n // 3, ao),
        _record("U12b", "a_o <= floor((gamma + n)/2)", "upper", n >= 2,
                lambda: (gamma() + n) // 2, ao),
        _record("U13", "a_o-hat <= floor(5n/6)", "upper", n >= 3, lambda: 5 * n // 6, aso),
        _record("L1", "gamma_o >= ceil(n(delta+1)/(2Delta+delta+1)) (delta odd), "
                      "ceil(n delta/(2Delta+delta)) otherwise", "lower",
                p.connected and D >= 1,
                lambda: F.degree_parity_lower(n, d, D, strong=False), go),
        _record("L2", "gamma_o-hat >= ceil(n(delta+3)/(2Delta+delta+3)) (delta odd), "
                      "ceil(n(delta+2)/(2Delta+delta+2)) otherwise", "lower", p.connected,
                lambda: F.degree_parity_lower(n, d, D, strong=True), gso),
        _record("L3", "gamma_o >= ceil((3n - sqrt(9n^2 - 8n - 16m))/4)", "lower", True,
                lambda: F.order_size_lower(n, m, strong=False), go),
        _record("L4", "gamma_o-hat >= ceil((3n + 1 - sqrt(9n^2 - 10n - 16m + 1))/4)", "lower",
                True, lambda: F.order_size_lower(n, m, strong=True), gso),
        _record("L5", "gamma_o >= ceil((2m + n)/(3Delta + 1))", "lower", True,
                lambda: F.max_degree_lower(n, m, D, strong=False), go),
        _record("L6", "gamma_o-hat >= ceil(2(m + n)/(3Delta + 2))", "lower", True,
                lambda: F.max_degree_lower(n, m, D, strong=True), gso),
        _record("L7", "gamma_o >= ceil((n/mu) ceil((delta+1)/2))", "lower", m >= 1,
                lambda: F.spectral_lower(n, d, p.mu_hi, strong=False), go),
        _record("L8", "gamma_o-hat >= ceil((n/mu)(ceil(delta/2) + 1))", "lower", m >= 1,
                lambda: F.spectral_lower(n, d, p.mu_hi, strong=True), gso),
    ]
    ks = sorted({1, 2, F.ceil_div(d + 1, 2), F.ceil_div(d + 2, 2)})
    for k in ks:
        recs.append(_record(f"L9(k={k})", f"gamma_{k} >= ceil({k}n/(Delta+{k}))", "lower", True,
                            lambda k=k: F.k_domination_lower(n, D, k),
                            lambda k=k: p.gamma_k(k)[0]))
    recs += [
        _record("X1", "alpha <= n(mu - delta)/mu", "upper", m >= 1,
                lambda: F.independence_spectral_upper(n, d, p.mu_hi), alpha,
                compare=_real_compare("upper")),
        _record("X2", "gamma_2 <= 2n/3 (delta >= 2)", "upper", d >= 2,
                lambda: 2 * n / 3, gamma2,
                compare=lambda b, e: (3 * e <= 2 * n, 3 * e == 2 * n)),
        _record("X3", "gamma_c <= n - Delta", "upper", conn2, lambda: n - D,
                lambda: p.gamma_c[0]),
    ]
    recs += _connected_complement_records(p)
    diam = (lambda: p.diameter)
    recs += [
        _record("C4", "gamma_co >= ceil((2m + n + 2(D-1)^2)/(2n + Delta + 1))", "lower",
                p.connected, lambda: F.connected_lower(n, m, D, diam(), strong=False),
                lambda: p.connected_alliance(GO).value),
        _record("C5", "gamma_co-hat >= ceil(2(m + n + (D-1)^2)/(2n + Delta + 2))", "lower",
                p.connected, lambda: F.connected_lower(n, m, D, diam(), strong=True),
                lambda: p.connected_alliance(GSO).value),
    ]
    return recs


def violations(records: Iterable[BoundRecord]) -> list[BoundRecord]:
    return [r for r in records if r.violated]


def record_map(records: Iterable[BoundRecord]) -> dict[str, BoundRecord]:
    return {r.id: r for r in records}


# -- survey -------------------------------------------------------------------

@dataclass
class SurveyRow:
    id: str
    graphs: int = 0
    holds: int = 0
    violated: int = 0
    tight: int = 0
    not_applicable: int = 0
    not_evaluable: int = 0
    smallest_tight: Graph | None = field(default=None, repr=False)
    smallest_tight_label: str | None = None

    def to_dict(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if k != "smallest_tight"}
        g = self.smallest_tight
        d["smallest_tight_order"] = g.n if g is not None else None
        d["smallest_tight_edges"] = [list(e) for e in g.edges] if g is not None else None
        return d


def _family_id(rid: str) -> str:
    return "L9" if rid.startswith("L9") else rid


def tightness_survey(ensemble: Iterable[Graph | tuple[str, Graph]],
                     bounds: Iterable[str] | None = None) -> list[SurveyRow]:
    """Per-bound tallies of holds / violated / tight / not-applicable.

    ``ensemble`` yields graphs or ``(label, graph)`` pairs; ``bounds`` filters
    by catalog id (``"L9"`` selects every ``L9(k=..)`` record).
    """
    wanted = set(bounds) if bounds is not None else None
    rows: dict[str, SurveyRow] = {}
    for item in ensemble:
        label, g = item if isinstance(item, tuple) else (None, item)
        for r in evaluate_all_bounds(g):
            if wanted is not None and r.id not in wanted and _family_id(r.id) not in wanted:
                continue
            row = rows.setdefault(r.id, SurveyRow(r.id))
            row.graphs += 1
            if not r.hypothesis_met:
                row.not_applicable += 1
            elif not r.evaluable:
                row.not_evaluable += 1
            elif r.holds:
                row.holds += 1
                if r.tight:
                    row.tight += 1
                    best = row.smallest_tight
                    if best is None or (g.n, g.m) < (best.n, best.m):
                        row.smallest_tight = g
                        row.smallest_tight_label = label
            else:
                row.violated += 1
    return list(rows.values())
