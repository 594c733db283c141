"""Named graph families, seeded random ensembles and labeled enumeration.

Vertex numbering per family:

* ``complete(n)``: 0..n-1.
* ``complete_bipartite(a, b)``: side A is 0..a-1, side B is a..a+b-1.
* ``complete_multipartite(p1, p2, ...)``: parts are consecutive blocks.
* ``cocktail_party(k)``: K_2k minus the perfect matching (2i, 2i+1).
* ``star(r)``: center 0, leaves 1..r.
* ``path(n)``, ``cycle(n)``: consecutive vertices adjacent.
* ``hypercube(k)``: vertex ids are the binary codes; edges flip one bit.
* ``petersen()``: outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
* ``prism(k)``: Cartesian product C_k x K_2; triangles for k=3 are 0..2 and
  3..5, matched i -- i+3.
* ``join_complete_with_empty(r, t)``: K_r on 0..r-1 joined to every one of
  the t independent vertices r..r+t-1.
* ``empty(n)``: no edges.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from itertools import combinations

from .errors import GenerationError, InputError
from .graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return Graph(n)


def complete_multipartite(*parts: int) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts),
          "complete multipartite graph needs positive part sizes")
    label, start = [], 0
    for i, p in enumerate(parts):
        label += [i] * p
        start += p
    edges = [(u, v) for u, v in combinations(range(start), 2) if label[u] != label[v]]
    return Graph(start, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def cocktail_party(k: int) -> Graph:
    _need(k >= 1, "cocktail party graph needs k >= 1")
    n = 2 * k
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2)
                     if u // 2 != v // 2])


def star(r: int) -> Graph:
    _need(r >= 1, "star needs r >= 1 leaves")
    return Graph(r + 1, [(0, i) for i in range(1, r + 1)])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def hypercube(k: int) -> Graph:
    _need(k >= 1, "hypercube needs dimension k >= 1")
    n = 1 << k
    return Graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(k) if not v >> b & 1])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def prism(k: int = 3) -> Graph:
    _need(k >= 3, "prism needs k >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def join_complete_with_empty(r: int, t: int) -> Graph:
    _need(r >= 1 and t >= 1, "join needs r >= 1 and t >= 1")
    edges = list(combinations(range(r), 2))
    edges += [(u, r + j) for u in range(r) for j in range(t)]
    return Graph(r + t, edges)


FAMILIES: dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "complete_multipartite": complete_multipartite,
    "cocktail_party": cocktail_party,
    "star": star,
    "path": path,
    "cycle": cycle,
    "hypercube": hypercube,
    "petersen": petersen,
    "prism": prism,
    "join_complete_with_empty": join_complete_with_empty,
    "empty": empty,
}

_ARITY = {
    "complete": (1, 1), "complete_bipartite": (2, 2), "complete_multipartite": (1, None),
    "cocktail_party": (1, 1), "star": (1, 1), "path": (1, 1), "cycle": (1, 1),
    "hypercube": (1, 1), "petersen": (0, 0), "prism": (0, 1),
    "join_complete_with_empty": (2, 2), "empty": (1, 1),
}


def named(family: str, *params: int) -> Graph:
    """Build a named family member, e.g. ``named("cocktail_party", 3)``."""
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    lo, hi = _ARITY[family]
    if len(params) < lo or (hi is not None and len(params) > hi):
        raise InputError(f"{family} takes {lo}..{hi if hi is not None else 'any'} "
                         f"parameters, got {len(params)}")
    if not all(isinstance(p, int) for p in params):
        raise InputError(f"{family} parameters must be integers")
    return FAMILIES[family](*params)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    _need(n >= 1, "G(n, p) needs n >= 1")
    _need(0.0 <= p <= 1.0, f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_gnp(n: int, p: float, seed: int, max_retries: int = 1000) -> Graph:
    """G(n, p) conditioned on connectivity by rejection; reproducible from seed."""
    rng = random.Random(seed)
    for _ in range(max_retries):
        g = random_gnp(n, p, rng.getrandbits(64))
        if g.is_connected():
            return g
    raise GenerationError(f"no connected G({n}, {p}) after {max_retries} draws")


def random_regular(n: int, d: int, seed: int, max_retries: int = 1000) -> Graph:
    """Uniform pairing model, retried until the multigraph is simple."""
    _need(0 <= d < n, f"need 0 <= d < n, got n={n}, d={d}")
    _need(n * d % 2 == 0, f"n*d must be even, got n={n}, d={d}")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(d)]
    for _ in range(max_retries):
        rng.shuffle(points)
        pairs = {(min(u, v), max(u, v)) for u, v in zip(points[::2], points[1::2])}
        if len(pairs) == n * d // 2 and all(u != v for u, v in pairs):
            return Graph(n, pairs)
    raise GenerationError(f"pairing model failed to give a simple {d}-regular "
                          f"graph on {n} vertices after {max_retries} tries")


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2**(n choose 2) labeled graphs on n vertices, in edge-bitmask order."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [e for i, e in enumerate(pairs) if code >> i & 1])


def search_labeled_graphs(n: int, predicate: Callable[[Graph], bool],
                          connected_only: bool = True) -> Iterator[Graph]:
    """Labeled graphs on n vertices satisfying ``predicate``."""
    for g in labeled_graphs(n):
        if connected_only and not g.is_connected():
            continue
        if predicate(g):
            yield g


@dataclass(frozen=True)
class GraphSpec:
    family: str
    params: tuple = field(default_factory=tuple)
    seed: int | None = None

    def build(self) -> Graph:
        if self.family == "gnp":
            n, p = self.params
            return random_gnp(int(n), float(p), self._seed())
        if self.family == "connected_gnp":
            n, p = self.params
            return random_connected_gnp(int(n), float(p), self._seed())
        if self.family == "regular":
            n, d = self.params
            return random_regular(int(n), int(d), self._seed())
        return named(self.family, *self.params)

    def _seed(self) -> int:
        if self.seed is None:
            raise InputError(f"random family {self.family!r} requires a seed")
        return self.seed


def extremal_graphs() -> list[tuple[str, Graph]]:
    """The extremal examples named alongside the alliance bounds."""
    return [
        ("cocktail_party(3)", cocktail_party(3)),
        ("star(6)", star(6)),
        ("star(7)", star(7)),
        ("star(8)", star(8)),
        ("hypercube(3)", hypercube(3)),
        ("complete_bipartite(3,3)", complete_bipartite(3, 3)),
        ("prism(3)", prism(3)),
        ("petersen", petersen()),
        ("join_complete_with_empty(3,8)", join_complete_with_empty(3, 8)),
        ("join_complete_with_empty(3,10)", join_complete_with_empty(3, 10)),
    ]


def random_connected_ensemble(seeds: Iterable[int], n_min: int = 6,
                              n_max: int = 12) -> Iterator[tuple[str, Graph]]:
    """Seeded connected graphs with n in [n_min, n_max].

    Every fifth seed with even n draws a random cubic graph (kept only when
    connected); the rest are connected G(n, p) with p from a fixed menu.
    """
    for seed in seeds:
        rng = random.Random(seed)
        n = rng.randint(n_min, n_max)
        if seed % 5 == 0 and n % 2 == 0 and n >= 4:
            g = random_regular(n, 3, seed)
            if g.is_connected():
                yield f"regular({n},3)#seed={seed}", g
                continue
        p = rng.choice((0.2, 0.3, 0.4, 0.5, 0.7))
        yield f"connected_gnp({n},{p})#seed={seed}", random_connected_gnp(n, p, seed)
