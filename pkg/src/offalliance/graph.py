"""Immutable simple undirected graphs over dense integer vertices.

Adjacency is kept as one Python-int bitmask per vertex, so set intersection
and counting reduce to ``&`` and ``int.bit_count``. Vertex sets cross the
public API as ``frozenset[int]``; solvers work on masks internally.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator

from .errors import DomainError, InputError

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Instances are immutable after construction and safe to share.
    """

    __slots__ = ("_n", "_adj", "_edges", "_full")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"graph order must be a positive integer, got {n!r}")
        adj = [0] * n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._edges = tuple(sorted(seen))
        self._full = (1 << n) - 1

    @classmethod
    def from_adjacency_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        edges = [(u, v) for u, m in enumerate(masks) for v in bits(m) if u < v]
        return cls(len(masks), edges)

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def adj(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks."""
        return self._adj

    @property
    def full_mask(self) -> int:
        return self._full

    def vertices(self) -> range:
        return range(self._n)

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise InputError(f"vertex {v!r} out of range 0..{self._n - 1}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    # -- vertex sets -------------------------------------------------------

    def mask(self, s: Iterable[int] | int) -> int:
        """Bitmask of a vertex collection, validating membership."""
        if isinstance(s, int):
            if s < 0 or s & ~self._full:
                raise InputError(f"mask {s:#x} has bits outside 0..{self._n - 1}")
            return s
        out = 0
        for v in s:
            self._check_vertex(v)
            out |= 1 << v
        return out

    def members(self, mask: int) -> frozenset[int]:
        return frozenset(bits(mask))

    def complement_of(self, s: Iterable[int]) -> frozenset[int]:
        return self.members(self._full & ~self.mask(s))

    def neighbors_in(self, v: int, s: Iterable[int]) -> frozenset[int]:
        """N_S(v): the neighbors of ``v`` that lie in ``s``."""
        self._check_vertex(v)
        return frozenset(bits(self._adj[v] & self.mask(s)))

    def induced_subgraph(self, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Subgraph induced by ``s``, relabelled densely in increasing order.

        Returns the subgraph and the map old label -> new label.
        """
        sm = self.mask(s)
        if not sm:
            raise InputError("induced subgraph of an empty vertex set")
        order = list(bits(sm))
        relabel = {v: i for i, v in enumerate(order)}
        edges = [(relabel[u], relabel[v]) for u, v in self._edges
                 if sm >> u & 1 and sm >> v & 1]
        return Graph(len(order), edges), relabel

    def complement(self) -> Graph:
        return Graph.from_adjacency_masks(
            self._full & ~(a | 1 << v) for v, a in enumerate(self._adj))

    # -- metric ------------------------------------------------------------

    def reach(self, start: int, within: int | None = None) -> int:
        """Mask of vertices reachable from ``start`` inside ``within``."""
        within = self._full if within is None else within
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self._adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def mask_is_connected(self, mask: int) -> bool:
        """Whether the subgraph induced by a nonempty mask is connected."""
        if not mask:
            return False
        start = (mask & -mask).bit_length() - 1
        return self.reach(start, mask) == mask

    def is_connected(self) -> bool:
        return self.reach(0) == self._full

    def distances_from(self, v: int) -> list[int]:
        self._check_vertex(v)
        dist = [-1] * self._n
        dist[v] = 0
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in bits(self._adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def diameter(self) -> int:
        if not self.is_connected():
            raise DomainError("diameter is undefined for a disconnected graph")
        return max(max(self.distances_from(v)) for v in range(self._n))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"
