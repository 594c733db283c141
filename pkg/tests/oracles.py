"""Naive reference implementations, independent of the package's bitset code.

Everything here works on plain Python sets built from ``g.edges`` and walks
every subset without pruning.
"""

from itertools import combinations

import networkx as nx


def neighborhoods(g):
    nbrs = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def all_subsets(n, nonempty=True):
    for size in range(1 if nonempty else 0, n + 1):
        for combo in combinations(range(n), size):
            yield set(combo)


def is_alliance(nbrs, n, s, margin, global_):
    outside = set(range(n)) - s
    for v in outside:
        inside = len(nbrs[v] & s)
        out = len(nbrs[v] & outside)
        if not global_ and inside == 0:
            continue  # not on the boundary
        if inside < out + margin:
            return False
    return True


def alliance_number(g, margin, global_, connected=False):
    return len(alliance_optimum(g, margin, global_, connected))


def alliance_optimum(g, margin, global_, connected=False):
    """Lexicographically first minimum alliance (sizes ascend, then lex order)."""
    nbrs = neighborhoods(g)
    h = to_nx(g) if connected else None
    best = None
    for s in all_subsets(g.n):
        if not is_alliance(nbrs, g.n, s, margin, global_):
            continue
        if connected and not nx.is_connected(h.subgraph(s)):
            continue
        if best is None or len(s) < len(best):
            best = s
    return frozenset(best)


def independence_number(g):
    nbrs = neighborhoods(g)
    return max(len(s) for s in all_subsets(g.n, nonempty=False)
               if all(not (nbrs[v] & s) for v in s))


def k_domination_number(g, k):
    nbrs = neighborhoods(g)
    return min(len(s) for s in all_subsets(g.n)
               if all(len(nbrs[v] & s) >= k for v in set(range(g.n)) - s))


def connected_domination_number(g):
    nbrs = neighborhoods(g)
    h = to_nx(g)
    return min(len(s) for s in all_subsets(g.n)
               if all(nbrs[v] & s for v in set(range(g.n)) - s)
               and nx.is_connected(h.subgraph(s)))


def max_cut(g, verts):
    nbrs = neighborhoods(g)
    verts = list(verts)
    best = 0
    for size in range(len(verts) + 1):
        for x in combinations(verts, size):
            x = set(x)
            best = max(best, sum(len(nbrs[v] & (set(verts) - x)) for v in x))
    return best


def minimal_global_alliances(g, margin):
    nbrs = neighborhoods(g)
    alliances = [frozenset(s) for s in all_subsets(g.n)
                 if is_alliance(nbrs, g.n, s, margin, True)]
    aset = set(alliances)
    out = []
    for s in alliances:
        proper = (frozenset(t) for size in range(1, len(s)) for t in combinations(sorted(s), size))
        if not any(t in aset for t in proper):
            out.append(s)
    return out
