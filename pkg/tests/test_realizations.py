"""Small graphs realizing minimal-alliance configurations, found by exhaustive search."""

from offalliance import formulas as F
from offalliance import generators as gen
from offalliance.alliance import AllianceKind, check_alliance, is_minimal_alliance
from offalliance.bounds import record_map, evaluate_all_bounds
from offalliance.graph import Graph
from offalliance.solvers import enumerate_minimal_global_alliances, min_alliance

GO, GSO = AllianceKind.GLOBAL_OFFENSIVE, AllianceKind.GLOBAL_STRONG_OFFENSIVE


def _minimal(g, s, kind):
    return check_alliance(g, s, kind).satisfied and is_minimal_alliance(g, s, kind)


def test_diameter_bound_attained_on_five_vertices():
    # minimal global offensive {0,2,4} with adjacent complement {1,3}, D = n - |S| + 1
    s = {0, 2, 4}

    def pred(g):
        return g.has_edge(1, 3) and _minimal(g, s, GO) and g.diameter() == 3

    found = list(gen.search_labeled_graphs(5, pred))
    assert len(found) == 18
    g = Graph(5, [(0, 1), (0, 3), (1, 3), (1, 4), (2, 3)])
    assert g in found
    assert frozenset(s) in enumerate_minimal_global_alliances(g, GO, True)
    assert record_map(evaluate_all_bounds(g))["C1"].tight


def test_quadratic_bounds_attained_on_six_vertices():
    s, t = {1, 4, 5}, {0, 2, 3}

    def pred(g):
        if not (check_alliance(g, s, GO).satisfied and check_alliance(g, t, GSO).satisfied):
            return False
        if (F.order_size_lower(6, g.m, False), F.order_size_lower(6, g.m, True)) != (3, 3):
            return False
        return (is_minimal_alliance(g, s, GO) and is_minimal_alliance(g, t, GSO)
                and min_alliance(g, GO).value == 3 and min_alliance(g, GSO).value == 3)

    found = list(gen.search_labeled_graphs(6, pred))
    assert len(found) == 13
    g = Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4),
                  (2, 4), (2, 5), (3, 4), (3, 5)])
    assert g in found
    r = record_map(evaluate_all_bounds(g))
    assert r["L3"].tight and r["L4"].tight


def test_strong_complement_bound_cannot_be_tight_at_four_of_six():
    # a minimal global strong alliance of size 4 in a 6-vertex graph with a
    # connected complement exists, but it forces Delta >= 4 and then the
    # strong connected-complement bound is at most 3
    s = {2, 3, 4, 5}

    def pred(g):
        return g.has_edge(0, 1) and _minimal(g, s, GSO)

    found = list(gen.search_labeled_graphs(6, pred))
    assert len(found) == 1440
    assert min(g.max_degree for g in found) == 4
    assert max(F.minimal_connected_complement_lower(6, g.max_degree, True) for g in found) == 3
