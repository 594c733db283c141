import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from offalliance import generators as gen
from offalliance.alliance import AllianceKind, check_alliance
from offalliance.constructions import independent_complement_alliance, maxcut_refined_alliance
from offalliance.errors import HypothesisError, ModeError
from offalliance.solvers import min_alliance

GO, GSO = AllianceKind.GLOBAL_OFFENSIVE, AllianceKind.GLOBAL_STRONG_OFFENSIVE


def test_cocktail_party_sizes():
    g = gen.cocktail_party(3)
    assert independent_complement_alliance(g).size == 4
    assert independent_complement_alliance(g, strong=True).size == 4
    for base in ("independent", "dominating", "two_dominating"):
        rep = maxcut_refined_alliance(g, base)
        assert rep.size <= rep.size_bound_claimed
        assert rep.size == 4


def test_cycle_and_star():
    assert maxcut_refined_alliance(gen.cycle(5)).size == 3
    rep = maxcut_refined_alliance(gen.star(6))
    assert rep.set == {0}
    assert rep.size_bound_claimed == 6


def test_hypotheses_are_enforced():
    with pytest.raises(HypothesisError):
        independent_complement_alliance(gen.empty(2))
    with pytest.raises(HypothesisError):
        independent_complement_alliance(gen.complete(1))
    with pytest.raises(HypothesisError, match="minimum degree"):
        independent_complement_alliance(gen.path(4), strong=True)
    with pytest.raises(HypothesisError):
        maxcut_refined_alliance(gen.empty(3))
    with pytest.raises(ModeError):
        maxcut_refined_alliance(gen.cycle(5), "independent", strong=True)
    with pytest.raises(ModeError):
        maxcut_refined_alliance(gen.cycle(5), "clique")


def test_report_serializes():
    d = maxcut_refined_alliance(gen.petersen(), "two_dominating").to_dict()
    assert d["kind"] == GSO.value
    assert d["certificate"]["satisfied"]
    assert sorted(d["base_set"] + d["x"] + d["y"]) == list(range(10))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=9, connected=True))
def test_independent_complement(g):
    alpha = oracles.independence_number(g)
    rep = independent_complement_alliance(g)
    assert rep.size == g.n - alpha == rep.size_bound_claimed
    assert check_alliance(g, rep.set, GO).satisfied
    if g.min_degree >= 2:
        assert check_alliance(g, independent_complement_alliance(g, True).set, GSO).satisfied


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=9, connected=True))
def test_maxcut_refined_structure(g):
    for base, kind, need in (("independent", GO, 1), ("dominating", GO, 1),
                             ("two_dominating", GSO, 2)):
        rep = maxcut_refined_alliance(g, base)
        assert rep.kind is kind
        assert rep.size <= rep.size_bound_claimed
        assert rep.size >= min_alliance(g, kind).value
        assert check_alliance(g, rep.set, kind).satisfied
        if rep.x or len(rep.y) > 1:
            assert len(rep.x) <= len(rep.y)
            for v in rep.y:
                nx_ = len(g.neighbors_in(v, rep.x))
                ny_ = len(g.neighbors_in(v, rep.y))
                assert nx_ >= ny_
                assert len(g.neighbors_in(v, rep.base_set)) >= need


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=2, max_n=9, connected=True))
def test_forced_local_search_still_certifies(g):
    for base in ("independent", "two_dominating"):
        rep = maxcut_refined_alliance(g, base, cut_mode="local_search")
        assert rep.cut_mode in (None, "local_search")
        assert rep.size <= rep.size_bound_claimed
