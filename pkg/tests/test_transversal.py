import random

import pytest

from conclose import (
    ElemSet,
    GroundSet,
    Hypergraph,
    MismatchedGroundSets,
    OutputLimitExceeded,
    is_independent,
    maximal_independent_sets,
    minimal_transversals,
)
from oracles import as_label_sets, naive_mis, naive_transversals


def hg(labels, *edges):
    g = GroundSet(labels)
    return Hypergraph(g, [g.set_of(*e) for e in edges])


def test_edges_become_an_antichain():
    h = hg("abc", "a", "ab", "bc")
    assert as_label_sets(h.edges) == {frozenset("a"), frozenset("bc")}


def test_empty_edge_rejected():
    g = GroundSet(["a"])
    with pytest.raises(ValueError):
        Hypergraph(g, [g.empty()])


def test_foreign_edge_rejected():
    g = GroundSet(["a"])
    other = GroundSet(["b"])
    with pytest.raises(MismatchedGroundSets):
        Hypergraph(g, [other.full()])


def test_is_independent(demo_base, demo_graph):
    g = demo_base.ground
    h = Hypergraph(g, [g.from_indices(e) for e in demo_graph.edges])
    assert is_independent(h, g.set_of("1", "3", "5"))
    assert not is_independent(h, g.set_of("1", "2", "3", "5"))
    assert is_independent(h, g.empty())


def test_minimal_transversals_tiny():
    assert as_label_sets(minimal_transversals(hg("ab", "ab"))) == {
        frozenset("a"),
        frozenset("b"),
    }
    assert as_label_sets(minimal_transversals(hg("ab", "a", "b"))) == {
        frozenset("ab")
    }


def test_demo_keys_transversals_and_mis():
    # the four keys of the worked instance, as a hypergraph
    h = hg(["1", "2", "3", "4", "5"], "135", "34", "24", "25")
    assert as_label_sets(minimal_transversals(h)) == {
        frozenset({"2", "3"}),
        frozenset({"4", "5"}),
        frozenset({"1", "2", "4"}),
    }
    assert as_label_sets(maximal_independent_sets(h)) == {
        frozenset({"1", "4", "5"}),
        frozenset({"1", "2", "3"}),
        frozenset({"3", "5"}),
    }


def test_mis_single_edge_and_triangle():
    assert as_label_sets(maximal_independent_sets(hg("abc", "ab"))) == {
        frozenset({"a", "c"}),
        frozenset({"b", "c"}),
    }
    assert as_label_sets(maximal_independent_sets(hg("abc", "ab", "bc", "ac"))) == {
        frozenset({"a"}),
        frozenset({"b"}),
        frozenset({"c"}),
    }


def test_output_is_lectic():
    h = hg("abcd", "ab", "cd")
    for out in (minimal_transversals(h), maximal_independent_sets(h)):
        masks = [s.mask for s in out]
        assert masks == sorted(masks)


def test_random_hypergraphs_match_oracle():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 7)
        g = GroundSet([f"e{i}" for i in range(n)])
        edges = []
        for _ in range(rng.randint(1, 6)):
            mask = rng.randrange(1, 1 << n)
            edges.append(ElemSet(g, mask))
        h = Hypergraph(g, edges)
        edge_labels = [e.labels() for e in h.edges]

        trans = minimal_transversals(h)
        mis = maximal_independent_sets(h)
        assert as_label_sets(trans) == naive_transversals(g.labels, edge_labels)
        assert as_label_sets(mis) == naive_mis(g.labels, edge_labels)

        # complement duality, antichain, independence, maximality
        assert {t.complement().mask for t in trans} == {m.mask for m in mis}
        for a in mis:
            assert is_independent(h, a)
            for i in range(n):
                if i not in a:
                    assert not is_independent(h, a.add(i))
            for b in mis:
                assert not a < b


def test_transversal_cap_reports_partial():
    h = hg("abcdef", "ab", "cd", "ef")
    with pytest.raises(OutputLimitExceeded) as err:
        minimal_transversals(h, cap=3)
    assert err.value.phase == "transversals"
    assert len(err.value.partial) >= 3


def test_mis_cap_propagates():
    h = hg("abcdef", "ab", "cd", "ef")
    with pytest.raises(OutputLimitExceeded):
        maximal_independent_sets(h, cap=3)
    assert len(maximal_independent_sets(h, cap=8)) == 8
