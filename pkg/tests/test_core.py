import random

import pytest

from conclose import (
    ConsistencyGraph,
    ElemSet,
    GroundSet,
    Implication,
    ImplicationalBase,
    MismatchedGroundSets,
    ParseError,
    format_instance,
    format_sets,
    parse_instance,
    validate_instance,
)
from conftest import DEMO_TEXT


# ---------------------------------------------------------------------------
# GroundSet


def test_ground_set_basics():
    g = GroundSet(["a", "b", "c"])
    assert g.n == 3
    assert len(g) == 3
    assert g.index("b") == 1
    assert "c" in g and "z" not in g
    assert g.labels == ("a", "b", "c")


def test_ground_set_rejects_bad_labels():
    with pytest.raises(ValueError):
        GroundSet(["a", "a"])
    with pytest.raises(ValueError):
        GroundSet(["a", ""])
    with pytest.raises(ValueError):
        GroundSet(["a", "b c"])


def test_ground_set_size_cap():
    from conclose.errors import GroundSetTooLarge

    GroundSet([f"e{i}" for i in range(128)])
    with pytest.raises(GroundSetTooLarge):
        GroundSet([f"e{i}" for i in range(129)])


def test_ground_set_constructors():
    g = GroundSet(["a", "b", "c"])
    assert g.empty().mask == 0
    assert g.full().mask == 0b111
    assert g.set_of("a", "c").labels() == ("a", "c")
    assert g.from_indices([2, 0]) == g.set_of("a", "c")


# ---------------------------------------------------------------------------
# ElemSet


def test_elemset_labels_and_text():
    g = GroundSet(["x", "y", "z"])
    s = g.set_of("z", "x")
    assert s.labels() == ("x", "z")
    assert s.to_text() == "x z"
    assert s.indices() == (0, 2)
    assert list(s) == [0, 2]
    assert 0 in s and 1 not in s
    assert len(s) == 2


def test_elemset_boolean_laws():
    # De Morgan, associativity, idempotence, complement involution
    g = GroundSet([f"e{i}" for i in range(9)])
    rng = random.Random(20260819)
    full = (1 << 9) - 1
    for _ in range(300):
        a = ElemSet(g, rng.randrange(full + 1))
        b = ElemSet(g, rng.randrange(full + 1))
        c = ElemSet(g, rng.randrange(full + 1))
        assert (a | b).complement() == a.complement() & b.complement()
        assert (a & b).complement() == a.complement() | b.complement()
        assert (a | b) | c == a | (b | c)
        assert (a & b) & c == a & (b & c)
        assert a | a == a and a & a == a
        assert a.complement().complement() == a
        assert a - b == a & b.complement()
        assert a ^ b == (a | b) - (a & b)
        assert (a & b) <= a <= (a | b)


def test_elemset_ordering_is_subset_not_total():
    g = GroundSet(["a", "b"])
    a = g.set_of("a")
    b = g.set_of("b")
    assert not a <= b and not b <= a
    assert a < (a | b) and (a | b) > a
    assert a <= a and not a < a


def test_elemset_add_remove():
    g = GroundSet(["a", "b", "c"])
    s = g.empty().add(1).add(2)
    assert s == g.set_of("b", "c")
    assert s.remove(1) == g.set_of("c")
    assert s.add(1) == s


def test_elemset_mixed_grounds_rejected():
    g1 = GroundSet(["a", "b"])
    g2 = GroundSet(["a", "c"])
    with pytest.raises(MismatchedGroundSets):
        g1.full() | g2.full()
    assert g1.full() != g2.full()


# ---------------------------------------------------------------------------
# Implication / ImplicationalBase


def test_implication_requires_conclusion():
    g = GroundSet(["a", "b"])
    with pytest.raises(ValueError):
        Implication(g.set_of("a"), g.empty())


def test_implication_text():
    g = GroundSet(["a", "b"])
    imp = Implication(g.set_of("a"), g.set_of("b"))
    assert imp.to_text() == "a -> b"


def test_base_drops_exact_duplicates_keeps_order():
    g = GroundSet(["a", "b", "c"])
    i1 = Implication(g.set_of("a"), g.set_of("b"))
    i2 = Implication(g.set_of("b"), g.set_of("c"))
    base = ImplicationalBase(g, [i1, i2, i1, i2, i1])
    assert list(base) == [i1, i2]
    assert base.duplicates_removed == 3
    assert len(base) == 2


def test_base_equality_and_hash():
    g = GroundSet(["a", "b"])
    i1 = Implication(g.set_of("a"), g.set_of("b"))
    assert ImplicationalBase(g, [i1]) == ImplicationalBase(g, [i1, i1])
    assert hash(ImplicationalBase(g, [i1])) == hash(ImplicationalBase(g, [i1]))
    assert ImplicationalBase(g, [i1]) != ImplicationalBase(g, [])


# ---------------------------------------------------------------------------
# ConsistencyGraph


def test_graph_normalizes_pairs():
    g = GroundSet(["a", "b", "c"])
    graph = ConsistencyGraph(g, [(2, 0), (0, 2), (1, 2)])
    assert graph.edges == ((0, 2), (1, 2))
    assert len(graph) == 2
    assert graph.edge_labels() == (("a", "c"), ("b", "c"))


def test_graph_drops_self_loops():
    g = GroundSet(["a", "b"])
    graph = ConsistencyGraph(g, [(0, 0), (0, 1)])
    assert graph.edges == ((0, 1),)
    assert graph.self_loops_dropped == 1


def test_graph_from_labels(demo_graph):
    g = demo_graph.ground
    again = ConsistencyGraph.from_labels(g, [("3", "4"), ("2", "4"), ("2", "5")])
    assert again == demo_graph


# ---------------------------------------------------------------------------
# Parsing and formatting


def test_parse_demo_instance(demo_base, demo_graph):
    assert demo_base.ground.labels == ("1", "2", "3", "4", "5")
    assert len(demo_base) == 4
    assert len(demo_graph) == 3
    assert demo_base.implications[3].to_text() == "4 -> 1"


def test_parse_accepts_comments_and_blanks():
    base, graph = parse_instance(
        "# leading comment\n\nelements: a b\n# another\nimp: a -> b\n"
    )
    assert len(base) == 1 and len(graph) == 0


def test_parse_empty_premise_allowed():
    base, _ = parse_instance("elements: a b\nimp: -> a\n")
    assert base.implications[0].premise.mask == 0
    assert base.implications[0].conclusion.labels() == ("a",)


def test_parse_errors_carry_line_numbers():
    cases = [
        ("imp: a -> b\n", 1),                          # no elements directive
        ("elements: a b\nimp: a -> \n", 2),            # empty conclusion
        ("elements: a b\nimp: a b\n", 2),              # missing arrow
        ("elements: a b\nedge: a\n", 2),               # edge needs two endpoints
        ("elements: a b\nimp: a -> q\n", 2),           # unknown element
        ("elements: a b\nwhat: x\n", 2),               # unknown directive
        ("elements: a a\n", 1),                        # duplicate labels
        ("elements: a\nelements: a\n", 2),             # repeated directive
    ]
    for text, line in cases:
        with pytest.raises(ParseError) as err:
            parse_instance(text)
        assert err.value.line == line, text


def test_parse_respects_ground_cap():
    labels = " ".join(f"e{i}" for i in range(10))
    with pytest.raises(ParseError, match="exceeds the limit"):
        parse_instance(f"elements: {labels}\n", max_ground=5)


def test_format_parse_round_trip(demo_base, demo_graph):
    text = format_instance(demo_base, demo_graph)
    base2, graph2 = parse_instance(text)
    assert base2 == demo_base
    assert graph2 == demo_graph


def test_format_round_trip_empty_premise():
    base, graph = parse_instance("elements: a b\nimp: -> a\nedge: a b\n")
    base2, graph2 = parse_instance(format_instance(base, graph))
    assert base2 == base and graph2 == graph


def test_format_sets(demo_base):
    g = demo_base.ground
    text = format_sets([g.set_of("1", "3"), g.set_of("5")])
    assert text.splitlines() == ["1 3", "5"]


# ---------------------------------------------------------------------------
# validate_instance


def test_validate_demo(demo_base, demo_graph):
    report = validate_instance(demo_base, demo_graph)
    assert report.valid
    assert (report.n_elements, report.n_implications, report.n_edges) == (5, 4, 3)
    assert not report.trivial
    assert report.empty_premises == ()


def test_validate_flags_trivial_instance(demo_base):
    report = validate_instance(
        demo_base, ConsistencyGraph(demo_base.ground, [])
    )
    assert report.trivial


def test_parsed_self_loop_edges_are_dropped_and_counted():
    _, graph = parse_instance("elements: a b\nedge: a a\nedge: a b\n")
    assert graph.edges == ((0, 1),)
    assert graph.self_loops_dropped == 1


def test_validate_flags_empty_premises():
    base, graph = parse_instance("elements: a b\nimp: -> a\n")
    report = validate_instance(base, graph)
    assert report.empty_premises == (0,)


def test_validate_rejects_mismatched_grounds():
    base, _ = parse_instance("elements: a b\nimp: a -> b\n")
    other = GroundSet(["a", "c"])
    with pytest.raises(MismatchedGroundSets):
        validate_instance(base, ConsistencyGraph(other, []))
