import random

import pytest

from conclose import (
    EmptyGraph,
    ImplicationalBase,
    NoDecomposition,
    NotASuperkey,
    OutputLimitExceeded,
    augment_with_inconsistency,
    brute_force_keys,
    caratheodory_number,
    close,
    enumerate_keys,
    gen_exponential,
    gen_random,
    key_decomposition,
    minimal_generators,
    minimize_superkey,
    parse_instance,
)
from oracles import as_label_sets, naive_keys

DEMO_KEYS = {
    frozenset({"2", "4"}),
    frozenset({"3", "4"}),
    frozenset({"2", "5"}),
    frozenset({"1", "3", "5"}),
}


# ---------------------------------------------------------------------------
# augmentation


def test_augment_adds_one_rule_per_edge(demo_base, demo_graph):
    aug = augment_with_inconsistency(demo_base, demo_graph)
    assert len(aug) == 7
    extra = aug.implications[4:]
    g = demo_base.ground
    # edge rules follow the graph's normalized edge order
    assert [imp.premise.labels() for imp in extra] == [("2", "4"), ("2", "5"), ("3", "4")]
    assert all(imp.conclusion == g.full() for imp in extra)


def test_augment_requires_edges(demo_base, demo_graph):
    from conclose import ConsistencyGraph

    with pytest.raises(EmptyGraph):
        augment_with_inconsistency(demo_base, ConsistencyGraph(demo_base.ground, []))


def test_augment_of_empty_base():
    base, graph = parse_instance("elements: a b\nedge: a b\n")
    aug = augment_with_inconsistency(base, graph)
    assert len(aug) == 1
    assert aug.implications[0].to_text() == "a b -> a b"


# ---------------------------------------------------------------------------
# enumeration


def test_demo_keys(demo_base, demo_graph):
    aug = augment_with_inconsistency(demo_base, demo_graph)
    keys = enumerate_keys(aug)
    assert as_label_sets(keys) == DEMO_KEYS
    assert [k.to_text() for k in keys] == ["2 4", "3 4", "2 5", "1 3 5"]
    assert keys.verify_antichain()
    assert as_label_sets(brute_force_keys(aug)) == DEMO_KEYS


def test_keys_of_single_escalating_rule():
    # cl({b}) = {b} here, so {a} is the only key
    base = parse_instance("elements: a b\nimp: a -> a b\n")[0]
    assert as_label_sets(enumerate_keys(base)) == {frozenset({"a"})}
    assert naive_keys(base) == {frozenset({"a"})}


def test_keys_are_minimal_superkeys(demo_base, demo_graph):
    from conclose import ElemSet

    aug = augment_with_inconsistency(demo_base, demo_graph)
    full = demo_base.ground.full()
    for k in enumerate_keys(aug):
        assert close(aug, k) == full
        s = (k.mask - 1) & k.mask    # every proper submask falls short
        while True:
            assert close(aug, ElemSet(k.ground, s)) != full
            if s == 0:
                break
            s = (s - 1) & k.mask


def test_keys_match_brute_force_on_randoms():
    rng = random.Random(29)
    for seed in range(40):
        n = rng.randint(2, 7)
        base, graph = gen_random(
            n=n,
            n_imps=rng.randint(0, 8),
            max_premise=rng.randint(1, min(3, n)),
            n_edges=rng.randint(1, n * (n - 1) // 2),
            seed=seed,
        )
        aug = augment_with_inconsistency(base, graph)
        keys = enumerate_keys(aug)
        assert as_label_sets(keys) == as_label_sets(brute_force_keys(aug))
        assert as_label_sets(keys) == naive_keys(aug)
        assert keys.verify_antichain()
        # every key splits into two generators, so it cannot out-size two of them
        cara = caratheodory_number(base)
        for k in keys:
            assert len(k) <= 2 * cara


def test_exponential_family_key_counts():
    for n in range(1, 5):
        base, graph = gen_exponential(n)
        aug = augment_with_inconsistency(base, graph)
        keys = enumerate_keys(aug)
        assert len(keys) == 2 ** n + 1
        assert len(brute_force_keys(aug)) == 2 ** n + 1


def test_exponential_one_branch_keys_exact():
    base, graph = gen_exponential(1)
    aug = augment_with_inconsistency(base, graph)
    assert as_label_sets(enumerate_keys(aug)) == {
        frozenset({"x1"}),
        frozenset({"y1"}),
        frozenset({"u", "v"}),
    }


def test_key_cap_reports_partial():
    base, graph = gen_exponential(4)
    aug = augment_with_inconsistency(base, graph)
    with pytest.raises(OutputLimitExceeded) as err:
        enumerate_keys(aug, cap=5)
    assert err.value.phase == "keys"
    assert len(err.value.partial) >= 5


def test_serialize_has_count_header(demo_base, demo_graph):
    aug = augment_with_inconsistency(demo_base, demo_graph)
    lines = enumerate_keys(aug).serialize().splitlines()
    assert lines[0] == "keys: 4"
    assert lines[1:] == ["2 4", "3 4", "2 5", "1 3 5"]


# ---------------------------------------------------------------------------
# minimization


def test_minimize_full_set(demo_base, demo_graph):
    aug = augment_with_inconsistency(demo_base, demo_graph)
    got = minimize_superkey(aug, demo_base.ground.full())
    assert got.to_text() == "2 4"


def test_minimize_fixpoint_on_keys(demo_base, demo_graph):
    aug = augment_with_inconsistency(demo_base, demo_graph)
    for k in enumerate_keys(aug):
        assert minimize_superkey(aug, k) == k


def test_minimize_scans_from_the_top():
    base = parse_instance("elements: a b c\nimp: a b -> a b c\n")[0]
    assert minimize_superkey(base, base.ground.full()).to_text() == "a b"


def test_minimize_rejects_non_superkey(demo_base):
    with pytest.raises(NotASuperkey):
        minimize_superkey(demo_base, demo_base.ground.set_of("1", "2"))


# ---------------------------------------------------------------------------
# decomposition along a conflict edge


def test_demo_decompositions(demo_base, demo_graph):
    g = demo_base.ground
    edge, gen_u, gen_v = key_decomposition(demo_base, demo_graph, g.set_of("1", "3", "5"))
    assert edge == (g.index("2"), g.index("5"))
    assert gen_u.to_text() == "1 3"
    assert gen_v.to_text() == "5"

    edge, gen_u, gen_v = key_decomposition(demo_base, demo_graph, g.set_of("2", "4"))
    assert edge == (g.index("2"), g.index("4"))
    assert (gen_u.to_text(), gen_v.to_text()) == ("2", "4")


def test_two_branch_key_decomposes_with_shared_generators():
    base, graph = gen_exponential(2)
    g = base.ground
    key = g.set_of("x1", "x2")
    edge, gen_u, gen_v = key_decomposition(base, graph, key)
    assert edge == (g.index("u"), g.index("v"))
    assert gen_u == key and gen_v == key


def test_decomposition_of_non_key_fails(demo_base, demo_graph):
    with pytest.raises(NoDecomposition):
        key_decomposition(demo_base, demo_graph, demo_base.ground.set_of("1"))


def test_decomposition_pieces_are_generators(demo_base, demo_graph):
    aug = augment_with_inconsistency(demo_base, demo_graph)
    g = demo_base.ground
    for k in enumerate_keys(aug):
        (u, v), gen_u, gen_v = key_decomposition(demo_base, demo_graph, k)
        assert (u, v) in demo_graph.edges
        assert gen_u | gen_v == k
        for elem, gen in ((u, gen_u), (v, gen_v)):
            assert gen in minimal_generators(demo_base, elem, max_size=len(k)).generators
