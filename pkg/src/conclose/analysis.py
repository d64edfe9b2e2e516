"""Structural checks on the closure system of an implicational base.

Every predicate here is evaluated exhaustively over the closed-set
family (or over subsets of a given set), so everything is desk scale
and gated by the exhaustive limit. Each failed check carries a concrete
witness: the sets or elements violating the definition, plus a rendered
explanation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .closure import (
    _chainer,
    caratheodory_number,
    covers,
    enumerate_closed_sets,
    meet_irreducibles,
    minimal_generators,
)
from .core import (
    EXHAUSTIVE_LIMIT,
    INDEPENDENCE_BOUND,
    ElemSet,
    GroundSet,
    ImplicationalBase,
    iter_bits,
)
from .errors import HypothesesNotMet, NotStandard, SetTooLarge


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one structural check. Falsy iff the property fails."""

    ok: bool
    witness: tuple = ()
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _fmt(s: ElemSet) -> str:
    return "{" + s.to_text() + "}"


def check_standard(base: ImplicationalBase) -> CheckResult:
    """Standard means: the empty set is closed, and removing an element
    from its own closure leaves a closed set."""
    ch = _chainer(base)
    g = base.ground
    bottom = ch.close(0)
    if bottom != 0:
        return CheckResult(
            False,
            (ElemSet(g, bottom),),
            f"closure of the empty set is {_fmt(ElemSet(g, bottom))}, not empty",
        )
    for x in range(g.n):
        bit = 1 << x
        reduced = ch.close(bit) & ~bit
        if ch.close(reduced) != reduced:
            return CheckResult(
                False,
                (x, ElemSet(g, reduced)),
                f"closure of {g.labels[x]} minus itself, {_fmt(ElemSet(g, reduced))}, is not closed",
            )
    return CheckResult(True)


def check_atomistic(base: ImplicationalBase) -> CheckResult:
    """Atomistic means every singleton is closed."""
    ch = _chainer(base)
    g = base.ground
    for x in range(g.n):
        bit = 1 << x
        cl = ch.close(bit)
        if cl != bit:
            return CheckResult(
                False,
                (x, ElemSet(g, cl)),
                f"closure of {g.labels[x]} is {_fmt(ElemSet(g, cl))}, not the singleton",
            )
    return CheckResult(True)


def check_biatomic(base: ImplicationalBase, limit: int = EXHAUSTIVE_LIMIT) -> CheckResult:
    """Every atom below a join of two closed sets lies below the join of
    an atom from each.

    Atoms are the closed sets covering the closure of the empty set, so
    the check also makes sense for non-standard and non-atomistic
    inputs, where atoms need not be singletons. Atoms already inside
    one of the two closed sets witness themselves.
    """
    family = enumerate_closed_sets(base, limit)
    ch = _chainer(base)
    g = base.ground
    bottom = ch.close(0)
    atom_masks = [a.mask for a in covers(base, ElemSet(g, bottom))]
    k = len(atom_masks)
    pair_close = [[ch.close(atom_masks[i] | atom_masks[j]) for j in range(k)] for i in range(k)]
    union_close: dict[int, int] = {}
    fam_masks = [s.mask for s in family]
    for f1 in fam_masks:
        for f2 in fam_masks:
            u = f1 | f2
            j12 = union_close.get(u)
            if j12 is None:
                j12 = ch.close(u)
                union_close[u] = j12
            in1 = [i for i in range(k) if atom_masks[i] & ~f1 == 0]
            in2 = [i for i in range(k) if atom_masks[i] & ~f2 == 0]
            for a in range(k):
                am = atom_masks[a]
                if am & ~j12:
                    continue
                if am & ~f1 == 0 or am & ~f2 == 0:
                    continue
                if not any(am & ~pair_close[i][j] == 0 for i in in1 for j in in2):
                    return CheckResult(
                        False,
                        (ElemSet(g, f1), ElemSet(g, f2), ElemSet(g, am)),
                        "atom {} is below the join of {} and {} but below no atom-pair join".format(
                            _fmt(ElemSet(g, am)), _fmt(ElemSet(g, f1)), _fmt(ElemSet(g, f2))
                        ),
                    )
    return CheckResult(True)


def check_distributive(base: ImplicationalBase, limit: int = EXHAUSTIVE_LIMIT) -> CheckResult:
    """The closed sets form a distributive lattice iff they are closed under union."""
    family = enumerate_closed_sets(base, limit)
    fam_masks = [s.mask for s in family]
    g = base.ground
    for i, f1 in enumerate(fam_masks):
        for f2 in fam_masks[i + 1:]:
            if not family.contains_mask(f1 | f2):
                return CheckResult(
                    False,
                    (ElemSet(g, f1), ElemSet(g, f2)),
                    f"union of closed sets {_fmt(ElemSet(g, f1))} and {_fmt(ElemSet(g, f2))} is not closed",
                )
    return CheckResult(True)


def check_modular(base: ImplicationalBase, limit: int = EXHAUSTIVE_LIMIT) -> CheckResult:
    """Modular law over all closed triples with the first below the second."""
    family = enumerate_closed_sets(base, limit)
    fam_masks = [s.mask for s in family]
    ch = _chainer(base)
    g = base.ground
    memo: dict[int, int] = {}

    def cl(m: int) -> int:
        r = memo.get(m)
        if r is None:
            r = ch.close(m)
            memo[m] = r
        return r

    for f1 in fam_masks:
        for f2 in fam_masks:
            if f1 & ~f2:
                continue
            for f3 in fam_masks:
                if cl(f1 | (f2 & f3)) != cl(f1 | f3) & f2:
                    return CheckResult(
                        False,
                        (ElemSet(g, f1), ElemSet(g, f2), ElemSet(g, f3)),
                        "modular law fails for {} <= {} with {}".format(
                            _fmt(ElemSet(g, f1)), _fmt(ElemSet(g, f2)), _fmt(ElemSet(g, f3))
                        ),
                    )
    return CheckResult(True)


def check_independent(
    base: ImplicationalBase, subset: ElemSet, bound: int = INDEPENDENCE_BOUND
) -> CheckResult:
    """Independence of a set: closure commutes with intersection on all
    pairs of its subsets."""
    if len(subset) > bound:
        raise SetTooLarge(f"independence check over {len(subset)} elements exceeds bound {bound}")
    ch = _chainer(base)
    g = base.ground
    m = subset.mask
    subs = []
    s = m
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & m
    cl = {s: ch.close(s) for s in subs}
    for i, y1 in enumerate(subs):
        for y2 in subs[i:]:
            if cl[y1 & y2] != cl[y1] & cl[y2]:
                return CheckResult(
                    False,
                    (ElemSet(g, y1), ElemSet(g, y2)),
                    "closure of the intersection of {} and {} differs from the intersection of closures".format(
                        _fmt(ElemSet(g, y1)), _fmt(ElemSet(g, y2))
                    ),
                )
    return CheckResult(True)


def check_chain_condition(base: ImplicationalBase, subset: ElemSet) -> CheckResult:
    """Chain form of independence: each prefix closure meets the next
    element's closure in the empty set.

    In modular systems this single chain, taken in index order, is
    equivalent to full subset-pair independence.
    """
    ch = _chainer(base)
    g = base.ground
    elems = list(iter_bits(subset.mask))
    prefix = 0
    for i in range(len(elems) - 1):
        prefix |= 1 << elems[i]
        nxt = 1 << elems[i + 1]
        meet = ch.close(prefix) & ch.close(nxt)
        if meet:
            return CheckResult(
                False,
                (ElemSet(g, prefix), elems[i + 1], ElemSet(g, meet)),
                "prefix {} meets the closure of {} in {}".format(
                    _fmt(ElemSet(g, prefix)), g.labels[elems[i + 1]], _fmt(ElemSet(g, meet))
                ),
            )
    return CheckResult(True)


def check_mingen_independence(
    base: ImplicationalBase,
    bound: int = INDEPENDENCE_BOUND,
    max_size: int | None = None,
) -> CheckResult:
    """Every minimal generator of every element is an independent set."""
    for x in range(base.ground.n):
        for gen in minimal_generators(base, x, max_size).generators:
            res = check_independent(base, gen, bound)
            if not res.ok:
                return CheckResult(
                    False,
                    (x, gen) + res.witness,
                    f"minimal generator {_fmt(gen)} of {base.ground.labels[x]} is not independent: "
                    + res.detail,
                )
    return CheckResult(True)


# ---------------------------------------------------------------------------
# Arrow relations and the dependency relation on elements


@dataclass(frozen=True)
class ArrowRelations:
    """Down and up arrows between elements and meet-irreducible sets.

    ``meet_irr`` lists (M, M*) pairs, M* the unique upper cover.
    ``down`` holds (element, M-index) pairs where the element is outside
    M but inside M*; ``up`` holds (M-index, element) pairs where the
    element is outside M and its closure minus itself is inside M.
    """

    ground: GroundSet
    meet_irr: tuple[tuple[ElemSet, ElemSet], ...]
    down: frozenset[tuple[int, int]]
    up: frozenset[tuple[int, int]]


def arrow_relations(base: ImplicationalBase, limit: int = EXHAUSTIVE_LIMIT) -> ArrowRelations:
    """Compute both arrow relations. Requires a standard system, since
    the up arrow reads the closure of a singleton minus the element."""
    std = check_standard(base)
    if not std.ok:
        raise NotStandard(std.detail)
    mi = meet_irreducibles(base, limit)
    ch = _chainer(base)
    g = base.ground
    x_star = [ch.close(1 << x) & ~(1 << x) for x in range(g.n)]
    down = set()
    up = set()
    for idx, (m, m_star) in enumerate(mi):
        mm = m.mask
        sm = m_star.mask
        for x in range(g.n):
            bit = 1 << x
            if mm & bit:
                continue
            if sm & bit:
                down.add((x, idx))
            if x_star[x] & ~mm == 0:
                up.add((idx, x))
    return ArrowRelations(g, tuple(mi), frozenset(down), frozenset(up))


@dataclass(frozen=True)
class DRelation:
    """Element dependency arcs: x relates to y when some meet-irreducible
    set has a down arrow from x and an up arrow to y.

    Arcs connect distinct elements only. Positions where the same element
    carries both arrows on one meet-irreducible are not dependencies; they
    are recorded in self_loops for inspection.
    """

    ground: GroundSet
    arcs: frozenset[tuple[int, int]]
    self_loops: tuple[int, ...]


def d_relation(base: ImplicationalBase, limit: int = EXHAUSTIVE_LIMIT) -> DRelation:
    ar = arrow_relations(base, limit)
    by_m_down: dict[int, list[int]] = {}
    for x, idx in ar.down:
        by_m_down.setdefault(idx, []).append(x)
    by_m_up: dict[int, list[int]] = {}
    for idx, y in ar.up:
        by_m_up.setdefault(idx, []).append(y)
    arcs = set()
    loops = set()
    for idx, xs in by_m_down.items():
        for x in xs:
            for y in by_m_up.get(idx, ()):
                if x == y:
                    loops.add(x)
                else:
                    arcs.add((x, y))
    return DRelation(base.ground, frozenset(arcs), tuple(sorted(loops)))


def _find_cycle(rel: DRelation) -> tuple[int, ...] | None:
    succ: dict[int, list[int]] = {}
    for x, y in sorted(rel.arcs):
        succ.setdefault(x, []).append(y)
    n = rel.ground.n
    color = [0] * n
    for root in range(n):
        if color[root]:
            continue
        color[root] = 1
        stack = [(root, iter(succ.get(root, ())))]
        path = [root]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if color[nxt] == 1:
                    at = path.index(nxt)
                    return tuple(path[at:])
                if color[nxt] == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(succ.get(nxt, ()))))
                    path.append(nxt)
                    break
            else:
                color[node] = 2
                stack.pop()
                path.pop()
    return None


def has_d_cycle(
    base: ImplicationalBase, limit: int = EXHAUSTIVE_LIMIT
) -> tuple[bool, tuple[int, ...] | None]:
    """Whether the dependency relation has a directed cycle.

    Only arcs between distinct elements form cycles; self-composed
    arrow positions are reported on the relation but do not count.
    Returns the cycle as a tuple of element indices (x1, ..., xk)
    with each related to the next and the last back to the first.
    """
    cycle = _find_cycle(d_relation(base, limit))
    return cycle is not None, cycle


def verify_log_bound(
    base: ImplicationalBase,
    limit: int = EXHAUSTIVE_LIMIT,
    bound: int = INDEPENDENCE_BOUND,
) -> bool:
    """Check that the largest minimal generator fits the logarithmic
    bound in the ground-set size.

    Only meaningful for atomistic, biatomic systems whose minimal
    generators are all independent; raises HypothesesNotMet listing the
    failed hypotheses otherwise.
    """
    failed = []
    if not check_atomistic(base).ok:
        failed.append("atomistic")
    if not check_biatomic(base, limit).ok:
        failed.append("biatomic")
    if not check_mingen_independence(base, bound).ok:
        failed.append("mingen_independence")
    if failed:
        raise HypothesesNotMet(failed)
    n = base.ground.n
    return caratheodory_number(base) <= n.bit_length()


# ---------------------------------------------------------------------------
# Aggregate report


@dataclass(frozen=True)
class AnalysisReport:
    """One-stop structural summary of a closure system.

    Ternary fields are None when not applicable: lower_bounded needs a
    standard system, log_bound_holds needs the atomistic, biatomic and
    generator-independence hypotheses.
    """

    n_elements: int
    standard: bool
    atomistic: bool
    biatomic: bool | None
    distributive: bool
    modular: bool
    lower_bounded: bool | None
    caratheodory: int
    log_bound_holds: bool | None
    mingen_all_independent: bool
    d_self_loops: tuple[str, ...]
    witnesses: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n_elements": self.n_elements,
            "standard": self.standard,
            "atomistic": self.atomistic,
            "biatomic": self.biatomic,
            "distributive": self.distributive,
            "modular": self.modular,
            "lower_bounded": self.lower_bounded,
            "caratheodory": self.caratheodory,
            "log_bound_holds": self.log_bound_holds,
            "mingen_all_independent": self.mingen_all_independent,
            "d_self_loops": list(self.d_self_loops),
            "witnesses": dict(self.witnesses),
        }

    def render_text(self) -> str:
        def tern(v) -> str:
            if v is None:
                return "n/a"
            return "yes" if v else "no"

        rows = [
            ("elements", str(self.n_elements)),
            ("standard", tern(self.standard)),
            ("atomistic", tern(self.atomistic)),
            ("biatomic", tern(self.biatomic)),
            ("distributive", tern(self.distributive)),
            ("modular", tern(self.modular)),
            ("lower bounded", tern(self.lower_bounded)),
            ("caratheodory number", str(self.caratheodory)),
            ("log bound holds", tern(self.log_bound_holds)),
            ("min generators independent", tern(self.mingen_all_independent)),
            ("d-relation self loops", " ".join(self.d_self_loops) or "none"),
        ]
        width = max(len(name) for name, _ in rows)
        lines = [f"{name.ljust(width)} : {value}" for name, value in rows]
        for name in sorted(self.witnesses):
            lines.append(f"witness[{name}] : {self.witnesses[name]}")
        return "\n".join(lines)


def analyze(
    base: ImplicationalBase,
    limit: int = EXHAUSTIVE_LIMIT,
    independence_bound: int = INDEPENDENCE_BOUND,
) -> AnalysisReport:
    """Run every structural check and collect the outcomes."""
    witnesses: dict[str, str] = {}

    def note(name: str, res: CheckResult) -> bool:
        if not res.ok:
            witnesses[name] = res.detail
        return res.ok

    standard = note("standard", check_standard(base))
    atomistic = note("atomistic", check_atomistic(base))
    biatomic = note("biatomic", check_biatomic(base, limit))
    distributive = note("distributive", check_distributive(base, limit))
    modular = note("modular", check_modular(base, limit))
    mingen_ok = note("mingen_independence", check_mingen_independence(base, independence_bound))
    caratheodory = caratheodory_number(base)

    lower_bounded: bool | None = None
    loops: tuple[str, ...] = ()
    if standard:
        rel = d_relation(base, limit)
        cycle = _find_cycle(rel)
        lower_bounded = cycle is None
        if cycle:
            labels = base.ground.labels
            witnesses["d_cycle"] = " -> ".join(labels[i] for i in cycle + (cycle[0],))
        loops = tuple(base.ground.labels[x] for x in rel.self_loops)
    else:
        witnesses.setdefault("lower_bounded", "not standard, arrow relations undefined")

    log_bound: bool | None = None
    if atomistic and biatomic and mingen_ok:
        log_bound = caratheodory <= base.ground.n.bit_length()

    return AnalysisReport(
        n_elements=base.ground.n,
        standard=standard,
        atomistic=atomistic,
        biatomic=biatomic,
        distributive=distributive,
        modular=modular,
        lower_bounded=lower_bounded,
        caratheodory=caratheodory,
        log_bound_holds=log_bound,
        mingen_all_independent=mingen_ok,
        d_self_loops=loops,
        witnesses=witnesses,
    )
