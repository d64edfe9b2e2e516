"""Enumeration of maximal consistent closed sets.

The solver runs the two-step pipeline: augment the base with one rule
per conflict edge, enumerate the minimal keys of the augmented base,
then read the answer off as the maximal independent sets of the key
hypergraph. A subset-scan oracle over the closed-set family is provided
for cross-checking at desk scale.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .closure import close, enumerate_closed_sets, is_closed
from .core import (
    EXHAUSTIVE_LIMIT,
    KEY_CAP,
    MIS_CAP,
    ConsistencyGraph,
    ElemSet,
    GroundSet,
    ImplicationalBase,
    format_sets,
)
from .errors import MismatchedGroundSets
from .keys import augment_with_inconsistency, enumerate_keys
from .transversal import Hypergraph, maximal_independent_sets


@dataclass(frozen=True)
class SolveStats:
    """Work counters for one solver run.

    ``key_count`` and ``transversal_steps`` are None when the producing
    code path (for example the brute-force oracle) has no such phase.
    """

    key_count: int | None = None
    transversal_steps: int | None = None
    seconds: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "key_count": self.key_count,
            "transversal_steps": self.transversal_steps,
            "seconds": dict(self.seconds),
        }


@dataclass(frozen=True)
class SolutionSet:
    """The maximal consistent closed sets of an instance, in lectic order."""

    ground: GroundSet
    sets: tuple[ElemSet, ...]
    stats: SolveStats = field(default_factory=SolveStats, compare=False)

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def serialize(self) -> str:
        return format_sets(self.sets)


def _require_shared_ground(base: ImplicationalBase, graph: ConsistencyGraph) -> None:
    if base.ground != graph.ground:
        raise MismatchedGroundSets("base and graph ground sets differ")


def solve(
    base: ImplicationalBase,
    graph: ConsistencyGraph,
    key_cap: int = KEY_CAP,
    mis_cap: int = MIS_CAP,
) -> SolutionSet:
    """All maximal closed sets containing no conflict edge.

    With no edges the full set is the single answer. Either phase may
    raise OutputLimitExceeded; no partial SolutionSet is ever returned.
    """
    _require_shared_ground(base, graph)
    g = base.ground
    if not graph.edges:
        return SolutionSet(
            g,
            (g.full(),),
            SolveStats(key_count=0, transversal_steps=0, seconds={"keys": 0.0, "mis": 0.0}),
        )

    t0 = time.perf_counter()
    augmented = augment_with_inconsistency(base, graph)
    hyper_keys = enumerate_keys(augmented, cap=key_cap)
    t1 = time.perf_counter()

    if any(k.mask == 0 for k in hyper_keys.keys):
        # The empty set is already inconsistent or full: nothing qualifies.
        sets: tuple[ElemSet, ...] = ()
        steps = 0
    else:
        hyper = Hypergraph(g, hyper_keys.keys)
        sets = tuple(maximal_independent_sets(hyper, cap=mis_cap))
        steps = len(hyper.edges)
    t2 = time.perf_counter()

    stats = SolveStats(
        key_count=len(hyper_keys),
        transversal_steps=steps,
        seconds={"keys": t1 - t0, "mis": t2 - t1},
    )
    return SolutionSet(g, sets, stats)


def brute_force_solve(
    base: ImplicationalBase,
    graph: ConsistencyGraph,
    limit: int = EXHAUSTIVE_LIMIT,
) -> SolutionSet:
    """Oracle: filter the closed-set family and keep the maximal survivors.

    Runs in time proportional to the whole family; refuses ground sets
    above ``limit``.
    """
    _require_shared_ground(base, graph)
    g = base.ground
    t0 = time.perf_counter()
    family = enumerate_closed_sets(base, limit)
    edge_masks = graph.edge_masks
    consistent = [
        s.mask for s in family
        if not any(em & ~s.mask == 0 for em in edge_masks)
    ]
    maximal = [
        m for m in consistent
        if not any(o != m and m & ~o == 0 for o in consistent)
    ]
    t1 = time.perf_counter()
    maximal.sort()
    return SolutionSet(
        g,
        tuple(ElemSet(g, m) for m in maximal),
        SolveStats(seconds={"enumerate_and_filter": t1 - t0}),
    )


def is_solution(base: ImplicationalBase, graph: ConsistencyGraph, candidate: ElemSet) -> bool:
    """Membership test: closed, consistent, and maximally so.

    Maximality means every proper extension closes into a set that
    contains a conflict edge.
    """
    _require_shared_ground(base, graph)
    if candidate.ground != base.ground:
        raise MismatchedGroundSets("candidate over a different ground set")
    if not is_closed(base, candidate):
        return False
    edge_masks = graph.edge_masks
    m = candidate.mask
    if any(em & ~m == 0 for em in edge_masks):
        return False
    g = base.ground
    for i in range(g.n):
        bit = 1 << i
        if m & bit:
            continue
        grown = close(base, ElemSet(g, m | bit)).mask
        if not any(em & ~grown == 0 for em in edge_masks):
            return False
    return True
