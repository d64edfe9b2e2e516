"""Hypergraph transversals and maximal independent sets.

Maximal independent sets are computed through the classic duality: the
complements of the minimal transversals. Transversals are built by
Berge multiplication, folding one edge at a time into the running
antichain of minimal partial transversals.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .core import MIS_CAP, ElemSet, GroundSet, format_sets, iter_bits
from .errors import MismatchedGroundSets, OutputLimitExceeded


class Hypergraph:
    """A finite hypergraph reduced to its antichain of minimal edges.

    Edges that contain another edge are dropped at construction; for
    every independence or transversal question the two hypergraphs are
    equivalent. Empty edges are rejected since nothing can hit them.
    """

    __slots__ = ("ground", "edges")

    def __init__(self, ground: GroundSet, edges: Iterable[ElemSet]):
        masks = set()
        for e in edges:
            if e.ground != ground:
                raise MismatchedGroundSets("edge over a different ground set")
            if e.mask == 0:
                raise ValueError("hypergraph edges must be non-empty")
            masks.add(e.mask)
        minimal: list[int] = []
        for m in sorted(masks, key=lambda m: (m.bit_count(), m)):
            if not any(r & ~m == 0 for r in minimal):
                minimal.append(m)
        minimal.sort()
        self.ground = ground
        self.edges = tuple(ElemSet(ground, m) for m in minimal)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[ElemSet]:
        return iter(self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.ground == other.ground
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.ground, tuple(e.mask for e in self.edges)))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.ground.n}, edges={len(self.edges)})"

    def serialize(self) -> str:
        return format_sets(self.edges)


def is_independent(hyper: Hypergraph, subset: ElemSet) -> bool:
    """True iff ``subset`` contains no edge of the hypergraph."""
    m = subset.mask
    for e in hyper.edges:
        if e.mask & ~m == 0:
            return False
    return True


def minimal_transversals(hyper: Hypergraph, cap: int = MIS_CAP) -> list[ElemSet]:
    """All inclusion-minimal sets meeting every edge, in lectic order.

    Processes edges by increasing bit pattern. After each edge the
    working list is exactly the antichain of minimal transversals of
    the prefix, so intermediate growth is what the final answer plus
    one crossing step requires. Raises OutputLimitExceeded if the
    working list ever exceeds ``cap``.
    """
    trans: list[int] = [0]
    for e in hyper.edges:
        em = e.mask
        kept = [t for t in trans if t & em]
        missing = [t for t in trans if not t & em]
        # Cross every non-hitting transversal with every vertex of the
        # edge, then keep only the minimal results. A candidate is
        # redundant iff it contains a kept transversal or an already
        # accepted smaller candidate.
        cands = sorted(
            {t | (1 << i) for t in missing for i in iter_bits(em)},
            key=lambda m: (m.bit_count(), m),
        )
        accepted: list[int] = []
        for c in cands:
            if any(k & ~c == 0 for k in kept):
                continue
            if any(a & ~c == 0 for a in accepted):
                continue
            accepted.append(c)
            if len(kept) + len(accepted) > cap:
                g = hyper.ground
                partial = [ElemSet(g, m) for m in kept + accepted]
                raise OutputLimitExceeded("transversals", cap, partial)
        trans = kept + accepted
    trans.sort()
    g = hyper.ground
    return [ElemSet(g, m) for m in trans]


def maximal_independent_sets(hyper: Hypergraph, cap: int = MIS_CAP) -> list[ElemSet]:
    """All maximal edge-free subsets, as complements of minimal transversals."""
    full = hyper.ground.full_mask
    g = hyper.ground
    out = [ElemSet(g, full ^ t.mask) for t in minimal_transversals(hyper, cap)]
    out.sort(key=lambda s: s.mask)
    return out
