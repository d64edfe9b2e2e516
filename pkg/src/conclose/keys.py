"""Minimal keys of an implicational base and their decomposition.

A key is an inclusion-minimal set whose closure is the whole ground
set. Enumeration follows the Lucchesi-Osborn saturation scheme from
relational database theory: start from one minimized key and, for every
known key and every rule whose conclusion meets it, minimize the
rewritten superkey obtained by swapping the met part for the premise.
The loop runs FIFO and stops when no rewrite escapes the known keys.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .closure import _chainer, minimal_generators
from .core import (
    EXHAUSTIVE_LIMIT,
    KEY_CAP,
    ConsistencyGraph,
    ElemSet,
    GroundSet,
    ImplicationalBase,
    Implication,
    format_sets,
)
from .errors import (
    EmptyGraph,
    GroundSetTooLarge,
    MismatchedGroundSets,
    NoDecomposition,
    NotASuperkey,
    OutputLimitExceeded,
)


@dataclass(frozen=True)
class KeyHypergraph:
    """The minimal keys of a base, in lectic order.

    Keys of one base are pairwise incomparable, so the list is an
    antichain; verify_antichain() rechecks that in tests.
    """

    ground: GroundSet
    keys: tuple[ElemSet, ...]

    def __iter__(self) -> Iterator[ElemSet]:
        return iter(self.keys)

    def __len__(self) -> int:
        return len(self.keys)

    def verify_antichain(self) -> bool:
        masks = [k.mask for k in self.keys]
        return not any(
            a != b and a & ~b == 0 for a in masks for b in masks
        )

    def serialize(self) -> str:
        header = f"keys: {len(self.keys)}"
        body = format_sets(self.keys)
        return header + ("\n" + body if body else "")


def augment_with_inconsistency(
    base: ImplicationalBase, graph: ConsistencyGraph
) -> ImplicationalBase:
    """Extend the base with one rule per conflict edge forcing everything.

    After augmentation a set closes to the full ground set exactly when
    its original closure is inconsistent or already full, which is what
    turns conflict-respecting enumeration into a pure key problem.
    """
    if base.ground != graph.ground:
        raise MismatchedGroundSets("base and graph ground sets differ")
    if not graph.edges:
        raise EmptyGraph("augmentation needs at least one conflict edge")
    g = base.ground
    full = g.full()
    rules = list(base.implications)
    for mask in graph.edge_masks:
        rules.append(Implication(ElemSet(g, mask), full))
    return ImplicationalBase(g, rules)


def _minimize_mask(ch, full: int, mask: int) -> int:
    # Drop elements in decreasing index order whenever the closure of
    # the remainder is still full. The result is one minimal key.
    for i in reversed(range(full.bit_length())):
        bit = 1 << i
        if mask & bit and ch.close(mask ^ bit) == full:
            mask ^= bit
    return mask


def minimize_superkey(base: ImplicationalBase, superkey: ElemSet) -> ElemSet:
    """Shrink a superkey to a minimal key by greedy element removal.

    Elements are scanned in decreasing index order, so the result is
    deterministic. Raises NotASuperkey when the argument's closure is
    not the full ground set.
    """
    if superkey.ground != base.ground:
        raise MismatchedGroundSets("set and base over different ground sets")
    ch = _chainer(base)
    full = base.ground.full_mask
    if ch.close(superkey.mask) != full:
        raise NotASuperkey(f"{superkey!r} does not generate the full set")
    return ElemSet(base.ground, _minimize_mask(ch, full, superkey.mask))


def enumerate_keys(base: ImplicationalBase, cap: int = KEY_CAP) -> KeyHypergraph:
    """All minimal keys of ``base`` by Lucchesi-Osborn saturation.

    Raises OutputLimitExceeded with the keys found so far when more
    than ``cap`` keys appear.
    """
    g = base.ground
    ch = _chainer(base)
    full = g.full_mask
    rules = [(imp.premise.mask, imp.conclusion.mask) for imp in base.implications]

    first = _minimize_mask(ch, full, full)
    found: list[int] = [first]
    queue: deque[int] = deque(found)
    while queue:
        k = queue.popleft()
        for pmask, cmask in rules:
            if cmask & k == 0:
                continue
            s = pmask | (k & ~cmask)
            if any(g0 & ~s == 0 for g0 in found):
                continue
            new = _minimize_mask(ch, full, s)
            found.append(new)
            queue.append(new)
            if len(found) > cap:
                partial = [ElemSet(g, m) for m in sorted(found)]
                raise OutputLimitExceeded("keys", cap, partial)
    found.sort()
    return KeyHypergraph(g, tuple(ElemSet(g, m) for m in found))


def brute_force_keys(
    base: ImplicationalBase, limit: int = EXHAUSTIVE_LIMIT
) -> KeyHypergraph:
    """Reference key enumeration by scanning all subsets, smallest first.

    Independent of the saturation path; used as an oracle in tests and
    available for cross-checking at desk scale.
    """
    g = base.ground
    n = g.n
    if n > limit:
        raise GroundSetTooLarge(f"{n} elements exceeds the exhaustive limit of {limit}")
    ch = _chainer(base)
    full = g.full_mask
    found: list[int] = []
    for mask in sorted(range(1 << n), key=lambda m: (m.bit_count(), m)):
        if any(k & ~mask == 0 for k in found):
            continue
        if ch.close(mask) == full:
            found.append(mask)
    found.sort()
    return KeyHypergraph(g, tuple(ElemSet(g, m) for m in found))


def key_decomposition(
    base: ImplicationalBase,
    graph: ConsistencyGraph,
    key: ElemSet,
) -> tuple[tuple[int, int], ElemSet, ElemSet]:
    """Split a key of the augmented base along one conflict edge.

    Every key of the augmented system is the union of a minimal
    generator of u and a minimal generator of v for some conflict edge
    (u, v), generators taken under the original base. Edges are tried
    in normalized order and generators lectically; the first witness is
    returned as ``((u, v), gen_u, gen_v)``. Raises NoDecomposition when
    no edge admits one, which for true keys cannot happen.
    """
    if base.ground != graph.ground or key.ground != base.ground:
        raise MismatchedGroundSets("key, base and graph must share a ground set")
    kmask = key.mask
    for u, v in graph.edges:
        gens_u = [
            a for a in minimal_generators(base, u, max_size=len(key)).generators
            if a.mask & ~kmask == 0
        ]
        if not gens_u:
            continue
        gens_v = [
            a for a in minimal_generators(base, v, max_size=len(key)).generators
            if a.mask & ~kmask == 0
        ]
        for a_u in gens_u:
            for a_v in gens_v:
                if a_u.mask | a_v.mask == kmask:
                    return (u, v), a_u, a_v
    raise NoDecomposition(f"{key!r} does not split along any conflict edge")
