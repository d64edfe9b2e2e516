"""Ground sets, element sets, implications, and consistency graphs.

Everything downstream works over a fixed GroundSet and treats subsets of
it as immutable bit vectors (ElemSet). Labels exist only at the I/O
boundary; internally every element is a dense index, every set a Python
int used as a bit mask, and every enumeration is emitted in lectic
order, meaning sets compare by their bit pattern read as an integer
with the lowest index in the least significant position.

The plain-text instance format also lives here:

    # comment
    elements: 1 2 3 4 5
    imp: 1 3 -> 2
    imp: 4 -> 1
    edge: 3 4

Element names are arbitrary non-whitespace strings. An instance has
exactly one ``elements:`` line, any number of ``imp:`` and ``edge:``
lines, and ``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    GroundSetTooLarge,
    InvalidParams,
    MismatchedGroundSets,
    ParseError,
)

# Default size limits. Each is a per-call override in the functions that
# consume it; these are only the fallbacks.
MAX_GROUND = 128          # hard cap on ground-set size at construction
EXHAUSTIVE_LIMIT = 20     # refusal point for 2^n closed-set enumerations
KEY_CAP = 10 ** 6         # key enumeration output cap
MIS_CAP = 10 ** 6         # transversal / independent-set output cap
INDEPENDENCE_BOUND = 15   # refusal point for subset-pair independence checks


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GroundSet:
    """An ordered universe of distinctly labeled elements.

    The label order is fixed at construction and defines the index of
    every element, hence the bit layout of every ElemSet over it.
    """

    __slots__ = ("labels", "n", "full_mask", "_index", "_hash")

    def __init__(self, labels: Iterable[str], max_size: int = MAX_GROUND):
        labels = tuple(labels)
        for lab in labels:
            if not isinstance(lab, str) or not lab or lab.split() != [lab]:
                raise ValueError(f"element labels must be non-empty and whitespace-free: {lab!r}")
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be distinct")
        if len(labels) > max_size:
            raise GroundSetTooLarge(f"{len(labels)} elements exceeds the limit of {max_size}")
        self.labels = labels
        self.n = len(labels)
        self.full_mask = (1 << self.n) - 1
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._hash = hash(labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown element {label!r}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"

    # ElemSet constructors. These are the usual entry points; ElemSet
    # itself is mask-level and easy to misuse.
    def empty(self) -> "ElemSet":
        return ElemSet(self, 0)

    def full(self) -> "ElemSet":
        return ElemSet(self, self.full_mask)

    def set_of(self, *labels: str) -> "ElemSet":
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return ElemSet(self, mask)

    def from_indices(self, indices: Iterable[int]) -> "ElemSet":
        mask = 0
        for i in indices:
            if not 0 <= i < self.n:
                raise ValueError(f"element index {i} out of range")
            mask |= 1 << i
        return ElemSet(self, mask)


class ElemSet:
    """An immutable subset of a GroundSet, stored as a bit mask.

    Comparison operators follow set semantics: ``<=`` is subset and
    ``<`` is proper subset. For lectic sorting use the ``mask`` field
    as the sort key.
    """

    __slots__ = ("ground", "mask")

    def __init__(self, ground: GroundSet, mask: int):
        if mask < 0 or mask > ground.full_mask:
            raise ValueError(f"mask {mask:#x} does not fit a {ground.n}-element ground set")
        self.ground = ground
        self.mask = mask

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def labels(self) -> tuple[str, ...]:
        g = self.ground.labels
        return tuple(g[i] for i in iter_bits(self.mask))

    def to_text(self) -> str:
        """Space-separated labels in ground-set order; empty string for the empty set."""
        return " ".join(self.labels())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def _coerce(self, other: "ElemSet") -> int:
        if self.ground != other.ground:
            raise MismatchedGroundSets("operands live over different ground sets")
        return other.mask

    def __or__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.ground, self.mask | self._coerce(other))

    def __and__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.ground, self.mask & self._coerce(other))

    def __sub__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.ground, self.mask & ~self._coerce(other))

    def __xor__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.ground, self.mask ^ self._coerce(other))

    def complement(self) -> "ElemSet":
        return ElemSet(self.ground, self.ground.full_mask ^ self.mask)

    def add(self, index: int) -> "ElemSet":
        return ElemSet(self.ground, self.mask | (1 << index))

    def remove(self, index: int) -> "ElemSet":
        return ElemSet(self.ground, self.mask & ~(1 << index))

    def __le__(self, other: "ElemSet") -> bool:
        m = self._coerce(other)
        return self.mask & ~m == 0

    def __lt__(self, other: "ElemSet") -> bool:
        m = self._coerce(other)
        return self.mask != m and self.mask & ~m == 0

    def __ge__(self, other: "ElemSet") -> bool:
        return other.__le__(self)

    def __gt__(self, other: "ElemSet") -> bool:
        return other.__lt__(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ElemSet)
            and self.mask == other.mask
            and self.ground == other.ground
        )

    def __hash__(self) -> int:
        return hash((self.mask, self.ground._hash))

    def __repr__(self) -> str:
        return "{" + self.to_text() + "}"


@dataclass(frozen=True)
class Implication:
    """A rule ``premise -> conclusion`` between sets over one ground set.

    The conclusion must be non-empty; a rule concluding nothing says
    nothing. Empty premises are legal (they force their conclusion into
    every closure) but make the system non-standard.
    """

    premise: ElemSet
    conclusion: ElemSet

    def __post_init__(self):
        if self.premise.ground != self.conclusion.ground:
            raise MismatchedGroundSets("premise and conclusion over different ground sets")
        if not self.conclusion:
            raise ValueError("implication conclusion must be non-empty")

    def to_text(self) -> str:
        return f"{self.premise.to_text()} -> {self.conclusion.to_text()}"

    def __repr__(self) -> str:
        return f"Implication({self.premise.to_text()} -> {self.conclusion.to_text()})"


class ImplicationalBase:
    """An ordered collection of implications over one ground set.

    Exact duplicate rules are dropped at construction, keeping the first
    occurrence; the number removed is recorded for validation reports.
    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("ground", "implications", "duplicates_removed", "_chainer")

    def __init__(self, ground: GroundSet, implications: Iterable[Implication]):
        seen: set[tuple[int, int]] = set()
        kept: list[Implication] = []
        dropped = 0
        for imp in implications:
            if imp.premise.ground != ground:
                raise MismatchedGroundSets("implication over a different ground set")
            sig = (imp.premise.mask, imp.conclusion.mask)
            if sig in seen:
                dropped += 1
                continue
            seen.add(sig)
            kept.append(imp)
        self.ground = ground
        self.implications = tuple(kept)
        self.duplicates_removed = dropped
        self._chainer = None  # lazily built forward-chaining engine

    def __len__(self) -> int:
        return len(self.implications)

    def __iter__(self) -> Iterator[Implication]:
        return iter(self.implications)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ImplicationalBase)
            and self.ground == other.ground
            and [(i.premise.mask, i.conclusion.mask) for i in self.implications]
            == [(i.premise.mask, i.conclusion.mask) for i in other.implications]
        )

    def __hash__(self) -> int:
        return hash((self.ground, tuple((i.premise.mask, i.conclusion.mask) for i in self.implications)))

    def __repr__(self) -> str:
        return f"ImplicationalBase(n={self.ground.n}, implications={len(self.implications)})"


class ConsistencyGraph:
    """An irreflexive, symmetric conflict relation on the ground set.

    Edges are stored as normalized index pairs (low, high), sorted.
    Self-loop pairs are dropped at construction and counted, mirroring
    duplicate handling in ImplicationalBase.
    """

    __slots__ = ("ground", "edges", "edge_masks", "self_loops_dropped")

    def __init__(self, ground: GroundSet, pairs: Iterable[tuple[int, int]]):
        n = ground.n
        loops = 0
        normalized: set[tuple[int, int]] = set()
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                loops += 1
                continue
            normalized.add((u, v) if u < v else (v, u))
        self.ground = ground
        self.edges = tuple(sorted(normalized))
        self.edge_masks = tuple((1 << u) | (1 << v) for u, v in self.edges)
        self.self_loops_dropped = loops

    @classmethod
    def from_labels(cls, ground: GroundSet, pairs: Iterable[tuple[str, str]]) -> "ConsistencyGraph":
        return cls(ground, [(ground.index(a), ground.index(b)) for a, b in pairs])

    def __len__(self) -> int:
        return len(self.edges)

    def edge_labels(self) -> tuple[tuple[str, str], ...]:
        g = self.ground.labels
        return tuple((g[u], g[v]) for u, v in self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConsistencyGraph)
            and self.ground == other.ground
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.edges))

    def __repr__(self) -> str:
        return f"ConsistencyGraph(n={self.ground.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class ValidationReport:
    """Structural facts about an instance, gathered by validate_instance."""

    valid: bool
    n_elements: int
    n_implications: int
    n_edges: int
    trivial: bool                        # no edges: the full set is the one answer
    empty_premises: tuple[int, ...]      # positions of empty-premise rules
    duplicates_removed: int
    self_loops_dropped: int


def validate_instance(base: ImplicationalBase, graph: ConsistencyGraph) -> ValidationReport:
    """Check that a base and graph form a usable instance.

    Raises MismatchedGroundSets when the two ground sets differ. The
    returned report records degeneracies that are legal but worth
    surfacing: an empty edge set (the problem is trivial), empty
    premises (the system cannot be standard), and anything the
    constructors normalized away.
    """
    if base.ground != graph.ground:
        ours = set(base.ground.labels)
        theirs = set(graph.ground.labels)
        diff = sorted(ours.symmetric_difference(theirs)) or ["same labels, different order"]
        raise MismatchedGroundSets(f"base and graph ground sets differ: {diff}")
    empty = tuple(i for i, imp in enumerate(base.implications) if not imp.premise)
    return ValidationReport(
        valid=True,
        n_elements=base.ground.n,
        n_implications=len(base.implications),
        n_edges=len(graph.edges),
        trivial=len(graph.edges) == 0,
        empty_premises=empty,
        duplicates_removed=base.duplicates_removed,
        self_loops_dropped=graph.self_loops_dropped,
    )


def format_sets(sets: Iterable[ElemSet]) -> str:
    """Serialize a set family, one set per line, labels in ground order."""
    return "\n".join(s.to_text() for s in sets)


# ---------------------------------------------------------------------------
# Text instance format


def _strip(line: str) -> str:
    cut = line.find("#")
    if cut >= 0:
        line = line[:cut]
    return line.strip()


def parse_instance(
    text: str, max_ground: int = MAX_GROUND
) -> tuple[ImplicationalBase, ConsistencyGraph]:
    """Parse the plain-text instance format into a base and a graph.

    Raises ParseError with a 1-based line number on any malformed or
    unknown content. Rules with empty conclusions are rejected here as
    vacuous rather than silently kept.
    """
    lines = text.splitlines()
    ground: GroundSet | None = None
    elements_line = 0

    for no, raw in enumerate(lines, start=1):
        body = _strip(raw)
        if not body:
            continue
        tokens = body.split()
        if tokens[0] == "elements:":
            if ground is not None:
                raise ParseError(no, f"duplicate elements: line (first was line {elements_line})")
            try:
                ground = GroundSet(tokens[1:], max_size=max_ground)
            except (ValueError, GroundSetTooLarge) as exc:
                raise ParseError(no, str(exc)) from None
            elements_line = no
    if ground is None:
        raise ParseError(max(len(lines), 1), "no elements: line found")

    def lookup(no: int, token: str) -> int:
        try:
            return ground.index(token)
        except KeyError:
            raise ParseError(no, f"unknown element {token!r}") from None

    implications: list[Implication] = []
    edges: list[tuple[int, int]] = []
    for no, raw in enumerate(lines, start=1):
        body = _strip(raw)
        if not body:
            continue
        tokens = body.split()
        head, rest = tokens[0], tokens[1:]
        if head == "elements:":
            continue
        if head == "imp:":
            if rest.count("->") != 1:
                raise ParseError(no, "imp: line needs exactly one '->'")
            split = rest.index("->")
            premise = rest[:split]
            conclusion = rest[split + 1:]
            if not conclusion:
                raise ParseError(no, "implication with empty conclusion is vacuous")
            pmask = 0
            for tok in premise:
                pmask |= 1 << lookup(no, tok)
            cmask = 0
            for tok in conclusion:
                cmask |= 1 << lookup(no, tok)
            implications.append(
                Implication(ElemSet(ground, pmask), ElemSet(ground, cmask))
            )
        elif head == "edge:":
            if len(rest) != 2:
                raise ParseError(no, "edge: line needs exactly two elements")
            edges.append((lookup(no, rest[0]), lookup(no, rest[1])))
        else:
            raise ParseError(no, f"unknown directive {head!r}")

    return ImplicationalBase(ground, implications), ConsistencyGraph(ground, edges)


def load_instance(path) -> tuple[ImplicationalBase, ConsistencyGraph]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def format_instance(base: ImplicationalBase, graph: ConsistencyGraph | None = None) -> str:
    """Serialize a base (and optional graph) back into the text format."""
    if graph is not None and graph.ground != base.ground:
        raise MismatchedGroundSets("base and graph ground sets differ")
    out = ["elements: " + " ".join(base.ground.labels)]
    for imp in base.implications:
        tokens = ["imp:", *imp.premise.labels(), "->", *imp.conclusion.labels()]
        out.append(" ".join(tokens))
    if graph is not None:
        for u, v in graph.edge_labels():
            out.append(f"edge: {u} {v}")
    return "\n".join(out) + "\n"
