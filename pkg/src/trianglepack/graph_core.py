"""Interval instances, overlap graphs and consecutive clique arrangements."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations


@dataclass(frozen=True)
class Interval:
    vertex: int
    name: str
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"interval {self.name!r}: lo {self.lo} > hi {self.hi}")

    def intersects(self, other: "Interval") -> bool:
        # closed semantics: touching endpoints overlap
        return self.lo <= other.hi and other.lo <= self.hi


@dataclass(frozen=True)
class IntervalInstance:
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        for i, iv in enumerate(self.intervals):
            if iv.vertex != i:
                raise ValueError(f"vertex ids must be dense: position {i} holds id {iv.vertex}")

    @property
    def n(self) -> int:
        return len(self.intervals)

    @property
    def names(self) -> list[str]:
        return [iv.name for iv in self.intervals]

    @classmethod
    def from_triples(cls, triples) -> "IntervalInstance":
        """Build an instance from ``(name, lo, hi)`` triples; ids follow input order."""
        ivs = []
        for i, (name, lo, hi) in enumerate(triples):
            ivs.append(Interval(i, str(name), Fraction(lo), Fraction(hi)))
        return cls(tuple(ivs))

    def relabeled(self, perm) -> "IntervalInstance":
        """Instance whose vertex ``perm[i]`` carries the interval of old vertex ``i``."""
        out = [None] * self.n
        for i, iv in enumerate(self.intervals):
            out[perm[i]] = (iv.name, iv.lo, iv.hi)
        return IntervalInstance.from_triples(out)

    def reflected(self) -> "IntervalInstance":
        return IntervalInstance.from_triples((iv.name, -iv.hi, -iv.lo) for iv in self.intervals)


@dataclass(frozen=True)
class AdjacencyGraph:
    n: int
    neighbors: tuple[frozenset, ...]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def edges(self) -> set[tuple[int, int]]:
        return {(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v}

    @classmethod
    def from_edges(cls, n: int, edges) -> "AdjacencyGraph":
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))


@dataclass(frozen=True)
class MaximalClique:
    members: frozenset
    index: int  # 1-based position in the arrangement

    def __len__(self):
        return len(self.members)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class CliqueArrangement:
    cliques: tuple[MaximalClique, ...]

    @property
    def t(self) -> int:
        return len(self.cliques)

    @classmethod
    def from_sets(cls, sets) -> "CliqueArrangement":
        return cls(tuple(MaximalClique(frozenset(s), i + 1) for i, s in enumerate(sets)))

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cliques]

    def work_term(self) -> int:
        """Sum of |C_i|^2 |C_i+1|^2 over consecutive pairs, plus |C_t|^2."""
        sizes = self.sizes()
        if not sizes:
            return 0
        pairs = sum(a * a * b * b for a, b in zip(sizes, sizes[1:]))
        return pairs + sizes[-1] ** 2


def build_overlap_graph(instance: IntervalInstance) -> AdjacencyGraph:
    # sort by lo, then scan forward while the next interval starts before hi
    order = sorted(range(instance.n), key=lambda i: instance.intervals[i].lo)
    ivs = instance.intervals
    edges = []
    for a, i in enumerate(order):
        hi = ivs[i].hi
        for j in order[a + 1:]:
            if ivs[j].lo > hi:
                break
            edges.append((i, j))
    return AdjacencyGraph.from_edges(instance.n, edges)


def sweep_maximal_cliques(instance: IntervalInstance) -> CliqueArrangement:
    """Left-to-right sweep emitting the active set at each peak.

    At equal coordinates insertions are processed before removals. A candidate
    is emitted right before the first removal that follows an insertion.
    """
    if instance.n == 0:
        raise ValueError("cannot arrange the cliques of an empty instance")
    events = []
    for iv in instance.intervals:
        events.append((iv.lo, 0, iv.vertex))
        events.append((iv.hi, 1, iv.vertex))
    events.sort()

    active: set[int] = set()
    candidates: list[frozenset] = []
    inserted_since_peak = False
    for _, kind, v in events:
        if kind == 0:
            active.add(v)
            inserted_since_peak = True
        else:
            if inserted_since_peak:
                candidates.append(frozenset(active))
                inserted_since_peak = False
            active.discard(v)

    # Peaks of an interval model are already maximal and distinct; the
    # subset filter only guards against degenerate input orderings.
    kept = []
    for i, c in enumerate(candidates):
        if c in candidates[:i]:
            continue
        if any(c < d for d in candidates):
            continue
        kept.append(c)
    return CliqueArrangement.from_sets(kept)


@dataclass
class ValidationReport:
    violations: list[tuple[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, witness) -> None:
        self.violations.append((kind, witness))

    def kinds(self) -> set[str]:
        return {k for k, _ in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(f"{kind}: {witness}" for kind, witness in self.violations)


def validate_arrangement(graph: AdjacencyGraph, arrangement: CliqueArrangement) -> ValidationReport:
    report = ValidationReport()
    cliques = [c.members for c in arrangement.cliques]
    n = graph.n

    if n >= 1 and not 1 <= len(cliques) <= n:
        report.add("clique-count", (len(cliques), n))

    for pos, c in enumerate(arrangement.cliques, start=1):
        if c.index != pos:
            report.add("index", (pos, c.index))
        bad = [v for v in c.members if not 0 <= v < n]
        if bad:
            report.add("unknown-vertex", (pos, sorted(bad)))
            continue
        for u, v in combinations(sorted(c.members), 2):
            if not graph.adjacent(u, v):
                report.add("not-a-clique", (pos, (u, v)))
                break

    for i, c in enumerate(cliques):
        for j, d in enumerate(cliques):
            if i != j and c <= d and (c < d or i > j):
                report.add("non-maximal", (i + 1, j + 1))
                break
        else:
            # a clique may still be extendable by a vertex outside every listed clique
            common = set(range(n))
            for v in c:
                if 0 <= v < n:
                    common &= graph.neighbors[v]
            common -= c
            if c and common:
                report.add("non-maximal", (i + 1, min(common)))

    positions: dict[int, list[int]] = {}
    for i, c in enumerate(cliques, start=1):
        for v in c:
            positions.setdefault(v, []).append(i)
    for v in range(n):
        idx = positions.get(v)
        if not idx:
            report.add("uncovered-vertex", v)
        elif idx[-1] - idx[0] + 1 != len(idx):
            report.add("not-consecutive", v)

    for u, v in sorted(graph.edges()):
        if not any(u in c and v in c for c in cliques):
            report.add("uncovered-edge", (u, v))
    return report
