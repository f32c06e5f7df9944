"""Exact exponential-time triangle packing, validity checks and a greedy baseline."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph_core import AdjacencyGraph, CliqueArrangement, ValidationReport

DEFAULT_GUARD = 14


class OracleGuardError(ValueError):
    pass


@dataclass
class OracleResult:
    count: int
    witness: list[tuple[int, int, int]]
    explored: int


def all_triangles(graph: AdjacencyGraph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(graph.n):
        for v in sorted(w for w in graph.neighbors[u] if w > u):
            for w in sorted(graph.neighbors[u] & graph.neighbors[v]):
                if w > v:
                    out.append((u, v, w))
    return out


def brute_force_max_packing(graph: AdjacencyGraph, guard: int = DEFAULT_GUARD) -> OracleResult:
    """Branch and bound over the lowest-indexed vertex still lying on an available triangle.

    Each node either drops that vertex from consideration or commits to one of
    its triangles. A branch is cut when ``count + remaining // 3`` cannot beat
    the incumbent, where ``remaining`` counts vertices still on some triangle.
    """
    if graph.n > guard:
        raise OracleGuardError(f"oracle limited to n <= {guard}, got n = {graph.n}")
    triangles = all_triangles(graph)
    by_vertex: list[list[tuple[int, int, int]]] = [[] for _ in range(graph.n)]
    for tri in triangles:
        for v in tri:
            by_vertex[v].append(tri)

    best: list = []
    explored = 0

    def search(alive: frozenset, chosen: list):
        nonlocal best, explored
        explored += 1
        usable = [v for v in sorted(alive)
                  if any(alive.issuperset(tri) for tri in by_vertex[v])]
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + len(usable) // 3 <= len(best):
            return
        if not usable:
            return
        v = usable[0]
        for tri in by_vertex[v]:
            if alive.issuperset(tri):
                chosen.append(tri)
                search(alive.difference(tri), chosen)
                chosen.pop()
        search(alive - {v}, chosen)

    search(frozenset(range(graph.n)), [])
    return OracleResult(len(best), sorted(best), explored)


def verify_packing(graph: AdjacencyGraph, packing) -> ValidationReport:
    report = ValidationReport()
    seen: dict[int, tuple] = {}
    for tri in packing:
        tri = tuple(tri)
        if len(tri) != 3 or len(set(tri)) != 3:
            report.add("not-a-triple", tri)
            continue
        if any(not 0 <= v < graph.n for v in tri):
            report.add("unknown-vertex", tri)
            continue
        for u, v in combinations(tri, 2):
            if not graph.adjacent(u, v):
                report.add("non-adjacent", (u, v))
        for v in tri:
            if v in seen:
                report.add("shared-vertex", v)
            else:
                seen[v] = tri
    return report


def uncovered_per_clique(arrangement: CliqueArrangement, packing) -> list[int]:
    covered = {v for tri in packing for v in tri}
    return [len(c.members - covered) for c in arrangement.cliques]


def is_maximal(arrangement: CliqueArrangement, packing) -> bool:
    """True when no clique keeps three uncovered vertices."""
    return all(k <= 2 for k in uncovered_per_clique(arrangement, packing))


def greedy_maximal_packing(graph: AdjacencyGraph, arrangement: CliqueArrangement) -> list[tuple[int, int, int]]:
    covered: set[int] = set()
    packing = []
    for clique in arrangement.cliques:
        free = sorted(clique.members - covered)
        while len(free) >= 3:
            tri = tuple(free[:3])
            packing.append(tri)
            covered.update(tri)
            free = free[3:]
    return packing
