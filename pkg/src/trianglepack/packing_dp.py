"""Dynamic program for maximum triangle packing over a clique arrangement.

For each clique C_i the table maps every boundary state S (a subset of C_i of
size at most two, stored as a sorted tuple) to the largest number of
vertex-disjoint triangles in the prefix graph G_i that cover all of C_i except
exactly S, or to ``INFEASIBLE`` when no such packing exists.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .graph_core import (
    AdjacencyGraph,
    CliqueArrangement,
    MaximalClique,
    validate_arrangement,
)

INFEASIBLE = None

Triangle = tuple[int, int, int]
State = tuple[int, ...]


class InvalidArrangement(ValueError):
    def __init__(self, report):
        super().__init__(f"invalid clique arrangement:\n{report}")
        self.report = report


@dataclass(frozen=True)
class DPEntry:
    value: Optional[int]
    prev: Optional[State] = None
    triangles: tuple[Triangle, ...] = ()

    @property
    def feasible(self) -> bool:
        return self.value is not INFEASIBLE


_INFEASIBLE_ENTRY = DPEntry(INFEASIBLE)


@dataclass
class DPTable:
    index: int
    entries: dict[State, DPEntry]

    def best(self) -> Optional[State]:
        """Feasible state with the largest value; ties go to the smallest state."""
        best = None
        for s in sorted(self.entries, key=_state_key):
            e = self.entries[s]
            if e.feasible and (best is None or e.value > self.entries[best].value):
                best = s
        return best

    def best_value(self) -> Optional[int]:
        s = self.best()
        return None if s is None else self.entries[s].value


@dataclass
class SolveResult:
    count: int
    packing: list[Triangle]
    tables: list[DPTable]
    final_state: Optional[State]
    elapsed_s: float
    flags: list[str] = field(default_factory=list)

    @property
    def table_sizes(self) -> list[int]:
        return [len(t.entries) for t in self.tables]


def _state_key(s: State):
    # lexicographic over (size, members): the empty state first
    return (len(s), s)


def _group_triples(vertices) -> tuple[Triangle, ...]:
    vs = sorted(vertices)
    return tuple(tuple(vs[j:j + 3]) for j in range(0, len(vs) - len(vs) % 3, 3))


def enumerate_states(clique: MaximalClique) -> list[State]:
    members = clique.sorted()
    states: list[State] = [()]
    states.extend((v,) for v in members)
    states.extend(combinations(members, 2))
    return states


def base_case(c1: MaximalClique) -> DPTable:
    m = len(c1)
    k = m % 3
    entries = {}
    for s in enumerate_states(c1):
        if len(s) == k:
            rest = c1.members.difference(s)
            entries[s] = DPEntry(m // 3, None, _group_triples(rest))
        else:
            entries[s] = _INFEASIBLE_ENTRY
    return DPTable(c1.index, entries)


def admissible_predecessors(s: State, ci: MaximalClique, cnext: MaximalClique) -> list[State]:
    """States S' over C_i with (S & C_i) a subset of S'."""
    # S is a subset of C_i+1, so S & C_i is a subset of S' & C_i+1 iff it is a subset of S'
    required = set(s) & ci.members
    return [sp for sp in enumerate_states(ci) if required.issubset(sp)]


def kappa(ci: MaximalClique, cnext: MaximalClique, s: State, sprime: State) -> Optional[int]:
    """Number of triangles formed inside C_i+1 at this step, or None if |R| is not a multiple of 3."""
    r = _leftover(ci, cnext, s, sprime)
    if len(r) % 3:
        return None
    return len(r) // 3


def _leftover(ci, cnext, s, sprime) -> set[int]:
    s = set(s)
    s2 = (set(sprime) & cnext.members) - s
    return (cnext.members - (ci.members | s)) | s2


def transition(prev: DPTable, ci: MaximalClique, cnext: MaximalClique) -> DPTable:
    prev_states = sorted(prev.entries, key=_state_key)
    feasible_prev = [(sp, prev.entries[sp].value) for sp in prev_states if prev.entries[sp].feasible]
    fresh = cnext.members - ci.members
    entries = {}
    for s in enumerate_states(cnext):
        sset = set(s)
        required = sset & ci.members
        base = fresh - sset
        best_val = None
        best_sp = None
        best_r = None
        for sp, val in feasible_prev:
            if not required.issubset(sp):
                continue
            r = base | ((set(sp) & cnext.members) - sset)
            if len(r) % 3:
                continue
            cand = val + len(r) // 3
            if best_val is None or cand > best_val:
                best_val, best_sp, best_r = cand, sp, r
        if best_val is None:
            entries[s] = _INFEASIBLE_ENTRY
        else:
            entries[s] = DPEntry(best_val, best_sp, _group_triples(best_r))
    return DPTable(cnext.index, entries)


def reconstruct(tables: list[DPTable], final_state: State) -> list[Triangle]:
    if not tables:
        raise ValueError("no tables to reconstruct from")
    entry = tables[-1].entries.get(final_state)
    if entry is None or not entry.feasible:
        raise ValueError(f"final state {final_state} is infeasible")
    packing: list[Triangle] = []
    state = final_state
    for table in reversed(tables):
        entry = table.entries[state]
        packing.extend(entry.triangles)
        state = entry.prev
    return sorted(packing)


def run_tables(arrangement: CliqueArrangement) -> list[DPTable]:
    cliques = arrangement.cliques
    tables = [base_case(cliques[0])]
    for ci, cnext in zip(cliques, cliques[1:]):
        tables.append(transition(tables[-1], ci, cnext))
    return tables


def solve(arrangement: CliqueArrangement, graph: AdjacencyGraph | None = None,
          check: bool = True) -> SolveResult:
    """Maximum vertex-disjoint triangle packing of the graph behind ``arrangement``.

    With ``check`` set, the arrangement is validated against ``graph`` (or the
    graph induced by its own cliques when none is given).
    """
    if arrangement.t == 0:
        raise InvalidArrangement("empty arrangement")
    if check:
        if graph is None:
            graph = graph_of(arrangement)
        report = validate_arrangement(graph, arrangement)
        if not report.ok:
            raise InvalidArrangement(report)

    start = time.perf_counter()
    tables = run_tables(arrangement)
    final = tables[-1].best()
    flags = []
    if final is None:
        flags.append("all-final-states-infeasible")
        count, packing = 0, []
    else:
        count = tables[-1].entries[final].value
        packing = reconstruct(tables, final)
        if len(packing) != count:
            flags.append("reconstruction-size-mismatch")
    elapsed = time.perf_counter() - start
    return SolveResult(count, packing, tables, final, elapsed, flags)


def graph_of(arrangement: CliqueArrangement) -> AdjacencyGraph:
    n = max((max(c.members) for c in arrangement.cliques if c.members), default=-1) + 1
    edges = set()
    for c in arrangement.cliques:
        edges.update(combinations(sorted(c.members), 2))
    return AdjacencyGraph.from_edges(n, edges)
