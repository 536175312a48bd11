"""Exact budgeted branching solvers and the detection-driven loop that
reaches a provably optimal solution while branching only over the
non-essential part of the budget.

The loop runs the problem's detector for every budget k from 0 to n,
forms triples (residual graph, selected set S_k, leftover budget
k - |S_k|), discards negative leftovers, sorts by leftover, and hands
each residual instance to the branching solver.  The first run that
spends its leftover exactly yields an optimal solution of the original
graph once the selected set is added back.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .detect import DetectionResult, detector_factory
from .graphs import Digraph, Graph, delete_vertices
from .problems import PROBLEMS


@dataclass(frozen=True)
class Solution:
    problem: str
    vertices: frozenset[int]


@dataclass(frozen=True)
class MetaTriple:
    k: int
    selected: frozenset[int]
    budget: int


@dataclass(frozen=True)
class MetaAttempt:
    k: int
    budget: int
    nodes: int
    success: bool


@dataclass(frozen=True)
class MetaResult:
    solution: Solution
    schedule: tuple[MetaTriple, ...]
    attempts: tuple[MetaAttempt, ...]

    @property
    def solver_nodes(self) -> int:
        return sum(a.nodes for a in self.attempts)

    @property
    def max_budget_attempted(self) -> int:
        return max(a.budget for a in self.attempts)


def exact_budgeted_solve(
    problem: str, g: Graph | Digraph, budget: int
) -> tuple[list[int] | None, int]:
    """Minimum deletion set if one of size <= budget exists, else None;
    also returns the branching-tree node count.

    Branches exhaustively on the vertices of a shortest forbidden
    structure; every feasible solution must hit it, so the search is
    complete and by induction returns a true minimum within budget.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    prob = PROBLEMS[problem]
    if isinstance(g, Digraph) != prob.directed:
        kind = "directed" if prob.directed else "undirected"
        raise TypeError(f"{problem} expects a {kind} graph")
    nodes = [0]

    def go(h: Graph | Digraph, b: int) -> list[int] | None:
        nodes[0] += 1
        structure = prob.forbidden_structure(h)
        if structure is None:
            return []
        if b == 0:
            return None
        best: list[int] | None = None
        for w in structure:
            child, remap = delete_vertices(h, [w])
            sub = go(child, b - 1)
            if sub is not None:
                inv = {new: old for old, new in remap.items()}
                cand = [w] + [inv[x] for x in sub]
                if best is None or len(cand) < len(best):
                    best = cand
        return best

    return go(g, budget), nodes[0]


def meta_solve(problem: str, g: Graph | Digraph) -> MetaResult:
    """Optimal deletion set via detection-then-branching."""
    prob = PROBLEMS[problem]
    detector = detector_factory(problem, g) if g.n else None
    schedule = []
    for k in range(g.n + 1):
        if k >= g.n:
            result = DetectionResult(problem, k, frozenset())
        else:
            result = detector(k)
        budget = k - len(result.vertices)
        if budget < 0:
            # The detector may select more than k vertices when k is below
            # the optimum; such triples can never spend their budget exactly.
            continue
        schedule.append(MetaTriple(k, result.vertices, budget))
    schedule.sort(key=lambda t: (t.budget, t.k))

    attempts = []
    for triple in schedule:
        residual, remap = delete_vertices(g, triple.selected)
        sol, nodes = exact_budgeted_solve(problem, residual, triple.budget)
        success = sol is not None and len(sol) == triple.budget
        attempts.append(MetaAttempt(triple.k, triple.budget, nodes, success))
        if success:
            inv = {new: old for old, new in remap.items()}
            vertices = frozenset(triple.selected) | {inv[x] for x in sol}
            final, _ = delete_vertices(g, vertices)
            if not prob.in_class(final):
                raise AssertionError("combined solution fails the recognizer")
            return MetaResult(
                Solution(problem, vertices), tuple(schedule), tuple(attempts)
            )
    raise AssertionError("loop failed to terminate by k = optimum")


def nonessentiality(
    problem: str,
    g: Graph | Digraph,
    c: float | None = None,
    caps: oracle.OracleCaps = oracle.OracleCaps(),
) -> int:
    """opt - |essential set|, both oracle-exact; benchmarking metadata,
    never on the solving path."""
    report = oracle.oracle_report(problem, g, c, caps)
    return report.ell
