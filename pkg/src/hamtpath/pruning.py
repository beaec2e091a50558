"""Useless-edge pruning.

:func:`prune` scans the edges in canonical order and, as soon as one edge
turns out to be useless, removes it and starts the scan over.  The graph is
declared Hamiltonian once a full scan removes nothing, and not Hamiltonian
when no edge is left.  That verdict is only as good as the conjecture that a
nonempty time graph without useless edges is Hamiltonian; the search module
exists to test it.

:func:`prune_single_pass` is the naive variant that never restarts.  Its
answer depends on the edge order and can be wrong.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .lp import FeasibilityResult, LPInstance, build_lp, solve_feasibility
from .timegraph import EdgeId, TimeGraph, TimeGraphError

# called with every (edge, instance, result) the pruner produces
ResultHook = Callable[[EdgeId, LPInstance, FeasibilityResult], None]


class Decision(str, enum.Enum):
    HAMILTONIAN = "Hamiltonian"
    NOT_HAMILTONIAN = "NotHamiltonian"


class InvalidOrderingError(TimeGraphError):
    pass


@dataclass(frozen=True)
class PruneReport:
    decision: Decision
    final_graph: TimeGraph
    removals: tuple[tuple[EdgeId, int], ...]  # (edge, pass number)
    lp_calls: int
    per_call_trace: tuple[tuple[EdgeId, bool], ...] = field(default=(), repr=False)
    witness_hits: int = 0

    @property
    def removed_edges(self) -> list[EdgeId]:
        return [e for e, _ in self.removals]

    def to_json(self, trace: bool = False) -> dict:
        out = {
            "decision": self.decision.value,
            "order": self.final_graph.order,
            "final_edges": [list(e) for e in self.final_graph.sorted_edges],
            "removals": [{"edge": list(e), "pass": p} for e, p in self.removals],
            "lp_calls": self.lp_calls,
            "witness_hits": self.witness_hits,
        }
        if trace:
            out["trace"] = [{"edge": list(e), "feasible": ok} for e, ok in self.per_call_trace]
        return out


class _Checker:
    """Runs the LP for one edge, optionally answering from earlier feasible points.

    A feasible point of an earlier LP whose support survives in the current
    graph and that puts value 1 on ``e`` is itself a feasible point of the
    current LP for ``e``, so the solver is skipped.
    """

    def __init__(self, reuse_witnesses: bool, on_result: Optional[ResultHook]):
        self.reuse = reuse_witnesses
        self.on_result = on_result
        self.witnesses: list = []
        self.lp_calls = 0
        self.hits = 0
        self.trace: list[tuple[EdgeId, bool]] = []

    def feasible(self, g: TimeGraph, e: EdgeId) -> bool:
        if self.reuse:
            for point in self.witnesses:
                if point[e] == 1 and point.support <= g.edges:
                    self.hits += 1
                    self.trace.append((e, True))
                    return True
        lp = build_lp(g, e)
        result = solve_feasibility(lp)
        self.lp_calls += 1
        self.trace.append((e, result.feasible))
        if self.on_result is not None:
            self.on_result(e, lp, result)
        if result.feasible and self.reuse:
            self.witnesses.append(result.point)
        return result.feasible


def prune(
    g: TimeGraph,
    *,
    reuse_witnesses: bool = False,
    on_result: Optional[ResultHook] = None,
) -> PruneReport:
    checker = _Checker(reuse_witnesses, on_result)
    current = g
    removals: list[tuple[EdgeId, int]] = []
    passes = 1
    while current.edges:
        for e in current.sorted_edges:
            if not checker.feasible(current, e):
                current = current.without(e)
                removals.append((e, passes))
                passes += 1
                break
        else:
            return _report(Decision.HAMILTONIAN, current, removals, checker)
    return _report(Decision.NOT_HAMILTONIAN, current, removals, checker)


def prune_single_pass(
    g: TimeGraph,
    order: Optional[Sequence[EdgeId]] = None,
    *,
    on_result: Optional[ResultHook] = None,
) -> PruneReport:
    order = list(g.sorted_edges) if order is None else [EdgeId(*e) for e in order]
    if len(order) != len(g.edges) or set(order) != g.edges:
        raise InvalidOrderingError("order must be a permutation of the graph's edges")
    checker = _Checker(False, on_result)
    current = g
    removals = []
    for e in order:
        if not checker.feasible(current, e):
            current = current.without(e)
            removals.append((e, 1))
    decision = Decision.HAMILTONIAN if current.edges else Decision.NOT_HAMILTONIAN
    return _report(decision, current, removals, checker)


def _report(decision, final, removals, checker) -> PruneReport:
    return PruneReport(
        decision=decision,
        final_graph=final,
        removals=tuple(removals),
        lp_calls=checker.lp_calls,
        per_call_trace=tuple(checker.trace),
        witness_hits=checker.hits,
    )


def replay_trace(g: TimeGraph, report: PruneReport) -> bool:
    """Re-derive every removal of a restart-pruning report from scratch.

    Checks that the trace is exactly what :func:`prune` would have produced:
    each removed edge was useless in the graph as it stood at that moment, and
    every edge reported feasible really was.
    """
    current = g
    removed = iter(report.removed_edges)
    pending = next(removed, None)
    for e, ok in report.per_call_trace:
        if e not in current.edges:
            return False
        if solve_feasibility(build_lp(current, e)).feasible != ok:
            return False
        if not ok:
            if e != pending:
                return False
            current = current.without(e)
            pending = next(removed, None)
    return pending is None and current == report.final_graph

