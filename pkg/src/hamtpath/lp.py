"""The feasibility LP attached to an edge of a time graph.

For a time graph ``G`` and an edge ``e`` the system asks for a nonnegative
rational flow ``f`` on ``E(G)`` with

* unit flow out of the source,
* conservation at every interior vertex ``(i, t)``,
* every city left exactly once in total over days 1..n,
* unit flow into the sink,
* ``f(e) = 1``.

If no such ``f`` exists no Hamiltonian time path can use ``e`` and the edge
is called useless.  Feasibility is decided exactly over the rationals by a
Phase-I simplex with Bland's rule, and every answer carries a certificate
that :func:`verify_certificate` re-checks independently: a feasible point,
or a Farkas vector ``y`` with ``y^T A <= 0`` and ``y^T b > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

import gmpy2
from gmpy2 import mpq

from .timegraph import EdgeId, Flow, TimeGraph, TimeGraphError, layer_sum


class EdgeNotInGraphError(TimeGraphError):
    pass


@dataclass(frozen=True)
class Row:
    coeffs: Mapping[int, int]  # column -> coefficient in {-1, 1}
    rhs: int
    label: str


@dataclass(frozen=True)
class LPInstance:
    """Equality system ``A f = b, f >= 0`` over the edges of one time graph."""

    order: int
    columns: tuple[EdgeId, ...]
    rows: tuple[Row, ...]
    pinned: int

    @property
    def column_of(self) -> dict[EdgeId, int]:
        return {e: k for k, e in enumerate(self.columns)}

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "columns": [list(e) for e in self.columns],
            "pinned": self.pinned,
            "rows": [
                {
                    "label": r.label,
                    "coeffs": {str(k): _fmt(v) for k, v in sorted(r.coeffs.items())},
                    "rhs": _fmt(r.rhs),
                }
                for r in self.rows
            ],
        }


@dataclass(frozen=True)
class Feasible:
    point: Flow

    feasible = True

    def to_json(self) -> dict:
        return {
            "feasible": True,
            "point": {
                f"{e.from_city} {e.to_city} {e.layer}": _fmt(v)
                for e, v in sorted(self.point.values.items(), key=lambda kv: kv[0].key)
            },
        }


@dataclass(frozen=True)
class Infeasible:
    certificate: Mapping[int, Fraction]  # row index -> multiplier

    feasible = False

    def to_json(self) -> dict:
        return {
            "feasible": False,
            "certificate": {str(k): _fmt(v) for k, v in sorted(self.certificate.items())},
        }


FeasibilityResult = Union[Feasible, Infeasible]


def _fmt(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def build_lp(g: TimeGraph, e: EdgeId) -> LPInstance:
    e = EdgeId(*e)
    if e not in g.edges:
        raise EdgeNotInGraphError(f"{e} is not an edge of the graph")
    n = g.order
    columns = g.sorted_edges
    col = {edge: k for k, edge in enumerate(columns)}
    out_edges: dict[tuple[int, int], list[int]] = {}
    in_edges: dict[tuple[int, int], list[int]] = {}
    for edge, k in col.items():
        # edge leaves vertex (from_city, layer) and enters (to_city, layer+1)
        out_edges.setdefault((edge.from_city, edge.layer), []).append(k)
        in_edges.setdefault((edge.to_city, edge.layer + 1), []).append(k)

    rows = [Row({k: 1 for k in out_edges.get((0, 0), [])}, 1, "source")]
    for i in range(1, n + 1):
        for t in range(1, n + 1):
            coeffs = {k: 1 for k in out_edges.get((i, t), [])}
            for k in in_edges.get((i, t), []):
                coeffs[k] = coeffs.get(k, 0) - 1
            rows.append(Row(coeffs, 0, f"conserve {i} {t}"))
    for i in range(1, n + 1):
        coeffs = {k: 1 for t in range(1, n + 1) for k in out_edges.get((i, t), [])}
        rows.append(Row(coeffs, 1, f"city {i}"))
    rows.append(Row({k: 1 for k in in_edges.get((0, n + 1), [])}, 1, "sink"))
    rows.append(Row({col[e]: 1}, 1, "pin"))
    return LPInstance(n, columns, tuple(rows), col[e])


def solve_feasibility(lp: LPInstance) -> FeasibilityResult:
    """Decide ``A f = b, f >= 0`` exactly by Phase-I simplex with Bland's rule."""
    m = len(lp.rows)
    nc = len(lp.columns)
    width = nc + m  # structural columns, then one artificial per row
    zero = mpq(0)
    one = mpq(1)

    sign = []
    tab: list[list] = []
    rhs: list = []
    for r, row in enumerate(lp.rows):
        s = -1 if row.rhs < 0 else 1
        sign.append(s)
        line = [zero] * width
        for k, v in row.coeffs.items():
            if v:
                line[k] = mpq(s * v)
        line[nc + r] = one
        tab.append(line)
        rhs.append(mpq(s * row.rhs))
    basis = [nc + r for r in range(m)]

    # phase-I reduced costs: 0 - sum of rows on structural columns, 0 on artificials
    cost = [zero] * width
    for line in tab:
        for k in range(nc):
            if line[k]:
                cost[k] -= line[k]

    while True:
        enter = next((k for k in range(nc) if cost[k] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = tab[r][enter]
            if a > 0:
                ratio = rhs[r] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:  # cannot happen: phase-I objective is bounded below by 0
            raise AssertionError("unbounded phase-I problem")
        _pivot(tab, rhs, cost, leave, enter)
        basis[leave] = enter

    infeas = sum((rhs[r] for r in range(m) if basis[r] >= nc), zero)
    if infeas == 0:
        values = {}
        for r in range(m):
            k = basis[r]
            if k < nc and rhs[r] != 0:
                values[lp.columns[k]] = _frac(rhs[r])
        return Feasible(Flow(lp.order, values))
    certificate = {}
    for r in range(m):
        y = (one - cost[nc + r]) * sign[r]
        if y != 0:
            certificate[r] = _frac(y)
    return Infeasible(certificate)


def _pivot(tab, rhs, cost, leave, enter):
    prow = tab[leave]
    piv = prow[enter]
    if piv != 1:
        inv = 1 / piv
        prow[:] = [v * inv if v else v for v in prow]
        rhs[leave] = rhs[leave] * inv
    nz = [k for k, v in enumerate(prow) if v]
    pb = rhs[leave]
    for r, line in enumerate(tab):
        if r == leave:
            continue
        f = line[enter]
        if f:
            for k in nz:
                line[k] = line[k] - f * prow[k]
            rhs[r] = rhs[r] - f * pb
    f = cost[enter]
    if f:
        for k in nz:
            cost[k] = cost[k] - f * prow[k]


def _frac(q) -> Fraction:
    return Fraction(int(gmpy2.numer(q)), int(gmpy2.denom(q)))


def verify_certificate(lp: LPInstance, result: FeasibilityResult) -> bool:
    """Re-check a feasibility result against ``lp`` with plain Fraction arithmetic."""
    if isinstance(result, Feasible):
        point = result.point
        col = lp.column_of
        if any(v < 0 for v in point.values.values()):
            return False
        if any(e not in col for e, v in point.values.items() if v != 0):
            return False
        x = [point[e] for e in lp.columns]
        return all(
            sum((c * x[k] for k, c in row.coeffs.items()), Fraction(0)) == row.rhs
            for row in lp.rows
        )
    if isinstance(result, Infeasible):
        y = result.certificate
        if any(not 0 <= r < len(lp.rows) for r in y):
            return False
        yta = [Fraction(0)] * len(lp.columns)
        ytb = Fraction(0)
        for r, mult in y.items():
            row = lp.rows[r]
            ytb += mult * row.rhs
            for k, c in row.coeffs.items():
                yta[k] += mult * c
        return ytb > 0 and all(v <= 0 for v in yta)
    return False


def has_unit_layers(point: Flow) -> bool:
    """True iff every layer of ``point`` sums to exactly 1."""
    return all(layer_sum(point, t) == 1 for t in range(point.order + 1))


def is_useless(g: TimeGraph, e: EdgeId) -> bool:
    return not solve_feasibility(build_lp(g, e)).feasible
