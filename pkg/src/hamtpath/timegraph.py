"""Time graphs of order n: edges, time paths, flows and the text format.

A time graph lives on the vertex set of the complete time graph K_n^T:
a source ``(0, 0)``, a sink ``(0, n+1)`` and interior vertices ``(city, day)``
for ``1 <= city, day <= n``.  Vertices are never stored; every piece of
information is carried by the edge set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence


class TimeGraphError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidOrderError(TimeGraphError):
    pass


class InvalidEdgeError(TimeGraphError):
    pass


class PathNotInGraphError(TimeGraphError):
    def __init__(self, edge: "EdgeId"):
        super().__init__(f"path uses edge {edge} which is not in the graph")
        self.edge = edge


class ParseError(TimeGraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class EdgeId(NamedTuple):
    """Edge from vertex ``(from_city, layer)`` to ``(to_city, layer + 1)``."""

    from_city: int
    to_city: int
    layer: int

    def __str__(self) -> str:
        return f"e({self.from_city},{self.to_city},{self.layer})"

    @property
    def key(self) -> tuple[int, int, int]:
        """Canonical ordering key: layer first, then from-city, then to-city."""
        return (self.layer, self.from_city, self.to_city)


def validate_edge(n: int, i: int, j: int, t: int) -> bool:
    """True iff ``(i, j, t)`` names an edge of K_n^T."""
    if n < 1 or not 0 <= t <= n:
        return False
    if t == 0:
        return i == 0 and 1 <= j <= n
    if t == n:
        return 1 <= i <= n and j == 0
    return 1 <= i <= n and 1 <= j <= n and i != j


def canonical(edges: Iterable[EdgeId]) -> list[EdgeId]:
    return sorted(edges, key=lambda e: e.key)


@dataclass(frozen=True)
class TimeGraph:
    order: int
    edges: frozenset[EdgeId] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise InvalidOrderError(f"order must be a positive integer, got {self.order!r}")
        edges = frozenset(EdgeId(*e) for e in self.edges)
        for e in edges:
            if not validate_edge(self.order, *e):
                raise InvalidEdgeError(f"{e} is not an edge of K_{self.order}^T")
        object.__setattr__(self, "edges", edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e) -> bool:
        return e in self.edges

    def __iter__(self) -> Iterator[EdgeId]:
        return iter(self.sorted_edges)

    @cached_property
    def sorted_edges(self) -> tuple[EdgeId, ...]:
        return tuple(canonical(self.edges))

    def layer(self, t: int) -> list[EdgeId]:
        return [e for e in self.sorted_edges if e.layer == t]

    def without(self, *removed: EdgeId) -> "TimeGraph":
        return TimeGraph(self.order, self.edges.difference(removed))

    def with_edges(self, edges: Iterable[EdgeId]) -> "TimeGraph":
        return TimeGraph(self.order, frozenset(edges))

    def __repr__(self) -> str:
        return f"TimeGraph(order={self.order}, edges=[{', '.join(map(str, self.sorted_edges))}])"


def complete_time_graph(n: int) -> TimeGraph:
    """K_n^T, with n(n-1)^2 + 2n edges."""
    if not isinstance(n, int) or n < 1:
        raise InvalidOrderError(f"order must be a positive integer, got {n!r}")
    edges = [EdgeId(0, j, 0) for j in range(1, n + 1)]
    edges += [
        EdgeId(i, j, t)
        for t in range(1, n)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]
    edges += [EdgeId(i, 0, n) for i in range(1, n + 1)]
    return TimeGraph(n, frozenset(edges))


# edge list of the order-5 non-Hamiltonian example, in the order it is usually quoted
PAPER_S5_EDGES = (
    EdgeId(0, 1, 0),
    EdgeId(1, 2, 1),
    EdgeId(1, 3, 1),
    EdgeId(2, 4, 2),
    EdgeId(3, 5, 2),
    EdgeId(4, 5, 3),
    EdgeId(5, 4, 3),
    EdgeId(5, 2, 4),
    EdgeId(4, 3, 4),
    EdgeId(2, 0, 5),
    EdgeId(3, 0, 5),
)


def paper_s5_graph() -> TimeGraph:
    """The 11-edge order-5 graph whose two time paths both revisit a city."""
    return TimeGraph(5, frozenset(PAPER_S5_EDGES))


@dataclass(frozen=True)
class TimePath:
    """City sequence ``p(1), ..., p(n)`` of a time path."""

    cities: tuple[int, ...]

    def __post_init__(self):
        cities = tuple(int(c) for c in self.cities)
        if not cities:
            raise TimeGraphError("a time path visits at least one city")
        n = len(cities)
        for c in cities:
            if not 1 <= c <= n:
                raise TimeGraphError(f"city {c} out of range 1..{n}")
        for a, b in zip(cities, cities[1:]):
            if a == b:
                raise TimeGraphError(f"consecutive days repeat city {a}")
        object.__setattr__(self, "cities", cities)

    @property
    def order(self) -> int:
        return len(self.cities)

    @property
    def is_hamiltonian(self) -> bool:
        return sorted(self.cities) == list(range(1, self.order + 1))

    def edges(self) -> list[EdgeId]:
        p = self.cities
        n = len(p)
        out = [EdgeId(0, p[0], 0)]
        out += [EdgeId(p[t - 1], p[t], t) for t in range(1, n)]
        out.append(EdgeId(p[-1], 0, n))
        return out


@dataclass(frozen=True)
class Flow:
    """Exact rational function on the edges of a time graph of the given order.

    Edges absent from ``values`` carry 0.
    """

    order: int
    values: Mapping[EdgeId, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self, "values", {EdgeId(*e): Fraction(v) for e, v in self.values.items()}
        )

    def __getitem__(self, e: EdgeId) -> Fraction:
        return self.values.get(e, Fraction(0))

    @property
    def support(self) -> frozenset[EdgeId]:
        return frozenset(e for e, v in self.values.items() if v != 0)

    def is_characteristic(self) -> bool:
        """0/1 valued with exactly one unit edge per layer."""
        if any(v not in (0, 1) for v in self.values.values()):
            return False
        ones = [e.layer for e in self.support]
        return sorted(ones) == list(range(self.order + 1))


def path_to_flow(g: TimeGraph, p: TimePath | Sequence[int]) -> Flow:
    if not isinstance(p, TimePath):
        p = TimePath(tuple(p))
    if p.order != g.order:
        raise TimeGraphError(f"path has {p.order} days but the graph has order {g.order}")
    values = {}
    for e in p.edges():
        if e not in g.edges:
            raise PathNotInGraphError(e)
        values[e] = Fraction(1)
    return Flow(g.order, values)


def layer_sum(fl: Flow, t: int) -> Fraction:
    if not 0 <= t <= fl.order:
        raise TimeGraphError(f"layer {t} out of range 0..{fl.order}")
    return sum((v for e, v in fl.values.items() if e.layer == t), Fraction(0))


def serialize_timegraph(g: TimeGraph) -> str:
    lines = [f"n {g.order}"]
    lines += [f"e {e.from_city} {e.to_city} {e.layer}" for e in g.sorted_edges]
    return "\n".join(lines) + "\n"


def parse_timegraph(text: str) -> TimeGraph:
    order = None
    edges: dict[EdgeId, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, *rest = line.split()
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise ParseError(lineno, f"expected integers, got {line!r}") from None
        if tag == "n":
            if order is not None:
                raise ParseError(lineno, "duplicate header")
            if len(nums) != 1 or nums[0] < 1:
                raise ParseError(lineno, "header must be 'n <order>' with order >= 1")
            order = nums[0]
        elif tag == "e":
            if order is None:
                raise ParseError(lineno, "edge before 'n' header")
            if len(nums) != 3:
                raise ParseError(lineno, "edge line must be 'e <i> <j> <t>'")
            i, j, t = nums
            if not validate_edge(order, i, j, t):
                kind = "self-loop" if i == j and 1 <= t < order else "layer-rule violation"
                raise ParseError(lineno, f"{kind}: ({i},{j},{t}) is not an edge for n={order}")
            e = EdgeId(i, j, t)
            if e in edges:
                raise ParseError(lineno, f"duplicate edge {e} (first on line {edges[e]})")
            edges[e] = lineno
        else:
            raise ParseError(lineno, f"unknown line tag {tag!r}")
    if order is None:
        raise ParseError(0, "missing 'n <order>' header")
    return TimeGraph(order, frozenset(edges))
