"""HAMPATH instances and their reduction to time graphs.

A :class:`Digraph` has a designated source ``S``, terminal ``T`` and inner
vertices ``1..n``.  Inner arcs ``(i, j)`` are copied into every interior
layer, source arcs into layer 0 and terminal arcs into layer n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .timegraph import EdgeId, ParseError, TimeGraph, TimeGraphError

S = "S"
T = "T"
Vertex = Union[str, int]

DEFAULT_INNER_CAP = 10


class DigraphError(TimeGraphError):
    pass


def _check_vertex(n: int, v: Vertex) -> None:
    if v in (S, T):
        return
    if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n:
        raise DigraphError(f"vertex {v!r} is not S, T or an integer in 1..{n}")


@dataclass(frozen=True)
class Digraph:
    inner_count: int
    edges: frozenset[tuple[Vertex, Vertex]] = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.inner_count
        if not isinstance(n, int) or n < 1:
            raise DigraphError(f"inner_count must be a positive integer, got {n!r}")
        edges = frozenset(tuple(e) for e in self.edges)
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise DigraphError(f"self-loop at {u!r}")
            if v == S:
                raise DigraphError(f"arc ({u!r}, S) enters the source")
            if u == T:
                raise DigraphError(f"arc (T, {v!r}) leaves the terminal")
        object.__setattr__(self, "edges", edges)

    def sorted_edges(self) -> list[tuple[Vertex, Vertex]]:
        rank = {S: (0, 0), T: (2, 0)}
        return sorted(self.edges, key=lambda e: (rank.get(e[0], (1, e[0])), rank.get(e[1], (1, e[1]))))


def reduce_hampath(d: Digraph) -> TimeGraph:
    n = d.inner_count
    edges = set()
    for u, v in d.edges:
        if u == S and v != T:
            edges.add(EdgeId(0, v, 0))
        elif v == T and u != S:
            edges.add(EdgeId(u, 0, n))
        elif u != S and v != T:
            edges.update(EdgeId(u, v, t) for t in range(1, n))
        # (S, T) can never lie on a Hamiltonian path and is dropped
    return TimeGraph(n, frozenset(edges))


def hampath_oracle(d: Digraph, cap: int = DEFAULT_INNER_CAP) -> bool:
    """True iff ``d`` has a path S -> every inner vertex once -> T."""
    n = d.inner_count
    if n > cap:
        raise DigraphError(f"{n} inner vertices exceeds the oracle cap {cap}")
    succ: dict[Vertex, list[Vertex]] = {}
    for u, v in d.edges:
        succ.setdefault(u, []).append(v)
    visited: set[Vertex] = set()

    def dfs(u: Vertex) -> bool:
        if len(visited) == n:
            return T in succ.get(u, ())
        for v in succ.get(u, ()):
            if v != T and v not in visited:
                visited.add(v)
                if dfs(v):
                    return True
                visited.discard(v)
        return False

    return dfs(S)


def _token(n: int, s: str, lineno: int) -> Vertex:
    if s in (S, T):
        return s
    try:
        v = int(s)
    except ValueError:
        raise ParseError(lineno, f"bad vertex token {s!r}") from None
    if not 1 <= v <= n:
        raise ParseError(lineno, f"vertex {v} out of range 1..{n}")
    return v


def parse_digraph(text: str) -> Digraph:
    n = None
    edges: dict[tuple[Vertex, Vertex], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, *rest = line.split()
        if tag == "d":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise ParseError(lineno, "header must be 'd <n>' with n >= 1")
            n = int(rest[0])
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "edge before 'd' header")
            if len(rest) != 2:
                raise ParseError(lineno, "edge line must be 'e <u> <v>'")
            u, v = (_token(n, s, lineno) for s in rest)
            if u == v:
                raise ParseError(lineno, f"self-loop at {u}")
            if v == S or u == T:
                raise ParseError(lineno, f"arc ({u}, {v}) enters S or leaves T")
            if (u, v) in edges:
                raise ParseError(lineno, f"duplicate arc ({u}, {v}) (first on line {edges[(u, v)]})")
            edges[(u, v)] = lineno
        else:
            raise ParseError(lineno, f"unknown line tag {tag!r}")
    if n is None:
        raise ParseError(0, "missing 'd <n>' header")
    return Digraph(n, frozenset(edges))


def serialize_digraph(d: Digraph) -> str:
    lines = [f"d {d.inner_count}"] + [f"e {u} {v}" for u, v in d.sorted_edges()]
    return "\n".join(lines) + "\n"
