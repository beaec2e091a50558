"""Brute-force enumeration of Hamiltonian time paths.

Plain depth-first search over unvisited cities, layer by layer.  It shares no
code with the LP machinery so it can serve as ground truth for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .timegraph import EdgeId, TimeGraph, TimeGraphError, TimePath, canonical

DEFAULT_ORDER_CAP = 8
DEFAULT_PATH_CAP = 1000


class InstanceTooLargeError(TimeGraphError):
    pass


@dataclass(frozen=True)
class OracleResult:
    htp_count: int
    htps: tuple[TimePath, ...] = ()
    edges_on_htps: frozenset[EdgeId] = field(default_factory=frozenset)

    def to_json(self) -> dict:
        return {
            "htp_count": self.htp_count,
            "htps": [list(p.cities) for p in self.htps],
            "edges_on_htps": [list(e) for e in canonical(self.edges_on_htps)],
        }


def enumerate_htps(
    g: TimeGraph, cap: int = DEFAULT_ORDER_CAP, path_cap: int = DEFAULT_PATH_CAP
) -> OracleResult:
    n = g.order
    if n > cap:
        raise InstanceTooLargeError(f"order {n} exceeds oracle cap {cap}")
    succ: dict[tuple[int, int], list[int]] = {}
    for e in g.sorted_edges:
        succ.setdefault((e.from_city, e.layer), []).append(e.to_city)

    count = 0
    paths: list[TimePath] = []
    on_paths: set[EdgeId] = set()
    cities: list[int] = []
    visited = [False] * (n + 1)

    def visit(city: int, t: int) -> None:
        nonlocal count
        # standing on vertex (city, t) with t cities placed
        if t == n:
            if 0 in succ.get((city, n), ()):
                count += 1
                if len(paths) < path_cap:
                    paths.append(TimePath(tuple(cities)))
                on_paths.update(TimePath(tuple(cities)).edges())
            return
        for nxt in succ.get((city, t), ()):
            if nxt and not visited[nxt]:
                visited[nxt] = True
                cities.append(nxt)
                visit(nxt, t + 1)
                cities.pop()
                visited[nxt] = False

    visit(0, 0)
    return OracleResult(count, tuple(paths), frozenset(on_paths))


def is_hamiltonian(g: TimeGraph, cap: int = DEFAULT_ORDER_CAP) -> bool:
    return enumerate_htps(g, cap=cap, path_cap=0).htp_count > 0
