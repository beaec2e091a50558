"""Falsification campaigns for the pruning verdict.

Each instance is pruned and, independently, brute-forced by the oracle.  The
two verdicts are compared and disagreements are recorded:

``ConjectureCounterexample``
    the pruner stops with edges left but the graph has no Hamiltonian time
    path, i.e. a nonempty time graph without useless edges that is not
    Hamiltonian.  This is a finding, not a defect.
``SoundnessBug``
    the pruner removed every edge of a Hamiltonian graph.
``UselessEdgeBug``
    an edge lying on a Hamiltonian time path was classified useless.

The last two can only come from implementation errors.  Every LP answer is
also re-verified through its certificate while the campaign runs.
"""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice
from pathlib import Path
from typing import Callable, Iterator, Optional

from .lp import Feasible, has_unit_layers, verify_certificate
from .oracle import DEFAULT_ORDER_CAP, OracleResult, enumerate_htps
from .pruning import Decision, PruneReport, prune
from .reduction import S, T, Digraph, reduce_hampath
from .rng import SplitMix64, instance_seed
from .timegraph import (
    EdgeId,
    TimeGraph,
    TimeGraphError,
    complete_time_graph,
    paper_s5_graph,
    serialize_timegraph,
)

KINDS = ("random-subgraph", "random-digraph", "exhaustive-tiny")
FIXTURES: dict[str, Callable[[], TimeGraph]] = {"paper-s5": paper_s5_graph}


class StaleDiscrepancyError(TimeGraphError):
    pass


class DiscrepancyKind(str, enum.Enum):
    CONJECTURE_COUNTEREXAMPLE = "ConjectureCounterexample"
    SOUNDNESS_BUG = "SoundnessBug"
    USELESS_EDGE_BUG = "UselessEdgeBug"


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    p: float = 0.5
    seed: int = 0
    count: int = 1
    fixtures: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise TimeGraphError(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")
        if not isinstance(self.n, int) or self.n < 1:
            raise TimeGraphError(f"n must be a positive integer, got {self.n!r}")
        if not 0.0 <= self.p <= 1.0:
            raise TimeGraphError(f"edge probability must lie in [0, 1], got {self.p}")
        if self.kind == "exhaustive-tiny" and self.n > 2:
            raise TimeGraphError("exhaustive-tiny is limited to n <= 2")
        if self.count < 0:
            raise TimeGraphError("count must be nonnegative")
        for name in self.fixtures:
            if name not in FIXTURES:
                raise TimeGraphError(f"unknown fixture {name!r}")
        object.__setattr__(self, "fixtures", tuple(self.fixtures))
        object.__setattr__(self, "seed", int(self.seed) & ((1 << 64) - 1))

    @classmethod
    def from_json(cls, data: dict) -> "GeneratorSpec":
        return cls(**{**data, "fixtures": tuple(data.get("fixtures", ()))})

    def to_json(self) -> dict:
        return {**asdict(self), "fixtures": list(self.fixtures)}


def random_subgraph(n: int, p: float, seed: int) -> TimeGraph:
    """Keep each edge of K_n^T, in canonical order, with probability ``p``."""
    rng = SplitMix64(seed)
    return TimeGraph(n, frozenset(e for e in complete_time_graph(n) if rng.random() < p))


def digraph_candidates(n: int) -> list[tuple]:
    arcs: list[tuple] = [(S, j) for j in range(1, n + 1)]
    arcs += [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    arcs += [(i, T) for i in range(1, n + 1)]
    return arcs


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Keep each possible arc (source arcs, inner arcs, terminal arcs) with probability ``p``."""
    rng = SplitMix64(seed)
    return Digraph(n, frozenset(a for a in digraph_candidates(n) if rng.random() < p))


def all_subgraphs(n: int) -> Iterator[TimeGraph]:
    edges = complete_time_graph(n).sorted_edges
    for mask in range(1 << len(edges)):
        yield TimeGraph(n, frozenset(e for b, e in enumerate(edges) if mask >> b & 1))


def generate(spec: GeneratorSpec) -> Iterator[TimeGraph]:
    if spec.kind == "exhaustive-tiny":
        yield from all_subgraphs(spec.n)
    elif spec.kind == "random-subgraph":
        for k in range(spec.count):
            yield random_subgraph(spec.n, spec.p, instance_seed(spec.seed, k))
    else:
        for k in range(spec.count):
            yield reduce_hampath(random_digraph(spec.n, spec.p, instance_seed(spec.seed, k)))
    for name in spec.fixtures:
        yield FIXTURES[name]()


@dataclass(frozen=True)
class Discrepancy:
    graph: TimeGraph
    kind: DiscrepancyKind
    prune_report: PruneReport
    oracle_result: OracleResult
    edge: Optional[EdgeId] = None
    index: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "index": self.index,
            "edge": None if self.edge is None else list(self.edge),
            "graph": serialize_timegraph(self.graph),
            "prune": self.prune_report.to_json(trace=True),
            "oracle": self.oracle_result.to_json(),
        }


@dataclass
class InstanceOutcome:
    index: int
    viable: bool
    decision: Decision
    htp_count: int
    lp_calls: int = 0
    certificate_checks: int = 0
    certificate_failures: int = 0
    layer_failures: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)


def classify(
    g: TimeGraph,
    report: PruneReport,
    oracle: OracleResult,
    index: Optional[int] = None,
) -> list[Discrepancy]:
    found = []
    if report.decision is Decision.HAMILTONIAN and oracle.htp_count == 0:
        found.append(Discrepancy(g, DiscrepancyKind.CONJECTURE_COUNTEREXAMPLE, report, oracle, None, index))
    if report.decision is Decision.NOT_HAMILTONIAN and oracle.htp_count > 0:
        found.append(Discrepancy(g, DiscrepancyKind.SOUNDNESS_BUG, report, oracle, None, index))
    for e in report.removed_edges:
        if e in oracle.edges_on_htps:
            found.append(Discrepancy(g, DiscrepancyKind.USELESS_EDGE_BUG, report, oracle, e, index))
    return found


def run_instance(
    index: int, g: TimeGraph, cap: int = DEFAULT_ORDER_CAP, reuse_witnesses: bool = True
) -> InstanceOutcome:
    oracle = enumerate_htps(g, cap=cap, path_cap=0)
    has_source = any(e.layer == 0 for e in g.edges)
    has_sink = any(e.layer == g.order for e in g.edges)
    if not (has_source and has_sink):
        return InstanceOutcome(index, False, Decision.NOT_HAMILTONIAN, oracle.htp_count)

    stats = {"checks": 0, "bad_cert": 0, "bad_layers": 0}

    def audit(e, lp, result):
        stats["checks"] += 1
        if not verify_certificate(lp, result):
            stats["bad_cert"] += 1
        if isinstance(result, Feasible) and not has_unit_layers(result.point):
            stats["bad_layers"] += 1

    report = prune(g, reuse_witnesses=reuse_witnesses, on_result=audit)
    return InstanceOutcome(
        index=index,
        viable=True,
        decision=report.decision,
        htp_count=oracle.htp_count,
        lp_calls=report.lp_calls,
        certificate_checks=stats["checks"],
        certificate_failures=stats["bad_cert"],
        layer_failures=stats["bad_layers"],
        discrepancies=classify(g, report, oracle, index),
    )


def _run_chunk(args) -> list[InstanceOutcome]:
    start, graphs, cap, reuse = args
    return [run_instance(start + k, g, cap, reuse) for k, g in enumerate(graphs)]


@dataclass(frozen=True)
class CampaignReport:
    spec: GeneratorSpec
    instances: int
    tallies: dict
    discrepancies: tuple[Discrepancy, ...]
    lp_calls: int
    certificate_checks: int
    certificate_failures: int
    layer_failures: int
    wall_time: float

    @property
    def defect_count(self) -> int:
        return (
            self.tallies[DiscrepancyKind.SOUNDNESS_BUG.value]
            + self.tallies[DiscrepancyKind.USELESS_EDGE_BUG.value]
            + self.certificate_failures
            + self.layer_failures
        )

    def counterexamples(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.kind is DiscrepancyKind.CONJECTURE_COUNTEREXAMPLE]

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "spec": self.spec.to_json(),
            "seed": self.spec.seed,
            "instances": self.instances,
            "tallies": self.tallies,
            "lp_calls": self.lp_calls,
            "certificate_checks": self.certificate_checks,
            "certificate_failures": self.certificate_failures,
            "layer_failures": self.layer_failures,
            "discrepancies": [d.to_json() for d in self.discrepancies],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def run_campaign(
    spec: GeneratorSpec,
    *,
    cap: int = DEFAULT_ORDER_CAP,
    workers: int = 1,
    chunk_size: int = 50,
    reuse_witnesses: bool = True,
) -> CampaignReport:
    if spec.n > cap:
        raise TimeGraphError(f"n={spec.n} exceeds the oracle cap {cap}")
    started = time.perf_counter()
    graphs = generate(spec)
    outcomes: list[InstanceOutcome] = []
    if workers <= 1:
        for k, g in enumerate(graphs):
            outcomes.append(run_instance(k, g, cap, reuse_witnesses))
    else:
        def chunks():
            start = 0
            while batch := list(islice(graphs, chunk_size)):
                yield start, batch, cap, reuse_witnesses
                start += len(batch)

        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map yields in submission order, so the merge is deterministic
            for part in pool.map(_run_chunk, chunks()):
                outcomes.extend(part)

    tallies = {
        "hamiltonian": 0,
        "not_hamiltonian": 0,
        "non_viable": 0,
        "oracle_hamiltonian": 0,
        **{k.value: 0 for k in DiscrepancyKind},
    }
    discrepancies = []
    for out in outcomes:
        tallies["hamiltonian" if out.decision is Decision.HAMILTONIAN else "not_hamiltonian"] += 1
        tallies["non_viable"] += not out.viable
        tallies["oracle_hamiltonian"] += out.htp_count > 0
        for d in out.discrepancies:
            tallies[d.kind.value] += 1
        discrepancies.extend(out.discrepancies)
    return CampaignReport(
        spec=spec,
        instances=len(outcomes),
        tallies=tallies,
        discrepancies=tuple(discrepancies),
        lp_calls=sum(o.lp_calls for o in outcomes),
        certificate_checks=sum(o.certificate_checks for o in outcomes),
        certificate_failures=sum(o.certificate_failures for o in outcomes),
        layer_failures=sum(o.layer_failures for o in outcomes),
        wall_time=time.perf_counter() - started,
    )


def minimize_discrepancy(
    d: Discrepancy,
    *,
    pruner: Callable[[TimeGraph], PruneReport] = prune,
    oracle: Callable[[TimeGraph], OracleResult] = enumerate_htps,
) -> Discrepancy:
    """Greedily drop edges while the discrepancy persists; returns a 1-minimal witness."""

    def reproduce(g: TimeGraph) -> Optional[Discrepancy]:
        if d.edge is not None and d.edge not in g.edges:
            return None
        for found in classify(g, pruner(g), oracle(g), d.index):
            if found.kind is d.kind and found.edge == d.edge:
                return found
        return None

    current = reproduce(d.graph)
    if current is None:
        raise StaleDiscrepancyError(f"{d.kind.value} does not reproduce on the given graph")
    shrinking = True
    while shrinking:
        shrinking = False
        for e in current.graph.sorted_edges:
            smaller = reproduce(current.graph.without(e))
            if smaller is not None:
                current = smaller
                shrinking = True
                break
    return current


def write_findings(report: CampaignReport, out_dir: str | Path) -> list[Path]:
    """Write each discrepancy as a time-graph file plus an evidence JSON file."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for k, d in enumerate(report.discrepancies):
        stem = out_dir / f"finding-{k:04d}-{d.kind.value}"
        graph_path = stem.with_suffix(".tg")
        graph_path.write_text(serialize_timegraph(d.graph))
        evidence = {"spec": report.spec.to_json(), **d.to_json()}
        stem.with_suffix(".json").write_text(json.dumps(evidence, indent=2) + "\n")
        written.append(graph_path)
    return written
