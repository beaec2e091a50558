import json

import pytest

from hamtpath.oracle import OracleResult, enumerate_htps
from hamtpath.pruning import Decision, PruneReport
from hamtpath.rng import SplitMix64, instance_seed
from hamtpath.search import (
    Discrepancy,
    DiscrepancyKind,
    GeneratorSpec,
    StaleDiscrepancyError,
    all_subgraphs,
    classify,
    minimize_discrepancy,
    random_subgraph,
    run_campaign,
    write_findings,
)
from hamtpath.timegraph import TimeGraph, TimeGraphError, parse_timegraph

from conftest import E, graph


def test_splitmix64_reference_values():
    # first outputs for seed 1234567 from the published reference implementation
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_random_subgraph_is_reproducible():
    assert random_subgraph(5, 0.4, 7) == random_subgraph(5, 0.4, 7)
    assert random_subgraph(5, 0.4, 7) != random_subgraph(5, 0.4, 8)
    assert len(random_subgraph(4, 0.0, 1)) == 0 and len(random_subgraph(4, 1.0, 1)) == 44


def test_instance_seeds_differ():
    assert len({instance_seed(42, k) for k in range(1000)}) == 1000


def test_exhaustive_tiny_enumerates_all_subsets():
    graphs = list(all_subgraphs(2))
    assert len(graphs) == 64 and len(set(graphs)) == 64


def test_exhaustive_tiny_campaign():
    report = run_campaign(GeneratorSpec("exhaustive-tiny", 2))
    assert report.instances == 64
    assert report.defect_count == 0
    assert report.tallies["oracle_hamiltonian"] == report.tallies["hamiltonian"]


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(kind="exhaustive-tiny", n=3),
        dict(kind="random-subgraph", n=3, p=1.5),
        dict(kind="bogus", n=3),
        dict(kind="random-subgraph", n=0),
        dict(kind="random-subgraph", n=3, fixtures=("nope",)),
    ],
)
def test_invalid_specs(kwargs):
    with pytest.raises(TimeGraphError):
        GeneratorSpec(**kwargs)


def test_cap_is_enforced():
    with pytest.raises(TimeGraphError):
        run_campaign(GeneratorSpec("random-subgraph", 6, count=1), cap=5)


def test_s5_fixture_agrees_not_hamiltonian():
    report = run_campaign(GeneratorSpec("random-subgraph", 3, 0.5, 1, count=0, fixtures=("paper-s5",)))
    assert report.instances == 1
    assert report.tallies["not_hamiltonian"] == 1 and not report.discrepancies


def test_random_campaign_has_no_defects_and_is_deterministic():
    spec = GeneratorSpec("random-subgraph", 4, 0.5, seed=3, count=60)
    a = run_campaign(spec)
    b = run_campaign(spec)
    assert a.defect_count == 0
    assert json.dumps(a.to_json(timing=False)) == json.dumps(b.to_json(timing=False))


def test_parallel_merge_matches_sequential():
    spec = GeneratorSpec("random-digraph", 4, 0.5, seed=11, count=40)
    seq = run_campaign(spec)
    par = run_campaign(spec, workers=2, chunk_size=7)
    assert seq.to_json(timing=False) == par.to_json(timing=False)


def test_spec_json_roundtrip():
    spec = GeneratorSpec("random-subgraph", 5, 0.3, 42, 10, ("paper-s5",))
    assert GeneratorSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec


# a deliberately wrong pruner: answers Hamiltonian whenever the source edge to city 1 is present
def _fake_pruner(g):
    ham = E(0, 1, 0) in g.edges
    return PruneReport(
        Decision.HAMILTONIAN if ham else Decision.NOT_HAMILTONIAN,
        g if ham else TimeGraph(g.order),
        (),
        0,
    )


def _fake_discrepancy(g):
    report = _fake_pruner(g)
    found = classify(g, report, enumerate_htps(g))
    assert [d.kind for d in found] == [DiscrepancyKind.CONJECTURE_COUNTEREXAMPLE]
    return found[0]


def test_minimize_removes_irrelevant_edge():
    d = _fake_discrepancy(graph(2, (0, 1, 0), (1, 2, 1)))
    small = minimize_discrepancy(d, pruner=_fake_pruner)
    assert small.graph.edges == {E(0, 1, 0)}
    assert small.kind is d.kind


def test_minimize_fixed_point():
    d = _fake_discrepancy(graph(2, (0, 1, 0)))
    assert minimize_discrepancy(d, pruner=_fake_pruner).graph == d.graph


def test_minimize_rejects_stale_input():
    g = graph(2, (0, 1, 0), (1, 2, 1), (2, 0, 2))
    stale = Discrepancy(g, DiscrepancyKind.CONJECTURE_COUNTEREXAMPLE, _fake_pruner(g), OracleResult(0))
    with pytest.raises(StaleDiscrepancyError):
        minimize_discrepancy(stale)


def test_classify_flags_useless_edge_bug():
    g = graph(2, (0, 1, 0), (1, 2, 1), (2, 0, 2))
    bad = PruneReport(Decision.NOT_HAMILTONIAN, TimeGraph(2), ((E(1, 2, 1), 1),), 1)
    kinds = {d.kind for d in classify(g, bad, enumerate_htps(g))}
    assert kinds == {DiscrepancyKind.SOUNDNESS_BUG, DiscrepancyKind.USELESS_EDGE_BUG}


def test_write_findings(tmp_path):
    d = _fake_discrepancy(graph(2, (0, 1, 0), (1, 2, 1)))
    report = run_campaign(GeneratorSpec("exhaustive-tiny", 1))
    report = type(report)(**{**report.__dict__, "discrepancies": (d,)})
    paths = write_findings(report, tmp_path / "findings")
    assert len(paths) == 1
    assert parse_timegraph(paths[0].read_text()) == d.graph
    evidence = json.loads(paths[0].with_suffix(".json").read_text())
    assert evidence["kind"] == "ConjectureCounterexample"
