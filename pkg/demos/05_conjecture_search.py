"""
Hunting for a non-Hamiltonian graph without useless edges
=========================================================

The pruning verdict "Hamiltonian" is only justified if every nonempty time
graph without useless edges has a Hamiltonian time path.  A campaign prunes
random graphs and compares with brute force; any graph that survives pruning
but has no Hamiltonian time path is archived and shrunk to a 1-minimal
witness.

Sizes here are small enough to finish in a few minutes on one core.
"""

# %%
import json

from hamtpath import GeneratorSpec, minimize_discrepancy, run_campaign

# %%
for n, p in [(4, 0.5), (5, 0.35), (6, 0.3)]:
    report = run_campaign(GeneratorSpec("random-subgraph", n, p, seed=1, count=100))
    print(f"n={n} p={p}: {report.wall_time:.1f}s", json.dumps(report.tallies))
    for d in report.counterexamples():
        small = minimize_discrepancy(d)
        print("  counterexample, minimized:", sorted(tuple(e) for e in small.graph.edges))
