"""
Why pruning must restart
========================

Removing a useless edge can make other edges useless.  A single pass that
never looks back can therefore end with a nonempty graph that has no
Hamiltonian time path at all.
"""

# %%
from hamtpath import paper_s5_graph, prune, prune_single_pass
from hamtpath.timegraph import PAPER_S5_EDGES

g = paper_s5_graph()

# %%
naive = prune_single_pass(g, PAPER_S5_EDGES)
print("single pass:", naive.decision.value, "left with", [str(e) for e in naive.final_graph])

# %%
full = prune(g)
print("restarting:", full.decision.value)
for edge, pass_no in full.removals:
    print(f"  pass {pass_no:2d}: removed {edge}")
print("LP calls:", full.lp_calls)
