"""
Time graphs
===========

A time graph of order n is a layered DAG: a source (0, 0), a sink (0, n+1)
and n interior vertices (city, day) per day.  Edges only join consecutive
days, so cycles are impossible and a Hamiltonian cycle becomes a path that
visits each city on exactly one day.
"""

# %%
import math

from hamtpath import complete_time_graph, enumerate_htps, layer_sum, path_to_flow
from hamtpath.timegraph import parse_timegraph, serialize_timegraph

# %%
# K_n^T has n source edges, n sink edges and n(n-1) edges in each of the
# n-1 interior layers.
for n in range(1, 9):
    g = complete_time_graph(n)
    print(n, len(g), n * (n - 1) ** 2 + 2 * n)

# %%
# Every permutation of the cities is a Hamiltonian time path of K_n^T.
for n in range(1, 7):
    print(n, enumerate_htps(complete_time_graph(n), path_cap=0).htp_count, math.factorial(n))

# %%
# The characteristic flow of a path puts exactly one unit on each layer.
g = complete_time_graph(4)
flow = path_to_flow(g, (2, 4, 1, 3))
print(sorted(map(str, flow.support)))
print([str(layer_sum(flow, t)) for t in range(5)])

# %%
# Text format: a header line and one canonical edge line per edge.
text = serialize_timegraph(complete_time_graph(2))
print(text)
assert parse_timegraph(text) == complete_time_graph(2)
