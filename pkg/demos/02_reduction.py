"""
From HAMPATH to time graphs
===========================

A digraph with source S, terminal T and inner vertices 1..n becomes a time
graph of order n: source arcs go into layer 0, terminal arcs into layer n,
and every inner arc is copied into each interior layer.
"""

# %%
from hamtpath import Digraph, enumerate_htps, hampath_oracle, reduce_hampath
from hamtpath.reduction import S, T, parse_digraph
from hamtpath.search import random_digraph
from hamtpath.timegraph import serialize_timegraph

# %%
d = parse_digraph("""
d 3
e S 1
e 1 2
e 2 3
e 3 1
e 3 T
e 2 T
""")
g = reduce_hampath(d)
print(serialize_timegraph(g))
print("digraph Hamiltonian:", hampath_oracle(d))
print("time paths:", [p.cities for p in enumerate_htps(g).htps])

# %%
# The two brute-force deciders agree on random digraphs.
agree = 0
for seed in range(300):
    d = random_digraph(5, 0.45, seed)
    agree += hampath_oracle(d) == (enumerate_htps(reduce_hampath(d)).htp_count > 0)
print(f"{agree}/300 agree")
