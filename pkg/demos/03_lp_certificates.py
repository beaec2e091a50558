"""
Useless edges and their certificates
====================================

LP(G, e) asks for a fractional flow that uses every city once and puts one
unit on e.  When it is infeasible the solver returns a Farkas vector y with
y^T A <= 0 and y^T b > 0; when feasible it returns the point.  Both are
re-checked with plain Fraction arithmetic.
"""

# %%
from fractions import Fraction

from hamtpath import EdgeId, Feasible, Flow, build_lp, paper_s5_graph, solve_feasibility, verify_certificate
from hamtpath.timegraph import PAPER_S5_EDGES

g = paper_s5_graph()
print(g)

# %%
# The source edge is not useless: half a unit along each of the two branches
# satisfies every row, although neither branch is a Hamiltonian time path.
source = EdgeId(0, 1, 0)
half = Flow(5, {e: Fraction(1) if e == source else Fraction(1, 2) for e in PAPER_S5_EDGES})
lp = build_lp(g, source)
print(len(lp.rows), "rows,", len(lp.columns), "columns")
result = solve_feasibility(lp)
print("feasible:", result.feasible, "| half flow verifies:", verify_certificate(lp, Feasible(half)))

# %%
# Every other edge is useless.  The certificate names which rows combine into
# the contradiction.
lp = build_lp(g, EdgeId(1, 2, 1))
result = solve_feasibility(lp)
print("feasible:", result.feasible, "| certificate verifies:", verify_certificate(lp, result))
for row, y in sorted(result.certificate.items()):
    print(f"  {str(y):>5}  x  {lp.rows[row].label}")
