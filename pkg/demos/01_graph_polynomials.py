# Per-graph polynomials: Bernardi, full chromatic and Potts.
#
# Every polynomial here is computed by visiting all colorings for a few
# integer values of q and interpolating exactly in q.  Run with
#     python demos/01_graph_polynomials.py

from graphlaplace import bernardi, chi_geq, chi_gt, full_chromatic, parse_graph, potts, potts_sokal
from graphlaplace.poly import eval_at

# A single directed edge 1 -> 2 on two vertices.  y counts edges whose head
# gets the larger color, z those whose head gets the smaller one.
edge = parse_graph("n=2;1>2")
print("B  of", edge, "=", bernardi(edge))

# Loops never change color, so they drop out of the Bernardi polynomial.
print("B  of n=2;1>1,1>2 =", bernardi(parse_graph("n=2;1>1,1>2")))

# Specializing y=0, z=1 counts weakly decreasing colorings; keeping only the
# top (y,z)-degree first counts strictly decreasing ones.
print("chi>= of", edge, "=", chi_geq(edge))
print("chi>  of", edge, "=", chi_gt(edge))

# A directed triangle is totally cyclic: weakly decreasing along a cycle
# forces a constant coloring.
triangle = parse_graph("n=3;1>2,2>3,3>1")
print("chi>= of the directed triangle =", chi_geq(triangle))

# Undirected side: full chromatic polynomial and the Potts polynomial, the
# latter by two unrelated routes that must agree.
double = parse_graph("n=2;1-2,1-2")
print("C of", double, "=", full_chromatic(double))
print("Z via colorings  =", potts(double))
print("Z via subgraphs  =", potts_sokal(double))

# Values are exact rationals throughout.
print("chi> of the path 1>2>3 at q=-1:", eval_at(chi_gt(parse_graph("n=3;1>2,2>3")), q=-1))
