# The Laplace operator on formal sums of graphs.
#
# A loop [a,a] in position i is replaced by minus the sum of all edges
# [a,m], m != a, in the same position; non-loop edges are left alone.

from graphlaplace import DirectedGraph, GraphVector, laplace, laplace_undirected, parse_graph

two_loops = GraphVector.basis(parse_graph("n=2;1>1,2>2"))
print("Laplace of n=2;1>1,2>2:")
print(laplace(two_loops).to_text())

# On three vertices every loop fans out into two edges.
print("\nLaplace of n=3;1>1,1>2:")
print(laplace(GraphVector.basis(parse_graph("n=3;1>1,1>2"))).to_text())

# A single vertex has nowhere to send its loop: the result is zero.
print("\nLaplace of n=1;1>1:", laplace(GraphVector.basis(parse_graph("n=1;1>1"))).to_text())

# Loopless graphs are fixed, so applying the operator twice changes nothing.
v = GraphVector.basis(parse_graph("n=3;1>1,2>2"))
print("\nidempotent:", laplace(laplace(v)) == laplace(v))

# Undirected version: orient, apply, forget.  Any orientation gives the same answer.
g = parse_graph("n=3;1-1,2-3")
a = laplace_undirected(GraphVector.basis(g))
b = laplace_undirected(GraphVector.basis(g), lift=lambda _: DirectedGraph(3, ((1, 1), (3, 2))))
print("\nundirected Laplace of", g)
print(a.to_text())
print("same for the other orientation:", a == b)
