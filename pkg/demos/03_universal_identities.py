# The two main identities, checked by building whole universal vectors.
#
# For every directed graph G with n vertices and k edges the universal
# Bernardi vector carries B_G as the coefficient of G.  Applying the
# Laplace operator should give the top-degree truncation, shifted by
# y -> y-1, z -> z-1.

from graphlaplace import laplace, universal_bernardi, universal_truncated_bernardi
from graphlaplace.poly import shift_yz
from graphlaplace.verify import verify_theorem2

lhs = laplace(universal_bernardi(2, 1))
rhs = universal_truncated_bernardi(2, 1).map_coefficients(shift_yz)
print("Laplace of the universal Bernardi vector, n=2, k=1:")
print(lhs.to_text())
print("equal to the shifted truncation:", lhs == rhs)

for n, k in [(2, 2), (2, 3), (3, 2)]:
    lhs = laplace(universal_bernardi(n, k))
    rhs = universal_truncated_bernardi(n, k).map_coefficients(shift_yz)
    print(f"n={n}, k={k}: {len(lhs)} nonzero graphs, identity holds: {lhs == rhs}")

# The Potts identity is stated for sums over undirected graphs.  Summing over
# directed graphs instead and forgetting orientations weights a graph with m
# non-loop edges by 2^m, and the identity fails.
for reading in ("undirected", "directed-pushforward"):
    r = verify_theorem2(2, 1, reading)
    print(f"Potts identity, {reading} reading: {r.status}", "" if r.status == "equal" else
          f"(at {r.graph}: {r.lhs} vs {r.rhs})")
