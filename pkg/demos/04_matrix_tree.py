# Higher matrix-tree theorem.
#
# det(n, k) is a signed, 1/k!-normalized sum of totally cyclic graphs.  Its
# image under the Laplace operator is a normalized sum of acyclic graphs.
# Fixing the set I of isolated vertices on the left fixes the sink set on
# the right.

import itertools
from fractions import Fraction
from math import factorial

from graphlaplace import acyclic_sum, det_element, det_minor, laplace

print("det(2,1) =")
print(det_element(2, 1).to_text())
print("its Laplace =")
print(laplace(det_element(2, 1)).to_text())

for n, k in [(3, 1), (3, 2), (3, 3)]:
    lhs = laplace(det_element(n, k))
    rhs = acyclic_sum(n, k).scale(Fraction((-1) ** n, factorial(k)))
    print(f"n={n}, k={k}: {len(acyclic_sum(n, k))} acyclic graphs, identity holds: {lhs == rhs}")

n, k = 3, 2
for size in range(n + 1):
    for subset in itertools.combinations(range(1, n + 1), size):
        lhs = laplace(det_minor(n, k, subset))
        rhs = acyclic_sum(n, k, subset).scale(Fraction((-1) ** n, factorial(k)))
        print(f"  I={set(subset) or '{}'}: {len(rhs)} acyclic graphs with these sinks, holds: {lhs == rhs}")
