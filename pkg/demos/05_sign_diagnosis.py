# Which sign does the strict chromatic polynomial take at q = -1 on an
# acyclic graph: (-1)^n or (-1)^k?
#
# Both candidates are tested on every acyclic graph; when n and k have the
# same parity they agree, so the cases with different parity decide.

from graphlaplace.verify import diagnose_sign_convention, verify_prop_ac

reports = []
for n, k in [(1, 0), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]:
    r = verify_prop_ac(n, k)
    reports.append(r)
    print(f"n={n} k={k}: {r.details['acyclic_graphs']:3d} acyclic graphs, "
          f"values {r.details['acyclic_values']}, consistent with {r.details['conventions']}")

print("uniform over all cases:", diagnose_sign_convention(reports))
