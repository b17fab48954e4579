"""Symbolic F-splitting certificates.

The certificate checks two things for the canonical witness
f = y_1 * f_{1,2} * ... * f_{d-1,d} * x_d:

  1. for every minimal prime p_S, a per-factor count places f in p_S to
     order at least the height of p_S;
  2. f^(p-1) stays outside the Frobenius power of the maximal ideal,
     decided exactly by a capped expansion over F_p.

Both sides are exact, so a "pass" verdict is a proof.  A "fail" is only
inconclusive: the counting is a lower bound, and a different labeling of
the same graph may succeed, which the search mode exploits.
"""

from beicert import (
    caterpillar,
    certificate_to_json,
    certify_symbolic_fsplit,
    complete_multipartite,
    make_graph,
)

print("== a passing certificate ==")
cert = certify_symbolic_fsplit(complete_multipartite([3, 2, 1]), 2)
print(f"K(3,2,1) at p=2: verdict {cert.verdict}")
for row in cert.per_prime:
    print(f"  S = {set(row.cut_set) or '{}'}: height {row.height}, "
          f"required {row.required}, bound {row.bound}")
print(f"  frobenius outside m^[p]: {cert.frobenius_ok}")

print()
print("== caterpillars pass at every prime ==")
g = caterpillar([0, 1, 0, 0])
for p in (2, 3, 5):
    print(f"  p={p}:", certify_symbolic_fsplit(g, p).verdict)

print()
print("== an inconclusive failure rescued by relabeling ==")
g = make_graph(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (3, 5)])
cert = certify_symbolic_fsplit(g, 2)
blocking = [r for r in cert.per_prime if r.bound < r.required]
print(f"identity labeling: {cert.verdict}, blocked at "
      f"S = {set(blocking[0].cut_set)} with bound {blocking[0].bound} "
      f"vs height {blocking[0].height}")
cert = certify_symbolic_fsplit(g, 2, search_labelings=True)
print(f"after search: {cert.verdict} under labeling {cert.labeling_used}")

print()
print("== the full certificate serializes ==")
print(certificate_to_json(certify_symbolic_fsplit(caterpillar([0, 1, 0, 0]), 2)), end="")
