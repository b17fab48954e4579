"""Cut sets, minimal primes, and classification flags.

The binomial edge ideal of a connected graph has one minimal prime per cut
set: S is a cut set when it is empty or removing it disconnects more than
putting any single element back would.  Each prime carries the components
of the leftover graph and the height |S| + d - c(S).
"""

from beicert import (
    classify,
    complete_multipartite,
    enumerate_minimal_primes,
    is_cut_set,
    join_of_completes,
    make_graph,
    report_json,
)

g = complete_multipartite([3, 2, 1])
print("K(3,2,1):")
for p in enumerate_minimal_primes(g):
    print(f"  S = {set(p.cut_set) or '{}'}: height {p.height}, components {p.components}")

print()
print("The complement of a part is a cut set only when the part has at")
print("least two vertices.  The complement of the singleton part {6} is")
print("{1,...,5}, and removing it leaves a single vertex, so no element is")
print("essential:")
print("  is_cut_set(g, [1,2,3,4,5]) =", is_cut_set(g, [1, 2, 3, 4, 5]))

print()
print("Classification flags bundle the standard shape questions:")
for name, graph in [
    ("K(3,2,1)", g),
    ("cone over K_2 and K_3", join_of_completes(1, [2, 3])),
    ("net (triangle with pendants)", make_graph(6, [(1, 2), (1, 3), (2, 3), (1, 6), (2, 5), (3, 4)])),
]:
    cls = classify(graph)
    print(f"  {name}: assCount={cls.ass_count} unmixed={cls.unmixed} "
          f"accessible={cls.accessible} traceable={cls.traceable}")

print()
print("Machine-readable report (byte-stable JSON):")
print(report_json(join_of_completes(1, [2, 3])), end="")
