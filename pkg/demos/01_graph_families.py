"""Tour of the built-in graph families.

Every construction returns the same frozen Graph type: vertices are the
labels 1..d and edges are stored as sorted pairs, so families compose with
the generic graph tooling (relabeling, serialization, analysis).
"""

from beicert import (
    caterpillar,
    caterpillar_spine,
    circ_compose,
    complete_multipartite,
    flipped_half_graph,
    graph_to_json,
    graph_to_text,
    half_graph,
    join_of_completes,
    path_graph,
    star_compose,
)

print("== complete multipartite ==")
g = complete_multipartite([3, 2, 1])
print("K(3,2,1) on parts {1,2,3} | {4,5} | {6}:")
print(" ", g.sorted_edges)

print()
print("== caterpillar ==")
legs = [0, 1, 0, 0]
print(f"leg counts {legs} -> spine {caterpillar_spine(legs)}")
g = caterpillar(legs)
print(" ", g.sorted_edges)
print("  (vertex 3 hangs off spine vertex 2)")

print()
print("== join of completes ==")
g = join_of_completes(1, [2, 3])
print("cone K_1 over K_2 and K_3:")
print(" ", g.sorted_edges)

print()
print("== half graphs ==")
g = half_graph(3)
print("odd-even ladder on 6 vertices:", g.sorted_edges)
f = flipped_half_graph(2)
print("parity-swapped variant on 4 vertices:", f.sorted_edges)
print("  (equals the path:", f == path_graph(4), ")")

print()
print("== leaf compositions ==")
p3 = path_graph(3)
print("glue two paths at a leaf:", star_compose(p3, 3, p3, 1).sorted_edges)
p4 = path_graph(4)
print("identify leaf neighbors, drop both leaves:", circ_compose(p4, 4, p4, 1).sorted_edges)

print()
print("== serialization ==")
g = caterpillar([0, 2, 0])
print(graph_to_json(g), end="")
print("text form:")
print(graph_to_text(g), end="")
