"""Surgery graphs at genus 1 and 2."""
from unicellular import (build_graph, components, count_maps, cubic, diameter, isolated_nodes,
                         rooted_count)

for d in [(4,), (3, 3), (4, 4, 4), cubic(2), (8,)]:
    g = build_graph(d)
    comps = components(g)
    print("K%s: %d classes (%d rooted), %d edges, %d component(s), diameter %s"
          % (list(d), len(g), rooted_count(d), g.n_edges, len(comps), diameter(g).value))
    if isolated_nodes(g):
        print("   isolated:", [str(g.nodes[i]) for i in isolated_nodes(g)])

# All six classes of (4,4,4) and their neighbors
g = build_graph((4, 4, 4))
for i, c in enumerate(g.nodes):
    print(i, c, g.adjacency[i])

print(g.to_dot())
print(count_maps(cubic(2)), "cubic genus-2 classes")
