"""Boundary words, vertex rotations and genus on a few small maps."""
from unicellular import parse_word, subdivide_edge, split_vertex, collapse_edge
from unicellular.oracles import corner_degrees

# The square torus: one vertex of degree 4, two loops.
torus = parse_word("1 2 -1 -2")
print(torus, "->", torus.vertex_cycles, "genus", torus.genus)

# sigma(x) is the letter right after -x in the cyclic word
for x in (1, 2, -1, -2):
    print("  sigma(%d) = %d" % (x, torus.sigma(x)))

# The theta graph on the torus: two cubic vertices.
theta = parse_word("1 2 3 -1 -2 -3")
print(theta, "->", theta.vertex_cycles, "degrees", theta.degrees)

# Gluing the sides of the hexagon directly gives the same corners.
print("corner gluing:", corner_degrees(theta.word))

# A genus-0 word is a plane tree.
tree = parse_word("1 -1 2 -2")
print(tree, "degrees", tree.degrees, "genus", tree.genus)

# Local edits keep the genus.
sub = subdivide_edge(torus, 1)
print("subdivide edge 1:", sub, sub.degrees, "genus", sub.genus)
split = split_vertex(torus, 0, 0, 2)
print("split the vertex:", split, split.degrees, "genus", split.genus)
print("collapse it again:", collapse_edge(split, split.n_edges))
