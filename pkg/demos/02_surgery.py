"""Card shuffling on a genus-2 word, and the loop it closes."""
from unicellular import (canonical_form, involution_loop, is_intertwined, moves, neighborhood,
                         parse_word, surgery)

m = parse_word("1 2 -1 -2 3 4 -3 -4")
print("map", m, "degrees", m.degrees, "genus", m.genus)

# which pairs of letters can be operated on
for x, y in ((1, 2), (1, 3), (1, 4), (2, 3)):
    print("  %d, %d intertwined: %s" % (x, y, is_intertwined(m, x, y)))

mv = moves(m)[0]
out = surgery(m, mv)
print("surgery", mv, "->", out, "degrees", out.degrees, "genus", out.genus)

# doing the reversed move afterwards comes back to the same class
back = involution_loop(m, mv)
print("loop back:", back, "same class:", canonical_form(back) == canonical_form(m))

nb = neighborhood(m)
print("%d neighbor classes, %d moves land in the same class" % (len(nb.neighbors), nb.self_loops))
for c, move in nb.sorted():
    print("  ", c, "via", move)

# The one-vertex word x1 .. xn -x1 .. -xn has no intertwined pair at all.
iso = parse_word("1 2 3 4 -1 -2 -3 -4")
print(iso, "moves:", moves(iso))
