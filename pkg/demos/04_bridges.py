"""Bridges, perfect matchings and bridge elimination on cubic maps."""
from unicellular import (bridge_elimination, bridges, cubic, enumerate_maps, is_virtual_collection,
                         perfect_matching)

for c in enumerate_maps(cubic(2)):
    m = c.map
    br = bridges(m)
    pm = perfect_matching(m)
    print(c, "bridges", sorted(br), "matching", sorted(pm.edges) if pm else None)
    if br:
        for step in bridge_elimination(m):
            print("   bridge %d removed by %s -> %s (%d bridges left)"
                  % (step.bridge, step.move, step.map, step.bridges_after))
        print("   virtual collection:", is_virtual_collection(step.map))
