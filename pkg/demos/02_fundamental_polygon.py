"""The level-4 ten-gon, its parabolic pairings, and the genus-2 doubling.

Rebuilds the standard fundamental polygon from its boundary data, recovers
the five congruence-group generators, doubles it into the 18-gon, and prints
the cycle/genus bookkeeping together with disc-model arc data.
"""

from thetafuchs.cli import emit_polygon
from thetafuchs.polygons import default_polygon, double_polygon, genus_of

poly = default_polygon(2)
print("Ten-gon boundary corners:", poly.corners)
print("Pairings (parabolic, trace 2):")
for pr in poly.pairings:
    a, b, c, d = (round(v, 6) for v in pr.matrix)
    print(f"  {pr.name}: [[{a},{b}],[{c},{d}]]  side {pr.src} -> side {pr.dst}")

print("\nVertex cycles of the ten-gon:", sorted(sorted(c) for c in poly.cycles()))
print("Genus of the single polygon:", genus_of(poly))

doubled = double_polygon(poly)
print(f"\nDoubled polygon: {doubled.n_sides} sides, "
      f"{doubled.side_pair_count()} side pairs, "
      f"{len(doubled.cycles())} cycles -> genus {genus_of(poly, doubled=True)}")

print("\nDisc-model arcs of the ten-gon:")
data = emit_polygon(poly)
for side in data["sides"]:
    arc = side["disc"]
    if arc["kind"] == "arc":
        print(f"  side {side['index']}: center ({arc['center_re']:+.4f}, "
              f"{arc['center_im']:+.4f}) radius {arc['radius']:.4f}")
    else:
        print(f"  side {side['index']}: diameter")

print("\nGenus table for the doubled polygons:")
for g in range(1, 6):
    p = default_polygon(g)
    print(f"  g = {g}: {double_polygon(p).n_sides}-gon -> genus "
          f"{genus_of(p, doubled=True)}")
