"""Cutting a region's polytope into border-strip polytopes.

Whenever two consecutive presentation intervals straddle a common value,
the polytope splits along a prefix-sum hyperplane into two smaller path
polytopes of the same dimension.  Recursing terminates exactly at the
border strips: the monotone box paths through the region.
"""

from lpmpoly import (
    border_strips,
    decomposition_tree,
    find_split,
    hyperplane_split,
    region_from_words,
    region_to_strip,
    strip_volume,
    volume,
)

square = region_from_words("EENN", "NNEE")
print("region:", square, " split at:", find_split(square))
result = hyperplane_split(square, *find_split(square))
print("children:", result.left, result.right)

big = region_from_words("EEENNN", "NNENEE")


def show(node, indent="    "):
    if not node.children:
        strip = region_to_strip(node.region)
        print(f"{indent}leaf {node.region}  strip {strip.direction_word!r} "
              f"descents {sorted(strip.descents)}  fillings {strip_volume(strip)}")
        return
    print(f"{indent}split {node.region} at (x={node.split.x}, j={node.split.j})")
    for child in node.children:
        show(child, indent + "    ")


print("\nrecursive decomposition of", big)
show(decomposition_tree(big))

strips = border_strips(big)
print("\nborder strips found directly:", [s.direction_word for s in strips])
print("their filling counts:", [strip_volume(s) for s in strips])
print("total =", sum(strip_volume(s) for s in strips), "= volume =", volume(big))
