"""Regions, their paths, and the matroid structure they carry.

A region is a pair of monotone lattice paths with common endpoints.  The
paths wedged between them are the bases of a transversal matroid whose
presentation is one integer interval per rank.
"""

from lpmpoly import (
    bases,
    components,
    enumerate_paths,
    intersection_vertices,
    is_independent,
    presentation,
    region_boxes,
    region_from_words,
)

region = region_from_words("EENN", "NENE")
print("region:", region)
print("boxes between the paths:", region_boxes(region))
print("paths between the bounds (lexicographic):")
for path in enumerate_paths(region):
    print("   ", path.word)

print("\nincidence vectors of the bases:")
for bv in bases(region):
    print("   ", "".join(map(str, bv.coords)), "  support", bv.support)

pres = presentation(region)
print("\ninterval presentation:", pres.intervals)
print("is {2,3} independent?", is_independent(pres, {2, 3}))
print("is {1,2} independent?", is_independent(pres, {1, 2}))

# a staircase region with a forced first and last step
staircase = region_from_words("EEENNN", "ENENEN")
print("\nstaircase region:", staircase)
print("touch points of the bounding paths:", intersection_vertices(staircase))
for block in components(staircase).blocks:
    print(f"    elements {block.start}..{block.stop}: {block.kind}")
