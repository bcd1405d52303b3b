"""Tour of the diagram algebra: building, canonicalizing, decomposing.

Diagrams are trivalent graphs attached to an oriented circle.  Legs sit
on the circle (numbered along its orientation), internal vertices carry
a cyclic order of their three half-edges, and reversing that order
flips the diagram's sign.
"""

from vassiliev import (
    Diagram,
    canonicalize,
    chord_diagram,
    decompose,
    degree,
    has_isolated_chord,
    ihx,
    internal_edges,
    product,
    serialize,
    stu,
)

# The degree-2 workhorse: three legs joined at one internal vertex.
tripod = Diagram(3, 1, [(0, 3), (1, 4), (2, 5)])
print("tripod:", serialize(tripod), "degree", degree(tripod))

# Rotating the circle or relabelling vertices does not change the
# canonical form; reversing a vertex's cyclic order flips the sign.
rotated = Diagram(3, 1, [(1, 3), (2, 4), (0, 5)])
reversed_ = Diagram(3, 1, [(0, 3), (1, 5), (2, 4)])
print("rotated copy  -> same diagram, sign",
      canonicalize(rotated).sign)
print("reversed copy -> same diagram, sign",
      canonicalize(reversed_).sign)

# An edge joining two half-edges of the same vertex dies by antisymmetry.
tadpole = Diagram(2, 2, [(0, 2), (1, 5), (3, 4), (6, 7)])
print("tadpole sign:", canonicalize(tadpole).sign)

# Products juxtapose diagrams along the circle; the empty diagram is
# the unit and degrees add.
chord = chord_diagram([(0, 1)])
two_chords = product(chord, chord)
print("chord * chord:", serialize(two_chords))
report = decompose(two_chords)
print("components:", len(report.components),
      "overlapping:", report.overlapping)

# Interleaved chords overlap: no arc of the circle separates them.
cross = chord_diagram([(0, 2), (1, 3)])
print("interleaved chords overlap:", decompose(cross).overlapping)
print("isolated chord?", has_isolated_chord(chord), "(single chord)",
      has_isolated_chord(cross), "(interleaved)")

# STU trades a vertex at the circle for the difference of two leg
# orders; IHX rewires an internal edge.  Both preserve the degree.
print("\nSTU resolution of the tripod:")
for term, coeff in stu(tripod, 0).items():
    print(f"  {'+' if coeff > 0 else '-'}1 * {serialize(term)}")

caterpillar = Diagram(4, 2, [(0, 4), (1, 5), (2, 7), (3, 8), (6, 9)])
edge = internal_edges(caterpillar)[0]
print("IHX image of the degree-3 caterpillar:")
for term, coeff in ihx(caterpillar, edge).items():
    print(f"  {'+' if coeff > 0 else '-'}1 * {serialize(term)}")
