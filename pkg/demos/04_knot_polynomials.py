"""Knot polynomials: bracket state sums and the skein recursion.

The bundled table carries PD codes for all prime knots to 7 crossings,
four 8-crossing rationals, the (3,4) torus knot and the granny/square
composites; every entry is validated by crossing count and determinant.
"""

from vassiliev import (
    braid_closure,
    connected_sum,
    determinant,
    homfly,
    jones,
    knot,
    knot_names,
    pd_to_text,
    rational_knot,
    sun_slice,
)
from vassiliev.knots import BraidWord

print("bundled knots:", ", ".join(knot_names()))

tref = knot("3_1")
print("\n3_1 PD:", pd_to_text(tref))
print("jones(3_1)  :", jones(tref))
print("jones(3_1!) :", jones(knot("3_1!")), "  (mirror: t -> 1/t)")
print("homfly(3_1) :", homfly(tref))
print("determinant :", determinant(tref))

print("\nknots can come from braid words or rational tangle codes:")
print("  closure(s1^-3)   :", jones(braid_closure(BraidWord(2, [-1] * 3))))
print("  rational [2,2]   :", jones(rational_knot([2, 2])), " (figure-eight)")

print("\nthe su(2) slice of the skein polynomial is jones at t = q^2:")
for name in ("3_1", "4_1", "6_2", "8_19"):
    pd = knot(name)
    ok = sun_slice(homfly(pd), 2) == jones(pd).substitute_monomial(2, var="q")
    print(f"  {name}: {ok}")

print("\nconnected sums multiply the polynomial invariants:")
granny = connected_sum(tref, tref)
square = connected_sum(tref, tref.mirror())
print("  granny == 3_1 * 3_1 :", homfly(granny) == homfly(tref) ** 2)
print("  square == 3_1 * 3_1!:",
      homfly(square) == homfly(tref) * homfly(tref.mirror()))
print("  jones(square) self-mirror:",
      jones(square) == jones(square).mirror())
