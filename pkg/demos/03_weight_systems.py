"""su(N) weight systems in the fundamental representation.

The group factor of a diagram is an exact Laurent polynomial in N,
computed by reducing to chord diagrams and contracting every chord with
the fundamental completeness identity (trace normalization 1/2 by
default).  A framing-corrected variant vanishes on isolated chords and
is the evaluator matched by knot polynomial coefficients.
"""

import random

from vassiliev import (
    Diagram,
    WeightConfig,
    check_multiplicativity,
    chord_diagram,
    product,
    random_diagram,
    weight_sun,
    weight_sun_at,
    weight_sun_deframed,
)

cfg = WeightConfig()
print("conventions:", cfg.describe())

chord = chord_diagram([(0, 1)])
tripod = Diagram(3, 1, [(0, 3), (1, 4), (2, 5)])
print("\nweights as Laurent polynomials in N:")
print("  empty    : 1")
print("  chord    :", weight_sun(chord, cfg), "   -> (N^2-1)/2N")
print("  tripod   :", weight_sun(tripod, cfg))
print("  chord^2  :", weight_sun(product(chord, chord), cfg))
print("at N = 2:", weight_sun_at(chord, 2, cfg),
      " at N = 3:", weight_sun_at(chord, 3, cfg))

print("\nmultiplicativity over non-overlapping parts (exact):")
rng = random.Random(1)
for _ in range(3):
    d1 = random_diagram(rng, 2)
    d2 = random_diagram(rng, 2)
    print("  random pair ->", check_multiplicativity(d1, d2, cfg))

print("\nthe framing-corrected weight kills isolated chords:")
print("  chord  :", weight_sun_deframed(chord, cfg))
print("  tripod :", weight_sun_deframed(tripod, cfg),
      "(no isolated chord, agrees with the plain weight)")

print("\ngl(N) flag for debugging against simpler closed forms:")
glcfg = WeightConfig(algebra="gl")
print("  chord under gl(N):", weight_sun(chord, glcfg))
