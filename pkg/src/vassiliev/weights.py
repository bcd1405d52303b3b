"""su(N) weight system in the fundamental representation.

The group factor of a diagram is evaluated exactly as a Laurent
polynomial in N: the diagram is first reduced to chord diagrams by STU
resolutions, then every chord is contracted with the fundamental
completeness identity

    sum_a (T^a)_ij (T^a)_kl = c * (d_il d_kj - (1/N) d_ij d_kl)

(the -1/N term is dropped for gl(N)).  Values are normalized by the
trace of the identity, so the empty diagram evaluates to 1.  The trace
normalization c (fundamental trace of T^a T^b = c * delta) defaults to
1/2 and is recorded in every output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import (
    Diagram,
    canonical_key,
    canonicalize,
    decompose,
    product,
)
from .laurent import Laurent1
from .relations import reduce_to_chords
from .formal import MultiPoly, symbol


@dataclass(frozen=True)
class WeightConfig:
    """Evaluation conventions: trace normalization and algebra family."""

    normalization: Fraction = Fraction(1, 2)
    algebra: str = "su"  # "su" (traceless) or "gl"

    def __post_init__(self):
        if self.normalization <= 0:
            raise ValueError("trace normalization must be positive")
        if self.algebra not in ("su", "gl"):
            raise ValueError("algebra must be 'su' or 'gl'")

    def describe(self) -> str:
        return f"{self.algebra}(N), tr(T^a T^b) = {self.normalization}*delta"


DEFAULT_CONFIG = WeightConfig()

_CHORD_WEIGHT_CACHE: dict[tuple, Laurent1] = {}


def _loops(pairings: list[tuple[int, int]], n_arcs: int) -> int:
    """Components of the arc multigraph (self-loops count as components)."""
    parent = list(range(n_arcs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairings:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(i) for i in range(n_arcs)})


def _chord_weight(d: Diagram, cfg: WeightConfig) -> Laurent1:
    """State sum over the 2^m resolutions of the chords of a chord diagram."""
    key = (d, cfg.normalization, cfg.algebra)
    cached = _CHORD_WEIGHT_CACHE.get(key)
    if cached is not None:
        return cached
    L = d.legs
    chords = list(d.edges)
    m = len(chords)
    out = Laurent1.zero(var="N")
    if L == 0:
        out = Laurent1.one(var="N")
    else:
        subsets = [()] if cfg.algebra == "gl" else None
        states = range(1 << m) if subsets is None else [0]
        for state in states:
            pairings = []
            trace_chords = 0
            for k, (p, q) in enumerate(chords):
                if cfg.algebra == "su" and (state >> k) & 1:
                    # identity term: chord removed, arcs rejoined locally
                    trace_chords += 1
                    pairings.append(((p - 1) % L, p))
                    pairings.append(((q - 1) % L, q))
                else:
                    # swap term
                    pairings.append(((p - 1) % L, q))
                    pairings.append(((q - 1) % L, p))
            loops = _loops(pairings, L)
            coeff = Fraction(-1) ** trace_chords
            out = out + Laurent1.term(coeff, loops - 1 - trace_chords, var="N")
        out = out * (cfg.normalization ** m)
    _CHORD_WEIGHT_CACHE[key] = out
    return out


def weight_sun(d: Diagram, cfg: WeightConfig = DEFAULT_CONFIG) -> Laurent1:
    """Group factor of a diagram as an exact Laurent polynomial in N.

    Computed through `reduce_to_chords` followed by chord contraction;
    multiplicative over non-overlapping components and consistent with
    the STU and IHX relations by construction.
    """
    out = Laurent1.zero(var="N")
    for c, coeff in reduce_to_chords(d).terms.items():
        out = out + _chord_weight(c, cfg) * coeff
    return out


def weight_sun_at(d: Diagram, n: int, cfg: WeightConfig = DEFAULT_CONFIG) -> Fraction:
    """Weight evaluated at a concrete rank N = n >= 2."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    return weight_sun(d, cfg)(Fraction(n))


def check_multiplicativity(d1: Diagram, d2: Diagram,
                           cfg: WeightConfig = DEFAULT_CONFIG) -> bool:
    """Exact test that the juxtaposed diagram's weight factorizes."""
    return weight_sun(product(d1, d2), cfg) == weight_sun(d1, cfg) * weight_sun(d2, cfg)


# --------------------------------------------------------------------------
# deframed (standard-framing) weight system


def _remove_chords(d: Diagram, keep: list[tuple[int, int]]) -> Diagram:
    """Chord diagram with only the given chords, legs renumbered."""
    legs = sorted(p for chord in keep for p in chord)
    index = {p: i for i, p in enumerate(legs)}
    return Diagram(len(legs), 0, [(index[a], index[b]) for a, b in keep])


_DEFRAMED_CACHE: dict[tuple, Laurent1] = {}


def _chord_weight_deframed(d: Diagram, cfg: WeightConfig) -> Laurent1:
    key = (d, cfg.normalization, cfg.algebra)
    cached = _DEFRAMED_CACHE.get(key)
    if cached is not None:
        return cached
    from .diagrams import chord_diagram

    theta = _chord_weight(chord_diagram([(0, 1)]), cfg)
    chords = list(d.edges)
    out = Laurent1.zero(var="N")
    for r in range(len(chords) + 1):
        import itertools as _it

        for removed in _it.combinations(range(len(chords)), r):
            keep = [c for k, c in enumerate(chords) if k not in removed]
            sub = canonicalize(_remove_chords(d, keep)).diagram
            term = _chord_weight(sub, cfg) * ((-1) ** r) * (theta ** r)
            out = out + term
    _DEFRAMED_CACHE[key] = out
    return out


def weight_sun_deframed(d: Diagram, cfg: WeightConfig = DEFAULT_CONFIG) -> Laurent1:
    """Weight corrected to vanish on diagrams with isolated chords.

    On a chord diagram this is the alternating sum over chord subsets J
    of (single-chord weight)^|J| times the plain weight with J removed;
    it kills the isolated-chord ideal while still satisfying 4T, so it
    descends to the reduced quotient and matches the coefficients of
    unknot-normalized (framing-independent) knot invariants.
    """
    out = Laurent1.zero(var="N")
    for c, coeff in reduce_to_chords(d).terms.items():
        out = out + _chord_weight_deframed(c, cfg) * coeff
    return out


def weight_sun_deframed_at(d: Diagram, n: int,
                           cfg: WeightConfig = DEFAULT_CONFIG) -> Fraction:
    if n < 2:
        raise ValueError("rank must be at least 2")
    return weight_sun_deframed(d, cfg)(Fraction(n))


def weight_product_group(d: Diagram, marks: tuple[str, str] = ("G", "G'"),
                         labeler=None) -> dict[tuple[int, int], MultiPoly]:
    """Formal weight of a diagram under a product group.

    For a diagram with non-overlapping connected components p of degrees
    deg_p, returns the expansion of

        prod_p ( w_p(first mark) x^deg_p + w_p(second mark) x'^deg_p )

    as a dict (x-degree, x'-degree) -> polynomial in the formal component
    weights.  `labeler(component_diagram)` may supply the symbol label
    for a component (e.g. its basis coordinates); the default labels by
    canonical form.
    """
    report = decompose(d)
    if report.overlapping:
        raise ValueError("product-group weights need non-overlapping input")
    out: dict[tuple[int, int], MultiPoly] = {(0, 0): MultiPoly.one()}
    for comp in report.components:
        cd = canonicalize(comp.diagram).diagram
        label = labeler(cd) if labeler else canonical_key(cd)
        i = cd.degree
        g = MultiPoly.sym(symbol("w", marks[0], label))
        gp = MultiPoly.sym(symbol("w", marks[1], label))
        new: dict[tuple[int, int], MultiPoly] = {}
        for (a, b), poly in out.items():
            for key, val in (((a + i, b), poly * g), ((a, b + i), poly * gp)):
                if key in new:
                    new[key] = new[key] + val
                else:
                    new[key] = val
        out = new
    return out
