"""STU/IHX relations and the chord-diagram quotient.

The degree-i space of group factors is computed inside the span of
chord diagrams (no internal vertices): internal vertices are eliminated
by repeated STU resolutions, and the four-term (4T) relations -- the
chord-level shadow of STU -- are generated mechanically as differences
of the leg resolutions of one-vertex diagrams.  The reduced quotient
additionally kills every diagram with an isolated chord.

The quotient is represented by an exact sparse row reduction of the
relation rows; membership, dimensions and coordinates all run over
exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagrams import (
    Diagram,
    DiagramSum,
    canonicalize,
    chord_diagrams,
    has_isolated_chord,
    one_vertex_diagrams,
)
from .linalg import SparseEliminator


# --------------------------------------------------------------------------
# STU


def _leg_partners(d: Diagram, v: int) -> list[int]:
    """Circle positions attached to vertex v, sorted."""
    L = d.legs
    out = []
    for a, b in d.edges:
        if a < L and b >= L and (b - L) // 3 == v:
            out.append(a)
        elif b < L and a >= L and (a - L) // 3 == v:
            out.append(b)
    return sorted(out)


def stu(d: Diagram, v: int, leg: int | None = None) -> DiagramSum:
    """Resolve internal vertex v along its edge to the circle.

    Returns the two-term combination equal to d in the quotient: the
    vertex and its leg edge are removed, the leg is replaced by two
    adjacent legs, and the two remaining attachments of v connect to
    them in the two possible orders (coefficients +1 and -1).  If v has
    several leg edges, the smallest leg position is used unless `leg`
    selects one explicitly.
    """
    if not 0 <= v < d.vertices:
        raise ValueError(f"no internal vertex {v}")
    legs_of_v = _leg_partners(d, v)
    if not legs_of_v:
        raise ValueError(f"vertex {v} is not adjacent to the circle")
    if leg is None:
        leg = legs_of_v[0]
    elif leg not in legs_of_v:
        raise ValueError(f"vertex {v} has no edge to leg {leg}")

    L = d.legs
    partner = d.partner_map()
    base = L + 3 * v
    s_line = partner[leg] - base
    s_a = (s_line + 1) % 3
    s_b = (s_line + 2) % 3

    def build(a_pos: int, b_pos: int) -> Diagram:
        # map old endpoints to new ones; leg -> two legs at (leg, leg+1)
        def remap(ep: int) -> int:
            if ep < L:
                return ep if ep < leg else ep + 1
            w, s = divmod(ep - L, 3)
            if w == v:
                if s == s_a:
                    return a_pos
                if s == s_b:
                    return b_pos
                raise AssertionError("line slot should not appear")
            if w > v:
                w -= 1
            return (L + 1) + 3 * w + s

        edges = []
        for x, y in d.edges:
            if leg in (x, y):
                continue  # the resolved line edge disappears
            edges.append((remap(x), remap(y)))
        return Diagram(L + 1, d.vertices - 1, edges)

    out = DiagramSum()
    out.add(build(leg, leg + 1), 1)
    out.add(build(leg + 1, leg), -1)
    return out


# --------------------------------------------------------------------------
# IHX


def internal_edges(d: Diagram) -> list[tuple[int, int]]:
    """Edges joining two distinct internal vertices."""
    L = d.legs
    out = []
    for a, b in d.edges:
        if a >= L and b >= L and (a - L) // 3 != (b - L) // 3:
            out.append((a, b))
    return out


def ihx(d: Diagram, edge: tuple[int, int]) -> DiagramSum:
    """Rewire an internal edge into the two-term combination equal to d.

    With the edge anchored at both vertices, the two attachments of each
    vertex in positive cyclic order after the anchor are (A1, A2) and
    (B1, B2); the output is
        [u:(e,A1,B1), w:(e,A2,B2)] - [u:(e,A1,B2), w:(e,A2,B1)]
    which equals d whenever the vertex value satisfies the Jacobi
    identity.  Degree, vertex count and connectivity are preserved.
    """
    a, b = edge
    e = tuple(sorted((a, b)))
    if e not in d.edges:
        raise ValueError("not an edge of the diagram")
    L = d.legs
    if a < L or b < L:
        raise ValueError("IHX needs an edge between two internal vertices")
    u, su = divmod(a - L, 3)
    w, sw = divmod(b - L, 3)
    if u == w:
        raise ValueError("IHX is undefined on a tadpole edge")

    # attachments in positive cyclic order after the anchor slots
    ua = [L + 3 * u + (su + 1) % 3, L + 3 * u + (su + 2) % 3]
    wa = [L + 3 * w + (sw + 1) % 3, L + 3 * w + (sw + 2) % 3]

    def rewire(sigma: dict[int, int]) -> Diagram:
        # move edge ends between slots: the end at position p lands on
        # sigma[p]; applying sigma to both endpoints of every edge
        # handles edges joining two moved slots correctly
        edges = [
            (sigma.get(x, x), sigma.get(y, y))
            for x, y in d.edges
        ]
        return Diagram(L, d.vertices, edges)

    out = DiagramSum()
    out.add(rewire({ua[1]: wa[0], wa[0]: ua[1]}), 1)
    out.add(rewire({ua[1]: wa[0], wa[0]: wa[1], wa[1]: ua[1]}), -1)
    return out


# --------------------------------------------------------------------------
# reduction to chord diagrams


_REDUCE_CACHE: dict[Diagram, DiagramSum] = {}


def _first_resolvable(d: Diagram) -> tuple[int, int] | None:
    """Smallest leg whose edge ends on a vertex, with that vertex."""
    L = d.legs
    best = None
    for a, b in d.edges:
        if a < L and b >= L:
            cand = (a, (b - L) // 3)
        elif b < L and a >= L:
            cand = (b, (a - L) // 3)
        else:
            continue
        if best is None or cand[0] < best[0]:
            best = cand
    return best


def reduce_to_chords(d: Diagram) -> DiagramSum:
    """Express a diagram as chord diagrams by eliminating all vertices.

    Resolves, at each step, the smallest circle position attached to an
    internal vertex.  The result is well defined modulo the degree's 4T
    relations regardless of elimination order.
    """
    sd = canonicalize(d)
    if sd.sign == 0:
        return DiagramSum()
    out = DiagramSum()
    for d2, c in _reduce_canonical(sd.diagram).terms.items():
        out.add(d2, sd.sign * c)
    return out


def _reduce_canonical(d: Diagram) -> DiagramSum:
    if d.vertices == 0:
        return DiagramSum([(d, 1)])
    cached = _REDUCE_CACHE.get(d)
    if cached is not None:
        return cached
    pick = _first_resolvable(d)
    if pick is None:
        raise ValueError("no vertex adjacent to the circle")
    leg, v = pick
    out = DiagramSum()
    for d2, c in stu(d, v, leg).terms.items():
        for d3, c3 in _reduce_canonical(d2).terms.items():
            out.add(d3, c * c3)
    _REDUCE_CACHE[d] = out
    return out


# --------------------------------------------------------------------------
# relation generators


@dataclass(frozen=True)
class RelationSet:
    """Generators of the degree's relations, each zero in the quotient."""

    degree: int
    relations: tuple[DiagramSum, ...]


_RELATION_CACHE: dict[int, RelationSet] = {}


def four_t_relations(degree: int) -> RelationSet:
    """The 4T relations of a degree, generated as STU-resolution
    differences of every one-vertex diagram (single source of truth:
    nothing is hand-coded)."""
    if degree in _RELATION_CACHE:
        return _RELATION_CACHE[degree]
    rels = []
    for src in one_vertex_diagrams(degree):
        legs = _leg_partners(src, 0)
        resolutions = [stu(src, 0, leg) for leg in legs]
        for other in resolutions[1:]:
            diff = resolutions[0] - other
            if diff:
                rels.append(diff)
    out = RelationSet(degree, tuple(rels))
    _RELATION_CACHE[degree] = out
    return out


# --------------------------------------------------------------------------
# the chord-diagram quotient at a fixed degree


class QuotientSpace:
    """Span of degree-i chord diagrams modulo 4T (and isolated chords).

    `diagrams` is the ambient list of canonical chord diagrams (with
    isolated-chord diagrams removed in the reduced quotient); the 4T
    rows are reduced incrementally and kept as integer pivot rows.
    """

    def __init__(self, degree: int, reduced: bool):
        self.degree = degree
        self.reduced = reduced
        ambient = chord_diagrams(degree)
        if reduced:
            ambient = [c for c in ambient if not has_isolated_chord(c)]
        self.diagrams = ambient
        self.index = {d: i for i, d in enumerate(ambient)}
        self.eliminator = SparseEliminator()
        for row in self._relation_rows():
            self.eliminator.add_row(row)
        self.eliminator.back_substitute()

    def _relation_rows(self):
        rows = []
        for rel in four_t_relations(self.degree).relations:
            row = self._vector(rel)
            if row:
                rows.append(row)
        return rows

    def _vector(self, s: DiagramSum) -> dict[int, Fraction]:
        vec: dict[int, Fraction] = {}
        for d, c in s.terms.items():
            idx = self.index.get(d)
            if idx is None:
                if self.reduced and has_isolated_chord(d):
                    continue  # killed in the reduced quotient
                raise KeyError(f"not a degree-{self.degree} chord diagram: {d}")
            vec[idx] = vec.get(idx, Fraction(0)) + c
        return {c: v for c, v in vec.items() if v}

    @property
    def dimension(self) -> int:
        return len(self.diagrams) - self.eliminator.rank

    def vector_of(self, s: DiagramSum | Diagram) -> dict[int, Fraction]:
        if isinstance(s, Diagram):
            s = reduce_to_chords(s)
        return self._vector(s)

    def residual(self, s: DiagramSum | Diagram) -> dict[int, Fraction]:
        """Representative of the class of s modulo the relations."""
        return self.eliminator.reduce(self.vector_of(s))

    def is_zero(self, s: DiagramSum | Diagram) -> bool:
        return not self.residual(s)

    def classes_equal(self, s1: DiagramSum, s2: DiagramSum) -> bool:
        return self.residual(s1 - s2) == {}


_QUOTIENT_CACHE: dict[tuple[int, bool], QuotientSpace] = {}


def quotient_space(degree: int, reduced: bool = True) -> QuotientSpace:
    key = (degree, reduced)
    if key not in _QUOTIENT_CACHE:
        _QUOTIENT_CACHE[key] = QuotientSpace(degree, reduced)
    return _QUOTIENT_CACHE[key]


def dimension(degree: int, reduced: bool = True) -> int:
    """Number of independent group factors at the given degree.

    With reduced=True diagrams containing isolated chords are quotiented
    away as well (framing-independent setting).
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return quotient_space(degree, reduced).dimension
