import random

import pytest

from vassiliev.diagrams import (
    Diagram,
    DiagramSum,
    canonicalize,
    chord_diagram,
    decompose,
    random_diagram,
    serialize,
)
from vassiliev.relations import (
    dimension,
    ihx,
    internal_edges,
    quotient_space,
    reduce_to_chords,
    stu,
)

TRIPOD = Diagram(3, 1, [(0, 3), (1, 4), (2, 5)])
CROSS = chord_diagram([(0, 2), (1, 3)])
NESTED = chord_diagram([(0, 1), (2, 3)])


def _line_adjacent(d):
    """(vertex, leg) pairs with an edge from the circle to the vertex."""
    out = []
    for a, b in d.edges:
        if a < d.legs <= b:
            out.append(((b - d.legs) // 3, a))
        elif b < d.legs <= a:
            out.append(((a - d.legs) // 3, b))
    return out


def test_stu_tripod_resolution():
    s = stu(TRIPOD, 0)
    terms = dict(s.terms)
    assert terms == {canonicalize(CROSS).diagram: 1,
                     canonicalize(NESTED).diagram: -1}


def test_stu_structure_preserved():
    rng = random.Random(21)
    checked = 0
    while checked < 25:
        d = random_diagram(rng, rng.randint(2, 4))
        pairs = _line_adjacent(d)
        if not pairs:
            continue
        v, leg = pairs[rng.randrange(len(pairs))]
        out = stu(d, v, leg)
        for term in out.terms:
            assert term.degree == d.degree
            assert term.vertices == d.vertices - 1
        checked += 1


def test_stu_errors():
    with pytest.raises(ValueError):
        stu(TRIPOD, 3)
    # vertex 2 touches only other vertices, never the circle
    d = Diagram(3, 3, [(0, 3), (1, 4), (2, 6),
                       (5, 9), (7, 10), (8, 11)])
    assert all(v != 2 for v, _ in _line_adjacent(d))
    with pytest.raises(ValueError):
        stu(d, 2)


def test_ihx_structure_preserved():
    rng = random.Random(22)
    checked = 0
    while checked < 25:
        d = random_diagram(rng, rng.randint(2, 4))
        edges = internal_edges(d)
        if not edges:
            continue
        e = edges[rng.randrange(len(edges))]
        out = ihx(d, e)
        connected_in = len(decompose(d).components) == 1
        for term in out.terms:
            assert term.degree == d.degree
            assert term.vertices == d.vertices
            if connected_in:
                assert len(decompose(term).components) == 1
        checked += 1


def test_ihx_errors():
    with pytest.raises(ValueError):
        ihx(TRIPOD, (0, 3))  # touches the circle
    with pytest.raises(ValueError):
        ihx(TRIPOD, (4, 5))  # not an edge


def test_reduce_chord_input_identity():
    assert reduce_to_chords(CROSS) == DiagramSum([(CROSS, 1)])


def test_reduce_tripod():
    assert reduce_to_chords(TRIPOD) == DiagramSum([(CROSS, 1), (NESTED, -1)])


def _reduce_alternative(d):
    """Independent elimination order: largest circle position first."""
    sd = canonicalize(d)
    if sd.sign == 0:
        return DiagramSum()

    def rec(dd):
        if dd.vertices == 0:
            return DiagramSum([(dd, 1)])
        best = None
        for a, b in dd.edges:
            if a < dd.legs <= b:
                cand = (a, (b - dd.legs) // 3)
            elif b < dd.legs <= a:
                cand = (b, (a - dd.legs) // 3)
            else:
                continue
            if best is None or cand[0] > best[0]:
                best = cand
        out = DiagramSum()
        for d2, c in stu(dd, best[1], best[0]).terms.items():
            for d3, c3 in rec(d2).terms.items():
                out.add(d3, c * c3)
        return out

    out = DiagramSum()
    for d2, c in rec(sd.diagram).terms.items():
        out.add(d2, sd.sign * c)
    return out


def test_reduce_order_independent_mod_relations():
    rng = random.Random(23)
    for _ in range(20):
        d = random_diagram(rng, rng.randint(2, 5))
        space = quotient_space(d.degree, False)
        assert space.classes_equal(reduce_to_chords(d), _reduce_alternative(d)), \
            serialize(d)


def test_dimension_values():
    assert dimension(0, True) == 1
    assert dimension(1, True) == 0
    assert [dimension(i, True) for i in (2, 3, 4, 5)] == [1, 1, 3, 4]
    assert dimension(1, False) == 1
    assert [dimension(i, False) for i in (0, 2, 3, 4, 5)] == [1, 2, 3, 6, 10]


def test_dimension_degree_six():
    assert dimension(6, True) == 9
    assert dimension(6, False) == 19


def test_dimension_rejects_negative():
    with pytest.raises(ValueError):
        dimension(-1)


def test_four_t_relations_vanish_in_quotient():
    from vassiliev.relations import four_t_relations

    for degree in (2, 3, 4):
        rels = four_t_relations(degree)
        assert rels.degree == degree
        space = quotient_space(degree, False)
        for rel in rels.relations:
            assert all(t.degree == degree for t in rel.terms)
            assert space.is_zero(rel)
