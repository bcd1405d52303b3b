"""Trivalent diagrams on an oriented circle.

A diagram is a dashed trivalent graph attached to an oriented circle:
L legs (endpoints on the circle, cyclically ordered), T internal
trivalent vertices (each carrying a cyclic order of its three incident
half-edges), and a perfect matching of all half-edges into dashed edges.
The degree is (L + T) / 2.

Endpoint encoding: legs are 0..L-1 following the circle orientation;
slot s of internal vertex v is L + 3*v + s.  The stored slot order
(0, 1, 2) of a vertex *is* its positive cyclic order; reversing it flips
the diagram's sign (antisymmetry of the internal vertices).

Canonical forms quotient by circle rotation, vertex relabelling and
cyclic slot rotation; orientation reversals are tracked as signs.  The
canonical labelling is found by minimizing a traversal code over all
rotations and per-vertex orientation choices -- vertex numbering is
forced by discovery order, so the search space is L * 2**T, which is
tiny at the degrees (<= 7) this library targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


class Diagram:
    """Immutable trivalent diagram on an oriented circle."""

    __slots__ = ("legs", "vertices", "edges", "_hash")

    def __init__(self, legs: int, vertices: int, edges):
        edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        self.legs = int(legs)
        self.vertices = int(vertices)
        self.edges = edges
        self._hash = hash((self.legs, self.vertices, edges))
        self._validate()

    def _validate(self) -> None:
        L, T = self.legs, self.vertices
        if L < 0 or T < 0:
            raise ValueError("negative leg or vertex count")
        n = L + 3 * T
        if n % 2:
            raise ValueError("odd number of half-edges cannot be matched")
        if len(self.edges) != n // 2:
            raise ValueError(f"expected {n // 2} edges, got {len(self.edges)}")
        seen = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError("edge endpoints must be distinct half-edges")
            for x in (a, b):
                if not 0 <= x < n:
                    raise ValueError(f"endpoint {x} out of range")
                if x in seen:
                    raise ValueError(f"endpoint {x} used twice")
                seen.add(x)
        if T:
            self._check_components_touch_circle()

    def _check_components_touch_circle(self) -> None:
        # every dashed component must contain at least one leg
        L = self.legs
        parent = list(range(L + self.vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def owner(ep):
            return ep if ep < L else L + (ep - L) // 3

        for a, b in self.edges:
            ra, rb = find(owner(a)), find(owner(b))
            if ra != rb:
                parent[ra] = rb
        leg_roots = {find(p) for p in range(L)}
        for v in range(self.vertices):
            if find(L + v) not in leg_roots:
                raise ValueError(
                    "dashed component disconnected from the circle")

    @property
    def degree(self) -> int:
        return (self.legs + self.vertices) // 2

    def partner_map(self) -> dict[int, int]:
        partner = {}
        for a, b in self.edges:
            partner[a] = b
            partner[b] = a
        return partner

    def has_tadpole(self) -> bool:
        """True if some edge joins two half-edges of the same vertex."""
        L = self.legs
        for a, b in self.edges:
            if a >= L and b >= L and (a - L) // 3 == (b - L) // 3:
                return True
        return False

    def __eq__(self, other):
        return (isinstance(other, Diagram)
                and self.legs == other.legs
                and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Diagram({serialize(self)!r})"


EMPTY = Diagram(0, 0, ())


@dataclass(frozen=True)
class SignedDiagram:
    """A canonical diagram with the sign picked up while canonicalizing.

    Sign 0 means antisymmetry forces the diagram's value to vanish
    (tadpole edge, or an automorphism reversing an odd number of vertex
    orientations).
    """

    diagram: Diagram
    sign: int


def degree(d: Diagram) -> int:
    """Perturbative order of a diagram: (legs + internal vertices) / 2."""
    return d.degree


# --------------------------------------------------------------------------
# canonical labelling


def _scan(L, T, partner, rotation, eps, best):
    """Generate the traversal code for one labelling choice.

    Returns (tokens, better) where better is True if strictly smaller
    than `best`; returns (None, False) when the code provably exceeds
    `best` (early abort).
    """
    vid = {}
    anchor = {}
    order = []
    tokens = []
    undecided = best is not None  # still equal to best so far

    def emit(t):
        nonlocal undecided
        if undecided:
            b = best[len(tokens)]
            if t > b:
                return False
            if t < b:
                undecided = False
        tokens.append(t)
        return True

    def tok(ep):
        if ep < L:
            return (ep - rotation) % L
        v, s = divmod(ep - L, 3)
        new = vid.get(v)
        if new is None:
            new = len(order)
            vid[v] = new
            anchor[v] = s
            order.append(v)
            return L + 3 * new
        k = ((s - anchor[v]) * eps[v]) % 3
        return L + 3 * new + k

    for p in range(L):
        if not emit(tok(partner[(rotation + p) % L])):
            return None, False
    i = 0
    while i < len(order):
        v = order[i]
        a, e = anchor[v], eps[v]
        for step in (1, 2):
            if not emit(tok(partner[L + 3 * v + (a + step * e) % 3])):
                return None, False
        i += 1
    return tuple(tokens), not undecided


def _sign_of(eps) -> int:
    sign = 1
    for e in eps:
        sign *= e
    return sign


_CANON_CACHE: dict[Diagram, tuple[SignedDiagram, tuple]] = {}


def _canonicalize_full(d: Diagram) -> tuple[SignedDiagram, tuple]:
    cached = _CANON_CACHE.get(d)
    if cached is not None:
        return cached
    L, T = d.legs, d.vertices
    if L == 0 and T == 0:
        result = (SignedDiagram(EMPTY, 1), (0, 0))
        _CANON_CACHE[d] = result
        return result
    partner = d.partner_map()
    best = None
    signs = set()
    rotations = range(L) if L else range(1)
    for rotation in rotations:
        for eps in itertools.product((1, -1), repeat=T):
            tokens, better = _scan(L, T, partner, rotation, eps, best)
            if tokens is None:
                continue
            if best is None or better:
                best = tokens
                signs = {_sign_of(eps)}
            elif tokens == best:
                signs.add(_sign_of(eps))
    sign = 0 if (len(signs) == 2 or d.has_tadpole()) else signs.pop()
    canon = _rebuild(L, T, best)
    result = (SignedDiagram(canon, sign), (T, L) + best)
    _CANON_CACHE[d] = result
    # the canonical representative canonicalizes to itself with sign +1
    if canon != d:
        _CANON_CACHE.setdefault(
            canon, (SignedDiagram(canon, 0 if sign == 0 else 1), (T, L) + best))
    return result


def _rebuild(L: int, T: int, tokens) -> Diagram:
    sources = list(range(L))
    for v in range(T):
        sources.extend((L + 3 * v + 1, L + 3 * v + 2))
    edges = {tuple(sorted((s, t))) for s, t in zip(sources, tokens)}
    return Diagram(L, T, edges)


def canonicalize(d: Diagram) -> SignedDiagram:
    """Canonical representative of a diagram with its antisymmetry sign.

    Isomorphic inputs (circle rotations, vertex relabellings, cyclic slot
    rotations) map to the identical canonical diagram; each vertex whose
    cyclic order was reversed contributes a factor -1.  The sign is 0
    exactly when the value must vanish by antisymmetry.
    """
    return _canonicalize_full(d)[0]


def canonical_key(d: Diagram) -> tuple:
    """Total order key on isomorphism classes: (T, L, traversal code)."""
    return _canonicalize_full(d)[1]


def is_canonical(d: Diagram) -> bool:
    return canonicalize(d).diagram == d


# --------------------------------------------------------------------------
# linear combinations


class DiagramSum:
    """Formal rational linear combination of canonical diagrams.

    Keys are canonical; coefficients exact rationals; zero coefficients
    and sign-0 diagrams are dropped.  All stored keys share one degree.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Diagram, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for d, c in items:
                self.add(d, c)

    def add(self, d: Diagram, coeff) -> None:
        coeff = Fraction(coeff)
        if coeff == 0:
            return
        sd = canonicalize(d)
        if sd.sign == 0:
            return
        key = sd.diagram
        if self.terms:
            existing_degree = next(iter(self.terms)).degree
            if key.degree != existing_degree:
                raise ValueError("mixed degrees in a DiagramSum")
        v = self.terms.get(key, Fraction(0)) + sd.sign * coeff
        if v:
            self.terms[key] = v
        elif key in self.terms:
            del self.terms[key]

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, DiagramSum) and self.terms == other.terms

    def __add__(self, other):
        out = DiagramSum()
        out.terms = dict(self.terms)
        for d, c in other.terms.items():
            out.add(d, c)
        return out

    def __neg__(self):
        out = DiagramSum()
        out.terms = {d: -c for d, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        out = DiagramSum()
        if scalar:
            out.terms = {d: c * scalar for d, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def map_terms(self, fn: "callable") -> "DiagramSum":
        """Apply fn(diagram) -> DiagramSum linearly."""
        out = DiagramSum()
        for d, c in self.terms.items():
            for d2, c2 in fn(d).terms.items():
                out.add(d2, c * c2)
        return out

    def __repr__(self):
        if not self.terms:
            return "DiagramSum(0)"
        bits = [f"{c} * {serialize(d)}" for d, c in self.items()]
        return "DiagramSum(" + " + ".join(bits) + ")"


# --------------------------------------------------------------------------
# decomposition into connected components


@dataclass(frozen=True)
class Component:
    """A connected subdiagram and the circle positions of its legs."""

    diagram: Diagram
    leg_positions: tuple[int, ...]


@dataclass(frozen=True)
class DecompositionReport:
    components: tuple[Component, ...]
    overlapping: bool


def _interleaved(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """True if the two position sets cannot be separated into two arcs."""
    merged = sorted([(p, 0) for p in a] + [(p, 1) for p in b])
    labels = [w for _, w in merged]
    blocks = 1
    for i in range(1, len(labels)):
        if labels[i] != labels[i - 1]:
            blocks += 1
    if labels[0] == labels[-1] and blocks > 1:
        blocks -= 1  # cyclic wrap-around joins first and last block
    return blocks > 2


def decompose(d: Diagram) -> DecompositionReport:
    """Connected components of the dashed graph and the overlap flag.

    Two components overlap when their legs interleave on the circle, so
    that no arc of the circle contains all legs of one of them.
    """
    L = d.legs
    parent = list(range(L + d.vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def owner(ep):
        return ep if ep < L else L + (ep - L) // 3

    for a, b in d.edges:
        ra, rb = find(owner(a)), find(owner(b))
        if ra != rb:
            parent[ra] = rb

    groups: dict[int, dict] = {}
    for p in range(L):
        groups.setdefault(find(p), {"legs": [], "vertices": []})["legs"].append(p)
    for v in range(d.vertices):
        groups.setdefault(find(L + v), {"legs": [], "vertices": []})[
            "vertices"].append(v)

    components = []
    for root in sorted(groups, key=lambda r: min(groups[r]["legs"])):
        legs = sorted(groups[root]["legs"])
        verts = sorted(groups[root]["vertices"])
        leg_index = {p: i for i, p in enumerate(legs)}
        vert_index = {v: i for i, v in enumerate(verts)}
        nl = len(legs)

        def remap(ep):
            if ep < L:
                return leg_index[ep]
            v, s = divmod(ep - L, 3)
            return nl + 3 * vert_index[v] + s

        edges = [
            (remap(a), remap(b))
            for a, b in d.edges
            if find(owner(a)) == root
        ]
        sub = Diagram(nl, len(verts), edges)
        components.append(Component(sub, tuple(legs)))

    overlapping = any(
        _interleaved(c1.leg_positions, c2.leg_positions)
        for c1, c2 in itertools.combinations(components, 2)
    )
    return DecompositionReport(tuple(components), overlapping)


def component_multiset(d: Diagram) -> tuple:
    """Canonical forms of the connected components, as a sorted tuple."""
    return tuple(sorted(
        (canonical_key(c.diagram) for c in decompose(d).components)
    ))


# --------------------------------------------------------------------------
# product, isolated chords


def product(d1: Diagram, d2: Diagram) -> Diagram:
    """Juxtapose two diagrams: all legs of d2 after all legs of d1."""
    L1, T1 = d1.legs, d1.vertices
    L2, T2 = d2.legs, d2.vertices
    L = L1 + L2

    def remap(ep):
        if ep < L2:
            return L1 + ep
        v, s = divmod(ep - L2, 3)
        return L + 3 * (T1 + v) + s

    def remap1(ep):
        if ep < L1:
            return ep
        v, s = divmod(ep - L1, 3)
        return L + 3 * v + s

    edges = [(remap1(a), remap1(b)) for a, b in d1.edges]
    edges += [(remap(a), remap(b)) for a, b in d2.edges]
    return Diagram(L, T1 + T2, edges)


def product_all(ds) -> Diagram:
    out = EMPTY
    for d in ds:
        out = product(out, d)
    return out


def has_isolated_chord(d: Diagram) -> bool:
    """True if some chord joins two circle-adjacent legs."""
    L = d.legs
    for a, b in d.edges:
        if a < L and b < L:
            if (a + 1) % L == b or (b + 1) % L == a:
                return True
    return False


# --------------------------------------------------------------------------
# text serialization (one diagram per line)


def _endpoint_text(ep: int, L: int) -> str:
    if ep < L:
        return str(ep + 1)
    v, s = divmod(ep - L, 3)
    return f"V{v + 1}.{s + 1}"


def serialize(d: Diagram) -> str:
    """Text form: `L=<n> T=<m> <ep>-<ep> ...` with legs numbered 1..L."""
    parts = [f"L={d.legs}", f"T={d.vertices}"]
    parts.extend(
        f"{_endpoint_text(a, d.legs)}-{_endpoint_text(b, d.legs)}"
        for a, b in d.edges
    )
    return " ".join(parts)


def parse(text: str) -> Diagram:
    """Inverse of `serialize`."""
    fields = text.split()
    if len(fields) < 2 or not fields[0].startswith("L=") \
            or not fields[1].startswith("T="):
        raise ValueError(f"malformed diagram line: {text!r}")
    L = int(fields[0][2:])
    T = int(fields[1][2:])

    def endpoint(s: str) -> int:
        if s.startswith("V"):
            v, slot = s[1:].split(".")
            return L + 3 * (int(v) - 1) + (int(slot) - 1)
        return int(s) - 1

    edges = []
    for f in fields[2:]:
        a, b = f.split("-")
        edges.append((endpoint(a), endpoint(b)))
    return Diagram(L, T, edges)


# --------------------------------------------------------------------------
# diagram constructors and enumerations


def chord_diagram(pairs, n_legs: int | None = None) -> Diagram:
    """Chord diagram from a list of leg pairs (0-based positions)."""
    if n_legs is None:
        n_legs = 2 * len(pairs)
    return Diagram(n_legs, 0, pairs)


def _matchings(items: list):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, second in enumerate(rest):
        for m in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, second)] + m


_CHORD_CACHE: dict[int, list[Diagram]] = {}


def chord_diagrams(n: int) -> list[Diagram]:
    """All canonical chord diagrams of degree n, sorted."""
    if n in _CHORD_CACHE:
        return _CHORD_CACHE[n]
    found = {}
    for m in _matchings(list(range(2 * n))):
        c = canonicalize(Diagram(2 * n, 0, m)).diagram
        found[canonical_key(c)] = c
    out = [found[k] for k in sorted(found)]
    _CHORD_CACHE[n] = out
    return out


_ONE_VERTEX_CACHE: dict[int, list[Diagram]] = {}


def one_vertex_diagrams(n: int) -> list[Diagram]:
    """Canonical degree-n diagrams with exactly one internal vertex.

    These are the sources of the four-term relations: the two leg
    resolutions of the vertex must agree in the chord-diagram quotient.
    """
    if n in _ONE_VERTEX_CACHE:
        return _ONE_VERTEX_CACHE[n]
    L = 2 * n - 1
    found = {}
    if L >= 3:
        for positions in itertools.combinations(range(L), 3):
            rest = [p for p in range(L) if p not in positions]
            x, y, z = positions
            for slots in ((x, y, z), (x, z, y)):
                base = [(slots[s], L + s) for s in range(3)]
                for m in _matchings(rest):
                    sd = canonicalize(Diagram(L, 1, base + m))
                    if sd.sign == 0:
                        continue
                    found[canonical_key(sd.diagram)] = sd.diagram
    out = [found[k] for k in sorted(found)]
    _ONE_VERTEX_CACHE[n] = out
    return out


def _connected_multigraphs(T: int, E: int) -> list[tuple]:
    """Connected loopless multigraphs, max degree 3, up to isomorphism.

    Returned as sorted edge tuples on vertices 0..T-1.
    """
    if T == 1:
        return [()] if E == 0 else []
    pairs = list(itertools.combinations(range(T), 2))
    results = set()

    def canonical(edges: tuple) -> tuple:
        best = None
        for perm in itertools.permutations(range(T)):
            mapped = tuple(sorted(
                tuple(sorted((perm[a], perm[b]))) for a, b in edges))
            if best is None or mapped < best:
                best = mapped
        return best

    def connected(edges) -> bool:
        adj = {i: set() for i in range(T)}
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == T

    def rec(idx: int, remaining: int, deg: list, edges: list):
        if remaining == 0:
            t = tuple(edges)
            if connected(t):
                results.add(canonical(t))
            return
        if idx == len(pairs):
            return
        a, b = pairs[idx]
        cap = min(remaining, 3 - deg[a], 3 - deg[b])
        for mult in range(cap, -1, -1):
            deg[a] += mult
            deg[b] += mult
            rec(idx + 1, remaining - mult, deg, edges + [(a, b)] * mult)
            deg[a] -= mult
            deg[b] -= mult

    rec(0, E, [0] * T, [])
    return sorted(results)


def _multiset_sequences(counts: dict[int, int]):
    """All distinct sequences using each key `counts[k]` times."""
    total = sum(counts.values())
    seq: list[int] = []

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        for k in sorted(counts):
            if counts[k]:
                counts[k] -= 1
                seq.append(k)
                yield from rec()
                seq.pop()
                counts[k] += 1

    yield from rec()


def _rotation_minimal(seq: tuple) -> bool:
    return all(seq <= seq[i:] + seq[:i] for i in range(1, len(seq)))


def connected_diagrams(n: int, T: int) -> list[Diagram]:
    """Canonical connected degree-n diagrams with T internal vertices.

    Connected means the dashed graph is connected without using the
    circle; for n >= 2 this forces i-1 <= T <= 2n-2 and every leg edge
    to end on an internal vertex.
    """
    if n == 1:
        # the single chord is the only connected degree-1 diagram
        return [chord_diagram([(0, 1)])] if T == 0 else []
    E = 2 * T - n
    L = 2 * n - T
    if E < max(0, T - 1) or L < 1 or T < 1:
        return []
    found = {}
    for graph in _connected_multigraphs(T, E):
        deg = [0] * T
        for a, b in graph:
            deg[a] += 1
            deg[b] += 1
        free = {v: 3 - deg[v] for v in range(T)}
        if sum(free.values()) != L:
            continue
        for seq in _multiset_sequences(dict(free)):
            if not _rotation_minimal(seq):
                continue
            next_slot = [0] * T
            edges = []
            ok = True
            for a, b in graph:
                sa, sb = next_slot[a], next_slot[b]
                next_slot[a] += 1
                next_slot[b] += 1
                edges.append((L + 3 * a + sa, L + 3 * b + sb))
            for pos, v in enumerate(seq):
                s = next_slot[v]
                next_slot[v] += 1
                if s > 2:
                    ok = False
                    break
                edges.append((pos, L + 3 * v + s))
            if not ok:
                continue
            sd = canonicalize(Diagram(L, T, edges))
            if sd.sign == 0:
                continue
            found[canonical_key(sd.diagram)] = sd.diagram
    return [found[k] for k in sorted(found)]


def random_diagram(rng, deg: int, require_nonzero: bool = True) -> Diagram:
    """Random well-formed diagram of the given degree (seeded by rng)."""
    for _ in range(10000):
        T = rng.randrange(0, 2 * deg - 1) if deg else 0
        L = 2 * deg - T
        if L < 1 and deg:
            continue
        eps = list(range(L + 3 * T))
        rng.shuffle(eps)
        edges = [(eps[2 * i], eps[2 * i + 1]) for i in range(len(eps) // 2)]
        try:
            d = Diagram(L, T, edges)
        except ValueError:
            continue
        if require_nonzero and canonicalize(d).sign == 0:
            continue
        return d
    raise RuntimeError("failed to sample a diagram")
