"""Canonical bases of group factors.

A canonical basis at degree i lists first a set of connected diagrams
and then all products of connected elements of lower degrees (one per
multiset); together they are independent and span the reduced quotient.
Connected representatives are chosen deterministically: candidates are
enumerated by increasing internal-vertex count and, within one count,
by canonical code; the first diagrams independent of everything chosen
so far are taken.

Also here: coordinates in a basis, divisibility of diagrams, the valid
two-term sums of the diagram arithmetic, and validation of changes of
canonical basis (block structure and non-singularity).
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from fractions import Fraction

from . import diagrams as _diagrams_mod
from . import relations as _relations_mod
from .diagrams import (
    EMPTY,
    Diagram,
    canonicalize,
    component_multiset,
    connected_diagrams,
    decompose,
    has_isolated_chord,
    parse,
    product_all,
    serialize,
)
from .linalg import SparseEliminator, determinant, invert
from .relations import ihx, internal_edges, quotient_space, stu


@dataclass(frozen=True)
class BasisElement:
    degree: int
    index: int
    diagram: Diagram
    components: tuple  # sorted tuple of (degree, connected_index); () = unit

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    @property
    def composite(self) -> bool:
        return len(self.components) > 1

    def label(self) -> str:
        return f"r[{self.degree},{self.index + 1}]"


@dataclass(frozen=True)
class Coordinates:
    degree: int
    values: tuple[Fraction, ...]


class CanonicalBasis:
    """Per-degree ordered element lists, connected elements first."""

    def __init__(self, max_degree: int, by_degree: dict[int, list[BasisElement]],
                 residuals: dict[tuple[int, int], dict[int, Fraction]],
                 version: str):
        self.max_degree = max_degree
        self.by_degree = by_degree
        self.residuals = residuals  # (degree, index) -> quotient residual
        self.version = version
        self.reduced = True

    def elements(self, degree: int) -> list[BasisElement]:
        return self.by_degree[degree]

    def connected(self, degree: int) -> list[BasisElement]:
        return [e for e in self.by_degree[degree] if e.connected]

    def composites(self, degree: int) -> list[BasisElement]:
        return [e for e in self.by_degree[degree] if e.composite]

    def d(self, degree: int) -> int:
        return len(self.by_degree[degree])

    def d_hat(self, degree: int) -> int:
        return len(self.connected(degree))

    def element(self, degree: int, index: int) -> BasisElement:
        return self.by_degree[degree][index]


def _code_version() -> str:
    h = hashlib.sha256()
    for mod in (_diagrams_mod, _relations_mod):
        with open(mod.__file__, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()[:16]


def _connected_multisets(counts: dict[int, int], total: int) -> list[tuple]:
    """Multisets of (degree, index) pairs, >= 2 entries, degrees summing
    to `total`; counts[d] = number of connected elements at degree d."""
    items = [(d, i) for d in sorted(counts) for i in range(counts[d])]
    out: list[tuple] = []

    def rec(start: int, remaining: int, chosen: list):
        if remaining == 0:
            if len(chosen) >= 2:
                out.append(tuple(chosen))
            return
        for k in range(start, len(items)):
            deg = items[k][0]
            if deg > remaining:
                break
            chosen.append(items[k])
            rec(k, remaining - deg, chosen)
            chosen.pop()

    rec(0, total, [])
    return sorted(out)


def canonical_basis(max_degree: int) -> CanonicalBasis:
    """Build the canonical basis of the reduced quotient up to max_degree.

    Aborts with a diagnostic if the products of lower-degree connected
    elements fail to stay independent, or if connected candidates cannot
    fill the remaining dimensions -- either event would contradict the
    composition structure of the basis.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    by_degree: dict[int, list[BasisElement]] = {}
    residuals: dict[tuple[int, int], dict[int, Fraction]] = {}
    connected_counts: dict[int, int] = {}
    connected_diagram_of: dict[tuple[int, int], Diagram] = {}

    for i in range(max_degree + 1):
        if i == 0:
            by_degree[0] = [BasisElement(0, 0, EMPTY, ())]
            residuals[(0, 0)] = {0: Fraction(1)}
            continue
        if i == 1:
            by_degree[1] = []  # no framing-independent structures
            connected_counts[1] = 0
            continue
        space = quotient_space(i, True)
        target = space.dimension
        elim = SparseEliminator()

        composites = []
        for multiset in _connected_multisets(connected_counts, i):
            diag = canonicalize(product_all(
                connected_diagram_of[key] for key in multiset)).diagram
            res = space.residual(diag)
            if not elim.add_row(dict(res)):
                raise RuntimeError(
                    f"degree {i}: composite {multiset} is linearly dependent "
                    "on earlier products; canonical-basis composition fails")
            composites.append((multiset, diag, res))
        if len(composites) > target:
            raise RuntimeError(
                f"degree {i}: more composites ({len(composites)}) than "
                f"dimensions ({target})")

        picks: list[tuple[Diagram, dict]] = []
        quota = target - len(composites)
        T = max(1, i - 1)
        while len(picks) < quota and T <= 2 * i - 2:
            for cand in connected_diagrams(i, T):
                res = space.residual(cand)
                if elim.add_row(dict(res)):
                    picks.append((cand, res))
                    if len(picks) == quota:
                        break
            T += 1
        if len(picks) < quota:
            raise RuntimeError(
                f"degree {i}: found only {len(picks)} independent connected "
                f"diagrams, need {quota}")

        elements = []
        for idx, (diag, res) in enumerate(picks):
            elements.append(BasisElement(i, idx, diag, ((i, idx),)))
            residuals[(i, idx)] = res
            connected_diagram_of[(i, idx)] = diag
        for off, (multiset, diag, res) in enumerate(composites):
            idx = quota + off
            elements.append(BasisElement(i, idx, diag, multiset))
            residuals[(i, idx)] = res
        by_degree[i] = elements
        connected_counts[i] = quota

    body = _serialize_body(max_degree, by_degree)
    version = hashlib.sha256(
        (body + _code_version()).encode()).hexdigest()[:16]
    return CanonicalBasis(max_degree, by_degree, residuals, version)


_BASIS_CACHE: dict[int, CanonicalBasis] = {}


def shared_basis(max_degree: int) -> CanonicalBasis:
    if max_degree not in _BASIS_CACHE:
        _BASIS_CACHE[max_degree] = canonical_basis(max_degree)
    return _BASIS_CACHE[max_degree]


# --------------------------------------------------------------------------
# coordinates


def coordinates(d: Diagram, basis: CanonicalBasis) -> Coordinates:
    """Exact coordinates of a diagram in the basis at its degree.

    The result c satisfies: d - sum(c_j * element_j) lies in the span of
    the degree's relations (verified before returning).
    """
    i = d.degree
    if i > basis.max_degree:
        raise ValueError(f"degree {i} exceeds basis degree {basis.max_degree}")
    if has_isolated_chord(d):
        raise ValueError("diagram has an isolated chord; it is zero in the "
                         "reduced quotient spanned by the basis")
    space = quotient_space(i, True)
    target = space.residual(d)
    elems = basis.elements(i)
    cols = [basis.residuals[(i, e.index)] for e in elems]
    support = sorted(set(target) | {c for col in cols for c in col})
    matrix = [[col.get(s, Fraction(0)) for col in cols] for s in support]
    rhs = [target.get(s, Fraction(0)) for s in support]
    from .linalg import solve_dense

    if not elems:
        if any(rhs):
            raise RuntimeError("nonzero class with an empty basis")
        return Coordinates(i, ())
    sol = solve_dense(matrix, rhs)
    if sol is None:
        raise RuntimeError("diagram class not in the basis span; the basis "
                           "construction is inconsistent")
    # exactness check: the residual of the difference must vanish
    combo = dict(space.residual(d))
    for c, col in zip(sol, cols):
        for s, v in col.items():
            w = combo.get(s, Fraction(0)) - c * v
            if w:
                combo[s] = w
            elif s in combo:
                del combo[s]
    if combo:
        raise RuntimeError("coordinate verification failed")
    return Coordinates(i, tuple(sol))


# --------------------------------------------------------------------------
# diagram arithmetic: divisibility and valid sums


def divides(d1: Diagram, d2: Diagram) -> bool:
    """True if d1's connected components embed in d2's (as multisets)."""
    from collections import Counter

    c1 = Counter(component_multiset(d1))
    c2 = Counter(component_multiset(d2))
    return all(c2[k] >= v for k, v in c1.items())


def _leg_swap(d: Diagram, p: int, q: int) -> Diagram:
    sigma = {p: q, q: p}
    return Diagram(d.legs, d.vertices,
                   [(sigma.get(a, a), sigma.get(b, b)) for a, b in d.edges])


def _stu_mates(d: Diagram) -> set[Diagram]:
    """Diagrams appearing with d in some STU relation."""
    out: set[Diagram] = set()
    L = d.legs
    # resolutions of d (d as the vertex term)
    for a, b in d.edges:
        if a < L <= b:
            leg, v = a, (b - L) // 3
        elif b < L <= a:
            leg, v = b, (a - L) // 3
        else:
            continue
        for term in stu(d, v, leg).terms:
            out.add(term)
    # adjacent-leg transpositions (d as one of the two resolved terms)
    for p in range(L):
        q = (p + 1) % L
        if p != q:
            sd = canonicalize(_leg_swap(d, p, q))
            if sd.sign != 0:
                out.add(sd.diagram)
    return out


def _ihx_mates(d: Diagram) -> set[Diagram]:
    """Diagrams appearing with d in some IHX relation."""
    out: set[Diagram] = set()
    for e in internal_edges(d):
        for term in ihx(d, e).terms:
            out.add(term)
    return out


def _valid_sum_connected(c1: Diagram, c2: Diagram) -> bool:
    if c1 == c2:
        return False
    if c2 in _stu_mates(c1) or c1 in _stu_mates(c2):
        return True
    if c2 in _ihx_mates(c1) or c1 in _ihx_mates(c2):
        return True
    return False


def is_valid_sum(d1: Diagram, d2: Diagram) -> bool:
    """Whether d1 +/- d2 is interpretable as a single diagram.

    True exactly when the two diagrams have equal degree, the same
    number of components (valid combinations conserve the component
    count, so connected and disconnected diagrams never mix), and
    either they appear together in some STU or IHX relation, or they
    are non-overlapping and differ in a single component with the
    differing components so related.
    """
    s1, s2 = canonicalize(d1), canonicalize(d2)
    if s1.diagram.degree != s2.diagram.degree:
        return False
    if s1.diagram == s2.diagram:
        return False
    r1, r2 = decompose(s1.diagram), decompose(s2.diagram)
    if len(r1.components) != len(r2.components):
        return False
    if _valid_sum_connected(s1.diagram, s2.diagram):
        return True
    if len(r1.components) == 1 or r1.overlapping or r2.overlapping:
        return False
    from collections import Counter

    m1 = Counter(canonicalize(c.diagram).diagram for c in r1.components)
    m2 = Counter(canonicalize(c.diagram).diagram for c in r2.components)
    only1 = list((m1 - m2).elements())
    only2 = list((m2 - m1).elements())
    if len(only1) != 1 or len(only2) != 1:
        return False
    return _valid_sum_connected(only1[0], only2[0])


# --------------------------------------------------------------------------
# changes of canonical basis


@dataclass(frozen=True)
class BasisChangeMatrix:
    """Change of basis at one degree, connected-first ordering.

    Column j expands the new element j in the old basis; the leading
    d-hat columns/rows are the connected block.
    """

    degree: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, degree: int, rows) -> "BasisChangeMatrix":
        return cls(degree, tuple(tuple(Fraction(v) for v in r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class BasisChangeReport:
    degree: int
    valid: bool
    reasons: tuple[str, ...]
    det: Fraction
    det_connected: Fraction | None
    det_composite: Fraction | None
    alpha_transform: tuple[tuple[Fraction, ...], ...] | None


def validate_basis_change(m: BasisChangeMatrix, basis: CanonicalBasis,
                          degree: int) -> BasisChangeReport:
    """Check a proposed change of canonical basis at one degree.

    Valid changes never mix connected and composite elements (both
    off-diagonal blocks vanish) and must be non-singular; the report
    carries the contravariant transformation of the geometric factors
    (the inverse matrix) when valid.
    """
    d_i = basis.d(degree)
    dhat = basis.d_hat(degree)
    rows = [list(r) for r in m.entries]
    if len(rows) != d_i or any(len(r) != d_i for r in rows):
        raise ValueError(f"matrix must be {d_i}x{d_i} at degree {degree}")
    reasons = []
    block_b = [rows[i][j] for i in range(dhat) for j in range(dhat, d_i)]
    block_c = [rows[i][j] for i in range(dhat, d_i) for j in range(dhat)]
    if any(v != 0 for v in block_b):
        reasons.append("connected block leaks into composite columns (B != 0)")
    if any(v != 0 for v in block_c):
        reasons.append("composite block leaks into connected columns (C != 0)")
    det = determinant(rows)
    if det == 0:
        reasons.append("matrix is singular")
    det_a = det_d = None
    alpha_transform = None
    if not reasons:
        a_block = [r[:dhat] for r in rows[:dhat]]
        d_block = [r[dhat:] for r in rows[dhat:]]
        det_a = determinant(a_block) if dhat else Fraction(1)
        det_d = determinant(d_block) if d_i > dhat else Fraction(1)
        assert det == det_a * det_d
        inv = invert(rows)
        # the inverse of a valid change is block diagonal as well
        for i in range(dhat):
            for j in range(dhat, d_i):
                assert inv[i][j] == 0 and inv[j][i] == 0
        alpha_transform = tuple(tuple(r) for r in inv)
    return BasisChangeReport(degree, not reasons, tuple(reasons), det,
                             det_a, det_d, alpha_transform)


def transform_alphas(report: BasisChangeReport,
                     alphas: list[Fraction]) -> list[Fraction]:
    """Contravariant transport of geometric factors under a valid change."""
    if not report.valid:
        raise ValueError("cannot transform along an invalid basis change")
    inv = report.alpha_transform
    n = len(inv)
    if len(alphas) != n:
        raise ValueError("coefficient vector has the wrong length")
    return [sum((inv[j][k] * alphas[k] for k in range(n)), Fraction(0))
            for j in range(n)]


# --------------------------------------------------------------------------
# plain-text basis cache


def _serialize_body(max_degree: int, by_degree: dict[int, list[BasisElement]]) -> str:
    lines = [f"reduced: true", f"max-degree: {max_degree}"]
    for i in range(max_degree + 1):
        elems = by_degree[i]
        dhat = sum(1 for e in elems if e.connected)
        lines.append(f"degree {i}: d={len(elems)} dhat={dhat}")
        for e in elems:
            kind = ("unit" if not e.components
                    else "connected" if e.connected else "composite")
            comps = " ".join(f"{a}.{b}" for a, b in e.components)
            lines.append(f"element {i} {e.index}: {kind} | {comps} | "
                         f"{serialize(e.diagram)}")
    return "\n".join(lines) + "\n"


def save_basis(basis: CanonicalBasis, path: str) -> None:
    """Write the plain-text cache file (stable across runs)."""
    body = _serialize_body(basis.max_degree, basis.by_degree)
    checksum = hashlib.sha256(body.encode()).hexdigest()[:16]
    with open(path, "w") as fh:
        fh.write("# canonical basis cache\n")
        fh.write("format: 1\n")
        fh.write(f"code-version: {_code_version()}\n")
        fh.write(f"version: {basis.version}\n")
        fh.write(body)
        fh.write(f"checksum: {checksum}\n")


def load_basis(path: str) -> CanonicalBasis:
    """Load and verify a cache file; stale or corrupt caches are rejected."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != "# canonical basis cache":
        raise ValueError(f"{path}: not a basis cache file")
    header = {}
    idx = 1
    for idx in range(1, len(lines)):
        if lines[idx].startswith(("format:", "code-version:", "version:")):
            k, v = lines[idx].split(":", 1)
            header[k] = v.strip()
        else:
            break
    body_lines = [ln for ln in lines[idx:] if not ln.startswith("checksum:")]
    checksum_lines = [ln for ln in lines if ln.startswith("checksum:")]
    body = "\n".join(body_lines) + "\n"
    if header.get("format") != "1":
        raise ValueError(f"{path}: unsupported cache format")
    if header.get("code-version") != _code_version():
        raise ValueError(f"{path}: cache written by a different code version; "
                         "rebuild the basis")
    if not checksum_lines or checksum_lines[0].split(":", 1)[1].strip() != \
            hashlib.sha256(body.encode()).hexdigest()[:16]:
        raise ValueError(f"{path}: checksum mismatch, cache is corrupt")

    by_degree: dict[int, list[BasisElement]] = {}
    max_degree = 0
    for ln in body_lines:
        if ln.startswith("max-degree:"):
            max_degree = int(ln.split(":")[1])
            for i in range(max_degree + 1):
                by_degree.setdefault(i, [])
        elif ln.startswith("element"):
            head, kind, comps, diag = _split_element(ln)
            _, deg_s, idx_s = head.split()
            deg, eidx = int(deg_s), int(idx_s)
            components = tuple(
                tuple(map(int, c.split("."))) for c in comps.split()) \
                if comps else ()
            by_degree[deg].append(
                BasisElement(deg, eidx, parse(diag), components))
    residuals = {}
    for i, elems in by_degree.items():
        space = quotient_space(i, True) if elems else None
        for e in elems:
            residuals[(i, e.index)] = space.residual(e.diagram)
    version = header.get("version", "")
    return CanonicalBasis(max_degree, by_degree, residuals, version)


def _split_element(ln: str):
    head, rest = ln.split(":", 1)
    kind, comps, diag = [p.strip() for p in rest.split("|", 2)]
    return head.strip(), kind, comps, diag


def basis_cache_path(cache_dir: str, max_degree: int) -> str:
    return os.path.join(cache_dir, f"basis-deg{max_degree}.txt")


def cached_basis(max_degree: int, cache_dir: str | None) -> CanonicalBasis:
    """Load the basis from the cache directory, else build and store it."""
    if cache_dir is None:
        return shared_basis(max_degree)
    os.makedirs(cache_dir, exist_ok=True)
    path = basis_cache_path(cache_dir, max_degree)
    if os.path.exists(path):
        return load_basis(path)
    basis = canonical_basis(max_degree)
    save_basis(basis, path)
    return basis
