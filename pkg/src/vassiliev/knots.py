"""Knot diagrams and polynomial invariants.

Planar diagrams use the standard PD convention: crossing X(a,b,c,d)
lists the four incident arcs counterclockwise starting at the incoming
under-strand arc; arcs are numbered sequentially along the oriented
knot, so the under-strand runs a -> c and the crossing is positive when
the over-strand runs d -> b (i.e. b follows d).

Invariants:
  * kauffman_bracket / jones -- full state sum over the 2^n smoothings,
    writhe-corrected and normalized to 1 on the unknot;
  * homfly -- skein recursion (a P+ - a^{-1} P- = z P0, unknot = 1)
    toward descending diagrams, memoized on a canonical diagram code;
  * sun_slice -- the su(N) one-variable specialization a = q^N,
    z = q - q^{-1}; at N = 2 it recovers jones with t = q^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import Laurent1, Laurent2


class BudgetExceededError(RuntimeError):
    """Raised when a skein computation exceeds the crossing budget."""


HOMFLY_CROSSING_BUDGET = 10


# --------------------------------------------------------------------------
# planar diagrams


class PlanarDiagram:
    """A knot/link diagram as a list of PD crossings plus free loops."""

    __slots__ = ("crossings", "loops", "_signs")

    def __init__(self, crossings, loops: int = 0, signs=None):
        self.crossings = tuple(tuple(int(x) for x in c) for c in crossings)
        self.loops = int(loops)
        if not self.crossings and self.loops == 0:
            self.loops = 1  # the empty PD denotes the unknot
        if signs is not None:
            signs = tuple(int(s) for s in signs)
            if len(signs) != len(self.crossings) or \
                    any(s not in (1, -1) for s in signs):
                raise ValueError("signs must be +-1, one per crossing")
        self._signs = signs
        self._validate()

    def _validate(self) -> None:
        counts: dict[int, int] = {}
        for c in self.crossings:
            if len(c) != 4:
                raise ValueError(f"crossing {c} must have four arcs")
            for a in c:
                counts[a] = counts.get(a, 0) + 1
        n = len(self.crossings)
        if self.crossings:
            expected = set(range(1, 2 * n + 1))
            if set(counts) != expected or any(v != 2 for v in counts.values()):
                raise ValueError("arcs must be 1..2n, each appearing twice")
        self.signs()  # force sign determination (fails on malformed input)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def signs(self) -> tuple[int, ...]:
        """Crossing signs derived from the sequential arc numbering."""
        if self._signs is not None:
            return self._signs
        n2 = 2 * len(self.crossings)

        def follows(x, y):  # x == y + 1 cyclically
            return x == (y % n2) + 1

        out = []
        for (a, b, c, d) in self.crossings:
            pos, neg = follows(b, d), follows(d, b)
            if pos and neg:
                # only possible on a one-crossing curl: the over strand
                # shares an arc with the under strand on one side
                if b == a:
                    out.append(1)
                elif d == a:
                    out.append(-1)
                else:
                    raise ValueError(
                        f"crossing X({a},{b},{c},{d}): ambiguous "
                        "over-strand direction")
            elif pos:
                out.append(1)
            elif neg:
                out.append(-1)
            else:
                raise ValueError(
                    f"crossing X({a},{b},{c},{d}): over-strand direction "
                    "is not consistent with sequential numbering")
        self._signs = tuple(out)
        return self._signs

    def writhe(self) -> int:
        return sum(self.signs())

    def mirror(self) -> "PlanarDiagram":
        """Reflected diagram: corner order reversed, under-in kept."""
        signs = None if self._signs is None else tuple(-s for s in self._signs)
        return PlanarDiagram([(a, d, c, b) for (a, b, c, d) in self.crossings],
                             self.loops, signs)

    def __eq__(self, other):
        return (isinstance(other, PlanarDiagram)
                and self.crossings == other.crossings
                and self.loops == other.loops)

    def __hash__(self):
        return hash((self.crossings, self.loops))

    def __repr__(self):
        return f"PlanarDiagram({pd_to_text(self)!r})"


def pd_to_text(pd: PlanarDiagram) -> str:
    if not pd.crossings:
        return "unknot"
    return " ".join(f"X({a},{b},{c},{d})" for (a, b, c, d) in pd.crossings)


def parse_pd(text: str) -> PlanarDiagram:
    """Parse `X(a,b,c,d) X(...) ...` (commas between crossings allowed)."""
    text = text.strip()
    if text.lower() in ("unknot", "0_1", ""):
        return PlanarDiagram([], 1)
    crossings = []
    for chunk in text.replace("),", ") ").split():
        chunk = chunk.strip().rstrip(",")
        if not chunk:
            continue
        if not (chunk.startswith("X(") and chunk.endswith(")")):
            raise ValueError(f"malformed PD crossing: {chunk!r}")
        nums = chunk[2:-1].split(",")
        if len(nums) != 4:
            raise ValueError(f"malformed PD crossing: {chunk!r}")
        crossings.append(tuple(int(x) for x in nums))
    return PlanarDiagram(crossings)


@dataclass(frozen=True)
class BraidWord:
    """Signed generator word in the braid group on `strands` strands."""

    strands: int
    letters: tuple[int, ...]

    def __init__(self, strands: int, letters):
        letters = tuple(int(x) for x in letters)
        if strands < 1:
            raise ValueError("need at least one strand")
        for x in letters:
            if x == 0 or abs(x) >= strands:
                raise ValueError(f"braid letter {x} out of range for "
                                 f"{strands} strands")
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "letters", letters)


# --------------------------------------------------------------------------
# Kauffman bracket and Jones


def _bracket_loops(pd: PlanarDiagram, state: int) -> int:
    """Loop count for one smoothing state (bit k = B-smoothing at k)."""
    n = len(pd.crossings)
    parent = list(range(4 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    ends: dict[int, list[int]] = {}
    for k, c in enumerate(pd.crossings):
        for p, arc in enumerate(c):
            ends.setdefault(arc, []).append(4 * k + p)
        if (state >> k) & 1:  # B: join corners (0,3) and (1,2)
            union(4 * k, 4 * k + 3)
            union(4 * k + 1, 4 * k + 2)
        else:  # A: join corners (0,1) and (2,3)
            union(4 * k, 4 * k + 1)
            union(4 * k + 2, 4 * k + 3)
    for pair in ends.values():
        union(pair[0], pair[1])
    return len({find(x) for x in range(4 * n)})


def kauffman_bracket(pd: PlanarDiagram) -> Laurent1:
    """Normalized bracket: state sum with <unknot> = 1 (variable A)."""
    n = len(pd.crossings)
    if n == 0:
        loops = pd.loops
        delta = Laurent1({2: -1, -2: -1}, var="A")
        return delta ** (loops - 1)
    delta = Laurent1({2: -1, -2: -1}, var="A")
    total = Laurent1.zero(var="A")
    for state in range(1 << n):
        b_count = bin(state).count("1")
        loops = _bracket_loops(pd, state) + pd.loops
        term = Laurent1.term(1, n - 2 * b_count, var="A") * (delta ** (loops - 1))
        total = total + term
    return total


def jones(pd: PlanarDiagram) -> Laurent1:
    """Jones polynomial in t, unknot-normalized, writhe-corrected."""
    bracket = kauffman_bracket(pd)
    w = pd.writhe()
    # multiply by (-A^3)^(-w)
    corr = Laurent1.term((-1) ** w, -3 * w, var="A")
    f = bracket * corr
    out = {}
    for e, coeff in f.coeffs.items():
        if e % 4:
            raise ValueError("normalized bracket has a non-quartic exponent")
        out[-e // 4] = coeff
    return Laurent1(out, var="t")


# --------------------------------------------------------------------------
# oriented diagram state for the skein recursion


def _in_ports(sign: int) -> tuple[int, int]:
    return (0, 3 if sign > 0 else 1)


def _over_in(sign: int) -> int:
    return 3 if sign > 0 else 1


def _diag_exit(port: int) -> int:
    return {0: 2, 2: 0, 1: 3, 3: 1}[port]


class _OrientedState:
    """Link diagram as signed crossings plus a port wiring.

    Ports 0..3 counterclockwise with 0 = under-in; the over strand runs
    3 -> 1 on positive and 1 -> 3 on negative crossings.  Arcs pair an
    out-port with an in-port.
    """

    __slots__ = ("signs", "wiring", "loops")

    def __init__(self, signs: dict, wiring: dict, loops: int):
        self.signs = signs  # crossing id -> +-1
        self.wiring = wiring  # (id, port) -> (id, port), symmetric
        self.loops = loops

    @classmethod
    def from_planar(cls, pd: PlanarDiagram) -> "_OrientedState":
        signs = {k: s for k, s in enumerate(pd.signs())}
        ends: dict[int, list[tuple[int, int]]] = {}
        for k, c in enumerate(pd.crossings):
            for p, arc in enumerate(c):
                ends.setdefault(arc, []).append((k, p))
        wiring = {}
        for pair in ends.values():
            x, y = pair
            wiring[x] = y
            wiring[y] = x
        return cls(signs, wiring, pd.loops)

    def out_ports(self):
        return sorted(
            (k, p) for k, s in self.signs.items()
            for p in (2, 1 if s > 0 else 3))

    def _walk_components(self):
        """Yield components as lists of (crossing, in_port) arrivals."""
        seen_out = set()
        for start in self.out_ports():
            if start in seen_out:
                continue
            comp = []
            cur = start
            while True:
                seen_out.add(cur)
                dst = self.wiring[cur]
                comp.append(dst)
                k, p = dst
                nxt = (k, _diag_exit(p))
                if nxt == start:
                    break
                cur = nxt
            yield comp

    def component_count(self) -> int:
        return sum(1 for _ in self._walk_components()) + self.loops

    def first_bad_crossing(self):
        """First crossing reached on its under strand before any other
        visit, along the deterministic walk; None if descending."""
        visited = set()
        for comp in self._walk_components():
            for (k, p) in comp:
                if k not in visited:
                    visited.add(k)
                    if p == 0:  # arrived on the under strand first
                        return k
        return None

    def switched(self, k: int) -> "_OrientedState":
        """Same diagram with crossing k switched."""
        shift = _over_in(self.signs[k])
        signs = dict(self.signs)
        signs[k] = -signs[k]

        def relabel(ep):
            if ep[0] == k:
                return (k, (ep[1] - shift) % 4)
            return ep

        wiring = {relabel(a): relabel(b) for a, b in self.wiring.items()}
        return _OrientedState(signs, wiring, self.loops)

    def smoothed(self, k: int) -> "_OrientedState":
        """Oriented smoothing of crossing k (the P0 term).

        The four ports are rejoined pairwise; strands thread through the
        junctions and any arcs of the diagram that connect two ports of
        k itself (curls), so external arc ends pair up correctly and
        fully internal circuits become free loops.
        """
        sign = self.signs[k]
        junction = {0: 1, 1: 0, 2: 3, 3: 2} if sign > 0 else \
                   {0: 3, 3: 0, 1: 2, 2: 1}
        signs = {c: s for c, s in self.signs.items() if c != k}
        wiring = {a: b for a, b in self.wiring.items()
                  if a[0] != k and b[0] != k}
        loops = self.loops
        external = {}
        internal = {}
        for p in range(4):
            far = self.wiring[(k, p)]
            if far[0] == k:
                internal[p] = far[1]
            else:
                external[p] = far
        visited = set()
        for p in sorted(external):
            if p in visited:
                continue
            visited.add(p)
            q = junction[p]
            visited.add(q)
            while q in internal:
                q = internal[q]
                visited.add(q)
                q = junction[q]
                visited.add(q)
            a, b = external[p], external[q]
            wiring[a] = b
            wiring[b] = a
        remaining = set(range(4)) - visited
        while remaining:
            start = remaining.pop()
            q = start
            while True:
                q = junction[q]
                remaining.discard(q)
                q = internal[q]
                remaining.discard(q)
                if q == start:
                    break
            loops += 1
        return _OrientedState(signs, wiring, loops)

    def canonical_code(self) -> tuple:
        """Label-independent code: minimum over walk starting points."""
        outs = self.out_ports()
        if not outs:
            return ("loops", self.loops)
        best = None
        for start in outs:
            code = self._trace_code(start)
            if best is None or code < best:
                best = code
        return best + ("loops", self.loops)

    def _trace_code(self, start) -> tuple:
        disc: dict[int, int] = {}
        tokens: list = []
        seen_out = set()

        def trace_from(s):
            cur = s
            while True:
                seen_out.add(cur)
                k, p = self.wiring[cur]
                if k not in disc:
                    disc[k] = len(disc)
                    tokens.append(("n", self.signs[k], p))
                else:
                    tokens.append(("o", disc[k], p))
                nxt = (k, _diag_exit(p))
                if nxt == s:
                    return
                cur = nxt

        trace_from(start)
        # subsequent components: start from the smallest unvisited
        # out-port of already-discovered crossings
        while True:
            cands = [
                (disc[k], pp) for (k, pp) in self.out_ports()
                if k in disc and (k, pp) not in seen_out]
            if cands:
                d_id, pp = min(cands)
                k = next(kk for kk, nn in disc.items() if nn == d_id)
                tokens.append(("c", d_id, pp))
                trace_from((k, pp))
                continue
            remaining = [x for x in self.out_ports() if x not in seen_out]
            if not remaining:
                return tuple(tokens)
            # split component: minimize over all possible entry points
            best_tail = None
            state = (dict(disc), list(tokens), set(seen_out))
            for cand in remaining:
                disc2, tokens2, seen2 = (dict(state[0]), list(state[1]),
                                         set(state[2]))
                disc, tokens, seen_out = disc2, tokens2, seen2
                tokens.append(("s",))
                trace_from(cand)
                tail = self._finish_code(disc, tokens, seen_out)
                if best_tail is None or tail < best_tail:
                    best_tail = tail
            return best_tail

    def _finish_code(self, disc, tokens, seen_out) -> tuple:
        while True:
            cands = [
                (disc[k], pp) for (k, pp) in self.out_ports()
                if k in disc and (k, pp) not in seen_out]
            if not cands:
                break
            d_id, pp = min(cands)
            k = next(kk for kk, nn in disc.items() if nn == d_id)
            tokens.append(("c", d_id, pp))
            cur = (k, pp)
            while True:
                seen_out.add(cur)
                kk, p = self.wiring[cur]
                if kk not in disc:
                    disc[kk] = len(disc)
                    tokens.append(("n", self.signs[kk], p))
                else:
                    tokens.append(("o", disc[kk], p))
                nxt = (kk, _diag_exit(p))
                if nxt == (k, pp):
                    break
                cur = nxt
        remaining = [x for x in self.out_ports() if x not in seen_out]
        if remaining:
            # nested split; handled recursively via the same minimization
            best = None
            for cand in remaining:
                disc2, tokens2, seen2 = dict(disc), list(tokens), set(seen_out)
                tokens2.append(("s",))
                cur = cand
                while True:
                    seen2.add(cur)
                    kk, p = self.wiring[cur]
                    if kk not in disc2:
                        disc2[kk] = len(disc2)
                        tokens2.append(("n", self.signs[kk], p))
                    else:
                        tokens2.append(("o", disc2[kk], p))
                    nxt = (kk, _diag_exit(p))
                    if nxt == cand:
                        break
                    cur = nxt
                tail = self._finish_code(disc2, tokens2, seen2)
                if best is None or tail < best:
                    best = tail
            return best
        return tuple(tokens)

    def to_planar(self) -> PlanarDiagram:
        """Retrace into sequential PD form (components in walk order)."""
        arcs: dict[tuple[int, int], int] = {}  # in-port -> arc label
        label = 0
        for comp in self._walk_components():
            first = None
            for (k, p) in comp:
                label += 1
                arcs[(k, p)] = label
                if first is None:
                    first = (k, p)
        crossings = []
        signs = []
        for k in sorted(self.signs):
            row = []
            for p in range(4):
                if (k, p) in arcs:
                    row.append(arcs[(k, p)])
                else:
                    # out-port: the label of the arc leaving here is the
                    # one arriving at the wired partner
                    row.append(arcs[self.wiring[(k, p)]])
            crossings.append(tuple(row))
            signs.append(self.signs[k])
        return PlanarDiagram(crossings, self.loops, tuple(signs))


# --------------------------------------------------------------------------
# HOMFLY


_A = Laurent2.term(1, 1, 0)
_AINV = Laurent2.term(1, -1, 0)
_Z = Laurent2.term(1, 0, 1)
_DELTA = Laurent2({(-1, -1): 1, (1, -1): -1})  # (1/a - a)/z

_HOMFLY_MEMO: dict[tuple, Laurent2] = {}


def _homfly_state(state: _OrientedState) -> Laurent2:
    code = state.canonical_code()
    cached = _HOMFLY_MEMO.get(code)
    if cached is not None:
        return cached
    bad = state.first_bad_crossing()
    if bad is None:
        comps = state.component_count()
        val = _DELTA ** (comps - 1) if comps > 1 else Laurent2.one()
    else:
        sign = state.signs[bad]
        switched = _homfly_state(state.switched(bad))
        smoothed = _homfly_state(state.smoothed(bad))
        if sign > 0:
            # a^-1 P+ - a P- = z P0  =>  P+ = a^2 P- + a z P0
            val = _A * _A * switched + _A * _Z * smoothed
        else:
            val = _AINV * _AINV * switched - _AINV * _Z * smoothed
    _HOMFLY_MEMO[code] = val
    return val


def homfly(knot: "PlanarDiagram | BraidWord") -> Laurent2:
    """Skein polynomial in (a, z): a^{-1} P+ - a P- = z P0, unknot 1."""
    if isinstance(knot, BraidWord):
        knot = braid_closure(knot)
    if knot.n_crossings > HOMFLY_CROSSING_BUDGET:
        raise BudgetExceededError(
            f"{knot.n_crossings} crossings exceed the skein budget of "
            f"{HOMFLY_CROSSING_BUDGET}")
    return _homfly_state(_OrientedState.from_planar(knot))


def sun_slice(h: Laurent2, n: int) -> Laurent1:
    """su(N) fundamental one-variable slice: a = q^n, z = q - q^{-1}."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    q_n = Laurent1({n: 1}, var="q")
    z = Laurent1({1: 1, -1: -1}, var="q")
    return h.substitute(q_n, z)


# --------------------------------------------------------------------------
# diagram surgery


def connected_sum(k1: PlanarDiagram, k2: PlanarDiagram) -> PlanarDiagram:
    """Splice two knot diagrams along one arc of each."""
    if k1.n_crossings == 0:
        return k2
    if k2.n_crossings == 0:
        return k1
    s1 = _OrientedState.from_planar(k1)
    s2 = _OrientedState.from_planar(k2)
    off = max(s1.signs) + 1
    signs = dict(s1.signs)
    wiring = dict(s1.wiring)
    for k, s in s2.signs.items():
        signs[k + off] = s
    for (ka, pa), (kb, pb) in s2.wiring.items():
        wiring[(ka + off, pa)] = (kb + off, pb)
    # cut arc 1 of each knot (out-port -> in-port) and cross-join
    def arc_ends(state, offset):
        for comp in state._walk_components():
            k, p = comp[0]
            dst = (k + offset, p)
            # the out-port wired to this in-port:
            src = state.wiring[(k, p)]
            return (src[0] + offset, src[1]), dst
        raise ValueError("knot has no arcs")

    out1, in1 = arc_ends(s1, 0)
    out2, in2 = arc_ends(s2, off)
    wiring[out1] = in2
    wiring[in2] = out1
    wiring[out2] = in1
    wiring[in1] = out2
    merged = _OrientedState(signs, wiring, k1.loops + k2.loops - 2
                            if k1.loops and k2.loops else k1.loops + k2.loops)
    return merged.to_planar()


# --------------------------------------------------------------------------
# knot determinant (label validation for the bundled table)


def determinant(pd: PlanarDiagram) -> int:
    """|V(-1)|, the knot determinant."""
    v = jones(pd)(Fraction(-1))
    if v.denominator != 1:
        raise AssertionError("determinant must be an integer")
    return abs(int(v))


# --------------------------------------------------------------------------
# rational (two-bridge) knots


def _splice_pseudo(edges):
    """Resolve pseudo nodes: wiring between real ports + free loop count."""
    from collections import defaultdict

    adj = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    wiring = {}
    seen_real = set()
    for tok in sorted(adj, key=repr):
        if tok[0] == "p" or tok in seen_real:
            continue
        prev, cur = tok, adj[tok][0]
        while cur[0] == "p":
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        wiring[tok] = cur
        wiring[cur] = tok
        seen_real.add(tok)
        seen_real.add(cur)
    # pure pseudo cycles are free unknot components
    loops = 0
    visited = set()
    for tok in adj:
        if tok[0] != "p" or tok in visited:
            continue
        stack = [tok]
        comp = set()
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(y for y in adj[x] if y[0] == "p")
        if all(y[0] == "p" for x in comp for y in adj[x]):
            loops += 1
        visited |= comp
    return wiring, loops


def _orient_unoriented(under_diag: dict, wiring: dict, loops: int) -> PlanarDiagram:
    """Trace an unoriented 4-valent wiring, fix crossing signs, emit PD."""
    entry: dict[tuple[int, int], int] = {}  # (crossing, diagonal) -> entry port
    arcs = {frozenset((a, b)) for a, b in wiring.items()}
    visited = set()
    for start_arc in sorted(arcs, key=repr):
        if start_arc in visited:
            continue
        a, b = sorted(start_arc, key=repr)
        cur, dst = a, b
        while True:
            visited.add(frozenset((cur, dst)))
            k, p = dst
            diag = p % 2
            if (k, diag) in entry:
                raise ValueError("inconsistent strand orientation")
            entry[(k, diag)] = p
            exit_port = _diag_exit(p)
            cur = (k, exit_port)
            dst = wiring[cur]
            if frozenset((cur, dst)) in visited:
                break
    signs = {}
    relabeled = {}

    def relabel(ep):
        k, p = ep
        return (k, (p - entry[(k, under_diag[k] % 2)]) % 4)

    for k, ud in under_diag.items():
        under_in = entry[(k, ud % 2)]
        over_in = entry[(k, (ud + 1) % 2)]
        signs[k] = 1 if (over_in - under_in) % 4 == 3 else -1
    for a, b in wiring.items():
        relabeled[relabel(a)] = relabel(b)
    return _OrientedState(signs, relabeled, loops).to_planar()


# handedness of the twist crossings (which diagonal passes under);
# equal values keep the alternation of the standard rational form
_EAST_HAND = 0
_SOUTH_HAND = 0


def rational_knot(code) -> PlanarDiagram:
    """Alternating rational knot from a positive continued-fraction code.

    The code [c1, c2, ..., cm] denotes the two-bridge knot with fraction
    c1 + 1/(c2 + 1/(... + 1/cm)); the diagram is the standard
    alternating one with sum(code) crossings (c1 horizontal twists, c2
    vertical, alternating), closed with the numerator closure.
    """
    code = [int(c) for c in code]
    if not code or any(c < 1 for c in code):
        raise ValueError("continued-fraction code must be positive integers")
    counter = [0]

    def pseudo():
        counter[0] += 1
        return ("p", counter[0])

    edges = []
    ends = {}
    # odd-length codes start from the 0-tangle (horizontal strands),
    # even-length ones from the infinity tangle (vertical strands), so
    # that the first twist batch genuinely interlocks the two strands
    base = (("NW", "NE"), ("SW", "SE")) if len(code) % 2 else \
           (("NW", "SW"), ("NE", "SE"))
    for pair in base:
        a, b = pseudo(), pseudo()
        edges.append((a, b))
        ends[pair[0]] = a
        ends[pair[1]] = b
    under_diag: dict[int, int] = {}
    kid = [0]

    def twist_east():
        k = kid[0]
        kid[0] += 1
        under_diag[k] = _EAST_HAND
        edges.append((ends["NE"], (k, 0)))
        edges.append((ends["SE"], (k, 1)))
        ends["NE"] = (k, 3)
        ends["SE"] = (k, 2)

    def twist_south():
        k = kid[0]
        kid[0] += 1
        under_diag[k] = _SOUTH_HAND
        edges.append((ends["SW"], (k, 0)))
        edges.append((ends["SE"], (k, 3)))
        ends["SW"] = (k, 1)
        ends["SE"] = (k, 2)

    for pos in range(len(code) - 1, -1, -1):
        for _ in range(code[pos]):
            if pos % 2 == 0:
                twist_east()
            else:
                twist_south()
    edges.append((ends["NW"], ends["NE"]))
    edges.append((ends["SW"], ends["SE"]))
    wiring, loops = _splice_pseudo(edges)
    return _orient_unoriented(under_diag, wiring, loops)


# --------------------------------------------------------------------------
# braid closures


def braid_closure(word: BraidWord) -> PlanarDiagram:
    """Planar diagram of the closed braid (strands oriented the same way).

    Positive letters put the left strand under; untouched strands close
    into free unknot components.
    """
    signs: dict[int, int] = {}
    edges: list = []
    # pending[j]: dangling out-endpoint of strand column j (0-based);
    # ("top", j) stands for the eventual closure of column j
    pending: list = [("top", j) for j in range(word.strands)]
    for k, letter in enumerate(word.letters):
        i = abs(letter) - 1
        sign = 1 if letter > 0 else -1
        signs[k] = sign
        if sign > 0:
            in_left, in_right = (k, 0), (k, 3)
            out_left, out_right = (k, 1), (k, 2)
        else:
            in_left, in_right = (k, 1), (k, 0)
            out_left, out_right = (k, 2), (k, 3)
        edges.append((pending[i], in_left))
        edges.append((pending[i + 1], in_right))
        pending[i], pending[i + 1] = out_left, out_right
    loops = 0
    for j in range(word.strands):
        if pending[j] == ("top", j):
            loops += 1  # untouched strand closes into a free loop
        else:
            edges.append((pending[j], ("top", j)))
    # splice out the pseudo-nodes: each sits between two real ports
    wiring: dict = {}
    through: dict = {}
    for a, b in edges:
        if a[0] == "top":
            through.setdefault(a, []).append(b)
        elif b[0] == "top":
            through.setdefault(b, []).append(a)
        else:
            wiring[a] = b
            wiring[b] = a
    for ends in through.values():
        x, y = ends
        wiring[x] = y
        wiring[y] = x
    state = _OrientedState(signs, wiring, loops)
    return state.to_planar()
