"""Exact Laurent polynomials in one and two variables.

Coefficients are `fractions.Fraction`; exponents are integers (possibly
negative).  These carry weight-system values (variable N), bracket/Jones
polynomials (variables A, t, q) and the two-variable skein polynomial
(variables a, z).
"""

from __future__ import annotations

from fractions import Fraction


class Laurent1:
    """Sparse Laurent polynomial in a single variable."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var: str = "t"):
        self.var = var
        self.coeffs: dict[int, Fraction] = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                c = Fraction(c)
                if c != 0:
                    self.coeffs[int(e)] = c

    @classmethod
    def term(cls, coeff, exp: int = 0, var: str = "t") -> "Laurent1":
        return cls({exp: Fraction(coeff)}, var=var)

    @classmethod
    def zero(cls, var: str = "t") -> "Laurent1":
        return cls({}, var=var)

    @classmethod
    def one(cls, var: str = "t") -> "Laurent1":
        return cls({0: Fraction(1)}, var=var)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent1.term(other, 0, var=self.var)
        return isinstance(other, Laurent1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "Laurent1":
        if isinstance(other, (int, Fraction)):
            other = Laurent1.term(other, 0, var=self.var)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return Laurent1(out, var=self.var)

    __radd__ = __add__

    def __neg__(self) -> "Laurent1":
        return Laurent1({e: -c for e, c in self.coeffs.items()}, var=self.var)

    def __sub__(self, other) -> "Laurent1":
        if isinstance(other, (int, Fraction)):
            other = Laurent1.term(other, 0, var=self.var)
        return self + (-other)

    def __rsub__(self, other) -> "Laurent1":
        return (-self) + other

    def __mul__(self, other) -> "Laurent1":
        if isinstance(other, (int, Fraction)):
            return Laurent1({e: c * other for e, c in self.coeffs.items()},
                            var=self.var)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = out.get(e, Fraction(0)) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return Laurent1(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent1":
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("cannot invert a non-monomial")
            ((e, c),) = self.coeffs.items()
            return Laurent1({-e: 1 / c}, var=self.var) ** (-n)
        out = Laurent1.one(var=self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "Laurent1":
        """Multiply by var**k."""
        return Laurent1({e + k: c for e, c in self.coeffs.items()}, var=self.var)

    def substitute_monomial(self, k: int, var: str | None = None) -> "Laurent1":
        """Replace the variable by (new variable)**k."""
        return Laurent1({e * k: c for e, c in self.coeffs.items()},
                        var=var or self.var)

    def mirror(self) -> "Laurent1":
        """Replace the variable by its inverse."""
        return Laurent1({-e: c for e, c in self.coeffs.items()}, var=self.var)

    def __call__(self, value: Fraction | int) -> Fraction:
        value = Fraction(value)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * value ** e
        return total

    def exponents(self) -> list[int]:
        return sorted(self.coeffs)

    def __repr__(self):
        return f"Laurent1({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                mono = str(c)
            else:
                pw = self.var if e == 1 else f"{self.var}^{e}"
                if c == 1:
                    mono = pw
                elif c == -1:
                    mono = f"-{pw}"
                else:
                    mono = f"{c}*{pw}"
            parts.append(mono)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


class Laurent2:
    """Sparse Laurent polynomial in two variables (default a, z)."""

    __slots__ = ("coeffs", "vars")

    def __init__(self, coeffs=None, vars: tuple[str, str] = ("a", "z")):
        self.vars = vars
        self.coeffs: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (e1, e2), c in dict(coeffs).items():
                c = Fraction(c)
                if c != 0:
                    self.coeffs[(int(e1), int(e2))] = c

    @classmethod
    def term(cls, coeff, e1: int = 0, e2: int = 0,
             vars: tuple[str, str] = ("a", "z")) -> "Laurent2":
        return cls({(e1, e2): Fraction(coeff)}, vars=vars)

    @classmethod
    def one(cls, vars: tuple[str, str] = ("a", "z")) -> "Laurent2":
        return cls({(0, 0): Fraction(1)}, vars=vars)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Laurent2.term(other, vars=self.vars)
        return isinstance(other, Laurent2) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "Laurent2":
        if isinstance(other, (int, Fraction)):
            other = Laurent2.term(other, vars=self.vars)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return Laurent2(out, vars=self.vars)

    __radd__ = __add__

    def __neg__(self) -> "Laurent2":
        return Laurent2({e: -c for e, c in self.coeffs.items()}, vars=self.vars)

    def __sub__(self, other) -> "Laurent2":
        if isinstance(other, (int, Fraction)):
            other = Laurent2.term(other, vars=self.vars)
        return self + (-other)

    def __mul__(self, other) -> "Laurent2":
        if isinstance(other, (int, Fraction)):
            return Laurent2({e: c * other for e, c in self.coeffs.items()},
                            vars=self.vars)
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, z1), c1 in self.coeffs.items():
            for (a2, z2), c2 in other.coeffs.items():
                e = (a1 + a2, z1 + z2)
                v = out.get(e, Fraction(0)) + c1 * c2
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        return Laurent2(out, vars=self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent2":
        if n < 0:
            raise ValueError("negative powers of a two-variable polynomial")
        out = Laurent2.one(vars=self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k1: int, k2: int) -> "Laurent2":
        return Laurent2({(a + k1, z + k2): c for (a, z), c in self.coeffs.items()},
                        vars=self.vars)

    def substitute(self, first: Laurent1, second: Laurent1) -> Laurent1:
        """Evaluate at one-variable Laurent polynomials (a ring map)."""
        out = Laurent1.zero(var=first.var)
        for (e1, e2), c in sorted(self.coeffs.items()):
            if e2 < 0:
                raise ValueError("negative exponent in second variable")
            out = out + (first ** e1) * (second ** e2) * c
        return out

    def __repr__(self):
        return f"Laurent2({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        u, v = self.vars
        parts = []
        for (e1, e2) in sorted(self.coeffs, reverse=True):
            c = self.coeffs[(e1, e2)]
            factors = []
            if c == -1:
                sign = "-"
            else:
                sign = ""
                if c != 1 or (e1 == 0 and e2 == 0):
                    factors.append(str(c))
            if e1:
                factors.append(u if e1 == 1 else f"{u}^{e1}")
            if e2:
                factors.append(v if e2 == 1 else f"{v}^{e2}")
            if not factors:
                factors.append("1")
            parts.append(sign + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out
