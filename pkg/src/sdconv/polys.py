"""Dense univariate polynomials over a FieldSpec, in the variable z.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial is the empty tuple and its degree is -infinity, which keeps
degree comparisons in the canonical-form algorithms uniform.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero, FieldMismatch, ParseError
from .fields import FieldElement, FieldSpec, parse_element

NEG_INF = float("-inf")

Coeffish = Union[FieldElement, int]


class Poly:
    """Element of F_q[z]."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[Coeffish] = ()):
        lifted = []
        for c in coeffs:
            if isinstance(c, int):
                c = spec.from_int(c)
            elif c.spec != spec:
                raise FieldMismatch("coefficient from a different field")
            lifted.append(c)
        while lifted and not lifted[-1]:
            lifted.pop()
        self.spec = spec
        self.coeffs = tuple(lifted)

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls(spec)

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (spec.one,))

    @classmethod
    def z(cls, spec: FieldSpec) -> "Poly":
        return cls(spec, (spec.zero, spec.one))

    @classmethod
    def constant(cls, spec: FieldSpec, c: Coeffish) -> "Poly":
        return cls(spec, (c,))

    def degree(self) -> Union[int, float]:
        """Degree, with degree(0) = -inf so it sorts below every integer."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lc(self) -> FieldElement:
        """Leading coefficient; undefined for the zero polynomial."""
        if not self.coeffs:
            raise DivisionByZero("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * self.lc().inverse()

    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return sum(1 for c in self.coeffs if c)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.spec != self.spec:
                raise FieldMismatch("polynomials over different fields")
            return other
        if isinstance(other, (FieldElement, int)):
            return Poly(self.spec, (other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.spec, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Poly(self.spec, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            if isinstance(other, int):
                other = self.spec.from_int(other)
            return Poly(self.spec, tuple(c * other for c in self.coeffs))
        if isinstance(other, Poly):
            if other.spec != self.spec:
                raise FieldMismatch("polynomials over different fields")
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly(self.spec)
            zero = self.spec.zero
            out = [zero] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] = out[i + j] + ca * cb
            return Poly(self.spec, out)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one(self.spec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero("polynomial division by zero")
        spec = self.spec
        rem = list(self.coeffs)
        dv = len(o.coeffs) - 1
        inv_lead = o.lc().inverse()
        quo = [spec.zero] * max(len(rem) - dv, 0)
        while rem and len(rem) - 1 >= dv:
            shift = len(rem) - 1 - dv
            factor = rem[-1] * inv_lead
            quo[shift] = factor
            for i, c in enumerate(o.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            while rem and not rem[-1]:
                rem.pop()
        return Poly(spec, quo), Poly(spec, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.spec == other.spec and self.coeffs == other.coeffs
        if isinstance(other, (FieldElement, int)):
            return self == Poly(self.spec, (other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, {self.spec!r})"


def divrem(u: Poly, v: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg(r) < deg(v)."""
    return divmod(u, v)


def xgcd(u: Poly, v: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, s, t) with g = s*u + t*v.

    g is monic when nonzero; gcd(0, 0) = 0 with s = t = 0.
    """
    if u.spec != v.spec:
        raise FieldMismatch("polynomials over different fields")
    spec = u.spec
    r0, r1 = u, v
    s0, s1 = Poly.one(spec), Poly.zero(spec)
    t0, t1 = Poly.zero(spec), Poly.one(spec)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, Poly.zero(spec), Poly.zero(spec)
    c = r0.lc().inverse()
    return r0 * c, s0 * c, t0 * c


def gcd(u: Poly, v: Poly) -> Poly:
    return xgcd(u, v)[0]


def vec_content(vec: Sequence[Poly]) -> Poly:
    """Monic gcd of all entries of a polynomial vector (0 if all zero)."""
    if not vec:
        raise ValueError("content of an empty vector")
    g = Poly.zero(vec[0].spec)
    for entry in vec:
        g = gcd(g, entry)
        if g == Poly.one(g.spec):
            break
    return g


# ---------------------------------------------------------------------------
# Text format: terms joined by '+', term = coeff | coeff '*' zpow | zpow,
# zpow = 'z' or 'z^k'.  Multi-term coefficients of extension fields are
# parenthesized on emission; parsing accepts both forms.

_TERM_RE = re.compile(r"^(?:(?P<coeff>.+?)\*)?z(?:\^(?P<exp>\d+))?$")


def _split_terms(s: str) -> list[str]:
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {s!r}")
        elif ch == "+" and depth == 0:
            terms.append(s[start:i])
            start = i + 1
    if depth:
        raise ParseError(f"unbalanced parentheses in {s!r}")
    terms.append(s[start:])
    return terms


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    """Parse polynomial text over z; whitespace-insensitive."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial text")
    coeffs: dict[int, FieldElement] = {}
    for term in _split_terms(s):
        if not term:
            raise ParseError(f"empty term in {text!r}")
        m = _TERM_RE.match(term)
        if m:
            ct = m.group("coeff")
            c = spec.one if ct is None else parse_element(spec, ct)
            e = int(m.group("exp")) if m.group("exp") else 1
        else:
            c, e = parse_element(spec, term), 0
        coeffs[e] = coeffs.get(e, spec.zero) + c
    out = [spec.zero] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return Poly(spec, out)


def format_poly(p: Poly) -> str:
    """Canonical emission: descending powers, no zero terms, units omitted."""
    if not p:
        return "0"
    terms = []
    for exp in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[exp]
        if not c:
            continue
        cs = str(c)
        if exp == 0:
            terms.append(cs)
            continue
        zs = "z" if exp == 1 else f"z^{exp}"
        if c == p.spec.one:
            terms.append(zs)
        else:
            if "+" in cs:
                cs = f"({cs})"
            terms.append(f"{cs}*{zs}")
    return "+".join(terms)
