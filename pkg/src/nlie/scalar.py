"""Exact arithmetic in Q(i, sqrt2) and polynomials over it.

A :class:`Scalar` is stored as four rationals ``(a, b, c, d)`` meaning
``a + b*i + c*sqrt2 + d*i*sqrt2``.  Plain ``int`` and ``Fraction`` values
mix freely with scalars, so code working over the rationals only never has
to build a ``Scalar``.

:class:`WeightPoly` is a sparse multivariate polynomial whose coefficients
are scalars (or rationals).  Variables are indexed from 0; printing uses
``λ1, λ2, ...`` unless other names are given.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable, Sequence

Rational = (int, Fraction)


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class Scalar:
    """An element ``a + b i + c √2 + d i√2`` of Q(i, √2)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _q(a)
        self.b = _q(b)
        self.c = _q(c)
        self.d = _q(d)

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        return cls(x)

    @property
    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def simplify(self):
        """Return the plain ``Fraction`` (or ``int``) when the value is rational."""
        if self.is_rational():
            a = self.a
            return a.numerator if a.denominator == 1 else a
        return self

    # -- arithmetic -------------------------------------------------------
    def __add__(self, o):
        if isinstance(o, Rational):
            return Scalar(self.a + o, self.b, self.c, self.d)
        if isinstance(o, Scalar):
            return Scalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __sub__(self, o):
        if isinstance(o, Rational):
            return Scalar(self.a - o, self.b, self.c, self.d)
        if isinstance(o, Scalar):
            return Scalar(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
        return NotImplemented

    def __rsub__(self, o):
        if isinstance(o, Rational):
            return Scalar(o - self.a, -self.b, -self.c, -self.d)
        return NotImplemented

    def __mul__(self, o):
        if isinstance(o, Rational):
            return Scalar(self.a * o, self.b * o, self.c * o, self.d * o)
        if not isinstance(o, Scalar):
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = o.a, o.b, o.c, o.d
        # i^2 = -1, s^2 = 2, (is)^2 = -2, i*(is) = -s, s*(is) = 2i
        return Scalar(
            a * e - b * f + 2 * (c * g - d * h),
            a * f + b * e + 2 * (c * h + d * g),
            a * g - b * h + c * e - d * f,
            a * h + b * g + c * f + d * e,
        )

    __rmul__ = __mul__

    def conj_i(self) -> "Scalar":
        """The automorphism i -> -i."""
        return Scalar(self.a, -self.b, self.c, -self.d)

    def conj_sqrt2(self) -> "Scalar":
        """The automorphism √2 -> -√2."""
        return Scalar(self.a, self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        """Field norm down to Q (product of the four conjugates)."""
        y = self * self.conj_i()
        z = y * y.conj_sqrt2()
        assert z.is_rational()
        return z.a

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(i,√2)")
        y = self * self.conj_i()
        ys = y.conj_sqrt2()
        nrm = (y * ys).a
        return self.conj_i() * ys * (1 / nrm)

    def __truediv__(self, o):
        if isinstance(o, Rational):
            if o == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(o))
        if isinstance(o, Scalar):
            return self * o.inverse()
        return NotImplemented

    def __rtruediv__(self, o):
        if isinstance(o, Rational):
            return self.inverse() * o
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------
    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, o):
        if isinstance(o, Scalar):
            return self.parts == o.parts
        if isinstance(o, Rational):
            return self.is_rational() and self.a == o
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.a)
        return hash(self.parts)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)


I = Scalar(0, 1)
SQRT2 = Scalar(0, 0, 1)
INV_SQRT2 = Scalar(0, 0, Fraction(1, 2))
HALF = Fraction(1, 2)


def is_zero(x) -> bool:
    return not x


def format_scalar(x) -> str:
    if not isinstance(x, Scalar):
        return str(x)
    names = ("", "i", "√2", "i√2")
    out = []
    for q, name in zip(x.parts, names):
        if not q:
            continue
        sign = "-" if q < 0 else "+"
        mag = abs(q)
        if name and mag == 1:
            body = name
        elif name:
            body = f"{mag}{name}" if mag.denominator == 1 else f"({mag}){name}"
        else:
            body = str(mag)
        out.append((sign, body))
    if not out:
        return "0"
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += sign + body
    return s


def simplify(x):
    """Collapse a rational-valued Scalar back to ``int``/``Fraction``."""
    if isinstance(x, Scalar):
        return x.simplify()
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


# --------------------------------------------------------------------------
# Polynomials in the weight variables
# --------------------------------------------------------------------------

Exps = tuple[int, ...]


class WeightPoly:
    """Sparse polynomial over Q(i,√2) in ``nvars`` variables.

    Terms are kept in a dict ``{exponent tuple: coefficient}`` with no zero
    coefficients, so two polynomials are equal iff their dicts are.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Exps, object] | None = None):
        self.nvars = nvars
        self.terms: dict[Exps, object] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} vars")
                if c:
                    self.terms[tuple(e)] = simplify(c)

    @classmethod
    def const(cls, nvars: int, c) -> "WeightPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> "WeightPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def zero(cls, nvars: int) -> "WeightPoly":
        return cls(nvars)

    def _coerce(self, o) -> "WeightPoly":
        if isinstance(o, WeightPoly):
            if o.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return o
        if isinstance(o, (numbers.Rational, Scalar)):
            return WeightPoly.const(self.nvars, o)
        raise TypeError(f"cannot combine WeightPoly with {type(o).__name__}")

    def __add__(self, o):
        o = self._coerce(o)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = simplify(v)
            else:
                out.pop(e, None)
        p = WeightPoly(self.nvars)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = WeightPoly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        if isinstance(o, (numbers.Rational, Scalar)):
            if not o:
                return WeightPoly(self.nvars)
            p = WeightPoly(self.nvars)
            p.terms = {e: simplify(c * o) for e, c in self.terms.items()}
            return p
        o = self._coerce(o)
        out: dict[Exps, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return WeightPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, (numbers.Rational, Scalar)):
            inv = 1 / (Fraction(o) if isinstance(o, int) else o)
            return self * inv
        return NotImplemented

    def __pow__(self, k: int):
        out = WeightPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, (numbers.Rational, Scalar)):
            o = WeightPoly.const(self.nvars, o)
        if not isinstance(o, WeightPoly):
            return NotImplemented
        return self.nvars == o.nvars and self.terms == o.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Exps, object]]:
        """Terms in graded-lex order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_coefficient(self):
        if not self.terms:
            return 0
        return self.sorted_terms()[0][1]

    def monic(self) -> "WeightPoly":
        """Scale so the graded-lex leading coefficient is 1."""
        if not self.terms:
            return self
        return self / self.leading_coefficient()

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * (x ** k)
            total = total + t
        return simplify(total)

    def substitute(self, images: Sequence["WeightPoly"]) -> "WeightPoly":
        """Replace variable ``i`` by ``images[i]`` (all in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        out = WeightPoly(nv)
        for e, c in self.terms.items():
            t = WeightPoly.const(nv, c)
            for img, k in zip(images, e):
                if k:
                    t = t * img ** k
            out = out + t
        return out

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"λ{i + 1}" for i in range(self.nvars)]
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            cs = format_scalar(c) if isinstance(c, Scalar) else str(c)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            elif cs == "-1":
                body = "-" + mono
            elif isinstance(c, Scalar) and not c.is_rational() and sum(1 for p in c.parts if p) > 1:
                body = f"({cs})*{mono}"
            else:
                body = f"{cs}*{mono}"
            pieces.append(body)
        s = pieces[0]
        for p in pieces[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"WeightPoly({self.to_str()})"


def poly_normalize(nvars: int, raw: Iterable[tuple[object, Sequence[int]]]) -> WeightPoly:
    """Build a canonical polynomial from a raw ``(coefficient, exponents)`` list.

    Repeated exponent tuples are merged and zero coefficients dropped.
    """
    out = WeightPoly(nvars)
    for c, e in raw:
        out = out + WeightPoly(nvars, {tuple(e): c})
    return out


def poly_vars(nvars: int) -> list[WeightPoly]:
    return [WeightPoly.var(i, nvars) for i in range(nvars)]
