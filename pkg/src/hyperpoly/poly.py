"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import BothZero, ConstantPolynomial, ZeroPolynomial

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

ZERO = Q(0)


def as_rational(value):
    """Coerce ints, Fractions, ``"p/q"`` strings and floats to an exact rational.

    Floats are converted exactly (their binary value), never rounded.
    """
    if isinstance(value, Q):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, (int, Rational)):
        return Q(value)
    if isinstance(value, str):
        return Q(Fraction(value.strip()))
    if isinstance(value, float):
        return Q(Fraction(value))
    raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")


def to_fraction(value) -> Fraction:
    """Exact conversion to :class:`fractions.Fraction` (for ``limit_denominator``)."""
    return Fraction(int(value.numerator), int(value.denominator))


class Poly:
    """Immutable polynomial ``a_0 + a_1 x + ... + a_N x^N``.

    Coefficients are stored in ascending order with trailing zeros trimmed,
    so the zero polynomial has an empty coefficient tuple.

    >>> f = Poly([1, -3, 0, 2])
    >>> f.degree
    3
    >>> f.derivative()
    Poly(['-3', '0', '6'])
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # trusted constructor: coeffs already trimmed rationals
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1) -> "Poly":
        out = cls([leading])
        for r in roots:
            out = out * cls([-as_rational(r), 1])
        return out

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            body = "" if (mag == 1 and k > 0) else str(mag)
            if k == 1:
                body += "x"
            elif k > 1:
                body += f"x^{k}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        """True for nonzero constants and for the zero polynomial."""
        return len(self.coeffs) <= 1

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("the degree of the zero polynomial is not defined")
        return len(self.coeffs) - 1

    @property
    def leading(self) -> "Q":
        if not self.coeffs:
            raise ZeroPolynomial()
        return self.coeffs[-1]

    def __call__(self, x) -> "Q":
        return evaluate(self, x)

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, _coerce(other))

    def __floordiv__(self, other):
        return poly_divmod(self, _coerce(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, _coerce(other))[1]

    def scale(self, c) -> "Poly":
        c = as_rational(c)
        if c == 0:
            return Poly()
        return Poly._raw(tuple(a * c for a in self.coeffs))

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroPolynomial()
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Poly._raw(tuple(a / lc for a in self.coeffs))

    def derivative(self, n: int = 1) -> "Poly":
        out = self
        for _ in range(n):
            out = derivative(out)
        return out

    def shift(self, r) -> "Poly":
        """Return ``x -> f(x + r)`` (Taylor shift, exact)."""
        r = as_rational(r)
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                cs[k] += r * cs[k + 1]
        return Poly(cs)

    def reflect(self) -> "Poly":
        """Return ``x -> f(-x)``."""
        return Poly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def trailing_zeros(self) -> int:
        """Multiplicity of 0 as a root."""
        if not self.coeffs:
            raise ZeroPolynomial()
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def to_floats(self) -> list:
        return [float(c) for c in self.coeffs]


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Rational)):
        return Poly([value])
    return NotImplemented


def derivative(f: Poly) -> Poly:
    cs = f.coeffs
    return Poly._raw(tuple(k * cs[k] for k in range(1, len(cs))))


def evaluate(f: Poly, x) -> "Q":
    x = as_rational(x)
    acc = ZERO
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def sign_at(f: Poly, x) -> int:
    v = evaluate(f, x)
    return (v > 0) - (v < 0)


def multiply(f: Poly, g: Poly) -> Poly:
    a, b = f.coeffs, g.coeffs
    if not a or not b:
        return Poly()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return Poly._raw(tuple(out))


def poly_divmod(f: Poly, g: Poly):
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lc = g.coeffs[-1]
    if len(rem) - 1 < dg:
        return Poly(), f
    quot = [ZERO] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        q = rem[k + dg] / lc
        quot[k] = q
        if q:
            for i, gi in enumerate(g.coeffs):
                rem[k + i] -= q * gi
    return Poly(quot), Poly(rem[:dg])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor (Euclid over the rationals)."""
    if f.is_zero and g.is_zero:
        raise BothZero()
    a, b = f, g
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def squarefree_part(f: Poly) -> Poly:
    """``f / gcd(f, f')`` normalised monic."""
    if f.is_zero:
        raise ZeroPolynomial()
    if f.is_constant:
        return Poly([1])
    g = poly_gcd(f, derivative(f))
    return (f // g).monic()


def is_squarefree(f: Poly) -> bool:
    if f.is_zero:
        raise ZeroPolynomial()
    if f.is_constant:
        return True
    return poly_gcd(f, derivative(f)).is_constant


def yun_decomposition(f: Poly) -> list:
    """Squarefree factorisation ``f = c * prod a_i^i`` by Yun's algorithm.

    Returns ``[(a_i, i), ...]`` for the nonconstant monic factors, ascending
    in multiplicity. The factors are squarefree and pairwise coprime.
    """
    if f.is_zero:
        raise ZeroPolynomial()
    if f.is_constant:
        return []
    fp = derivative(f)
    a0 = poly_gcd(f, fp)
    b = f // a0
    c = fp // a0
    d = c - derivative(b)
    out = []
    i = 1
    while not b.is_constant:
        a = poly_gcd(b, d)
        if not a.is_constant:
            out.append((a.monic(), i))
        b = b // a
        c = d // a
        d = c - derivative(b)
        i += 1
    return out


def cauchy_bound(f: Poly) -> "Q":
    """``1 + max |a_k / a_N|``; every complex root lies strictly inside."""
    if f.is_zero:
        raise ZeroPolynomial()
    lc = abs(f.coeffs[-1])
    if len(f.coeffs) == 1:
        return Q(1)
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lc


def require_nonconstant(f: Poly) -> None:
    if f.is_zero:
        raise ZeroPolynomial()
    if f.is_constant:
        raise ConstantPolynomial()


def derivative_chain(f: Poly) -> list:
    """``[f, f', f'', ...]`` down to (and including) the constant term."""
    out = [f]
    while len(out[-1].coeffs) > 1:
        out.append(derivative(out[-1]))
    return out


def as_poly(value: Union[Poly, Sequence]) -> Poly:
    return value if isinstance(value, Poly) else Poly(value)
