"""Exact real-root machinery built on Sturm chains.

Counting uses the half-open convention ``(lo, hi]``. Isolators produced by
:func:`isolate_real_roots` have endpoints at which the polynomial does not
vanish, so each root lies strictly inside its isolator and neighbouring
isolators meet at most in a shared endpoint that is not a root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import InvalidIsolator, ZeroPolynomial
from .poly import (
    Poly,
    Q,
    as_rational,
    cauchy_bound,
    derivative,
    evaluate,
    poly_divmod,
    poly_gcd,
    require_nonconstant,
    squarefree_part,
    to_fraction,
    yun_decomposition,
)


@dataclass(frozen=True)
class Interval:
    lo: Q
    hi: Q

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Q:
        return self.hi - self.lo

    @property
    def mid(self) -> Q:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def to_dict(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi)}


@dataclass(frozen=True)
class RealRoot:
    isolator: Interval
    multiplicity: int = 1

    @property
    def approx(self) -> float:
        return float(self.isolator.mid)

    def to_dict(self) -> dict:
        return {"isolator": self.isolator.to_dict(), "multiplicity": self.multiplicity,
                "approx": self.approx}


def sturm_chain(f: Poly) -> List[Poly]:
    """Signed remainder sequence ``f, f', -rem(f, f'), ...``.

    The chain ends with the last nonzero remainder, which is a nonzero
    constant when ``f`` is squarefree and a multiple of ``gcd(f, f')``
    otherwise.
    """
    if f.is_zero:
        raise ZeroPolynomial()
    chain = [f]
    nxt = derivative(f)
    while not nxt.is_zero:
        chain.append(nxt)
        nxt = -poly_divmod(chain[-2], chain[-1])[1]
    return chain


def _variations(signs) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def variations_at(chain: List[Poly], x) -> int:
    return _variations(_sign(evaluate(p, x)) for p in chain)


def _variations_at_infinity(chain: List[Poly], positive: bool) -> int:
    signs = []
    for p in chain:
        s = _sign(p.coeffs[-1])
        if not positive and (len(p.coeffs) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


class SturmCounter:
    """Cached Sturm chain of the squarefree part of a polynomial."""

    def __init__(self, f: Poly):
        if f.is_zero:
            raise ZeroPolynomial()
        self.poly = f
        self.sqf = squarefree_part(f)
        self.chain = sturm_chain(self.sqf)
        self._cache = {}

    def variations(self, x) -> int:
        x = as_rational(x)
        v = self._cache.get(x)
        if v is None:
            v = variations_at(self.chain, x)
            self._cache[x] = v
        return v

    def count(self, lo=None, hi=None) -> int:
        v_lo = (_variations_at_infinity(self.chain, False) if lo is None
                else self.variations(lo))
        v_hi = (_variations_at_infinity(self.chain, True) if hi is None
                else self.variations(hi))
        return v_lo - v_hi

    def count_closed(self, iv: Interval) -> int:
        """Distinct roots in the closed interval ``[lo, hi]``."""
        at_lo = 1 if evaluate(self.sqf, iv.lo) == 0 else 0
        if iv.is_point:
            return at_lo
        return at_lo + self.count(iv.lo, iv.hi)


def count_distinct_real_roots(f: Poly, interval: Optional[Interval] = None) -> int:
    """Number of distinct real roots on the whole line, or in ``(lo, hi]``."""
    counter = SturmCounter(f)
    if interval is None:
        return counter.count()
    return counter.count(interval.lo, interval.hi)


def _split_point(sqf: Poly, lo: Q, hi: Q) -> Q:
    # prefer the midpoint; nudge off exact roots so endpoints never vanish
    mid = (lo + hi) / 2
    if evaluate(sqf, mid) != 0:
        return mid
    width = hi - lo
    k = 3
    while True:
        for cand in (mid + width / (2 * k), mid - width / (2 * k)):
            if evaluate(sqf, cand) != 0:
                return cand
        k += 1


def _isolate_squarefree(counter: SturmCounter) -> List[Interval]:
    sqf = counter.sqf
    bound = cauchy_bound(sqf)
    lo, hi = -bound, bound
    total = counter.count(lo, hi)
    out = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(Interval(a, b))
            continue
        m = _split_point(sqf, a, b)
        left = counter.count(a, m)
        stack.append((m, b, n - left))
        stack.append((a, m, left))
    out.sort(key=lambda iv: iv.lo)
    return out


def isolate_real_roots(f: Poly) -> List[RealRoot]:
    """Isolating intervals, sorted ascending, with multiplicities."""
    require_nonconstant(f)
    counter = SturmCounter(f)
    isolators = _isolate_squarefree(counter)
    if not isolators:
        return []
    factors = yun_decomposition(f)
    if len(factors) == 1:
        mult = factors[0][1]
        return [RealRoot(iv, mult) for iv in isolators]
    factor_counters = [(SturmCounter(a), i) for a, i in factors]
    out = []
    for iv in isolators:
        mult = next(i for c, i in factor_counters if c.count(iv.lo, iv.hi) == 1)
        out.append(RealRoot(iv, mult))
    return out


def bisect_root(h: Poly, iv: Interval, stop) -> Interval:
    """Shrink ``iv`` around the unique root of squarefree ``h`` until ``stop(iv)``.

    ``h`` must change sign across ``iv`` or vanish at an endpoint.
    """
    lo, hi = iv.lo, iv.hi
    s_lo = _sign(evaluate(h, lo))
    if s_lo == 0:
        return Interval(lo, lo)
    if _sign(evaluate(h, hi)) == 0:
        return Interval(hi, hi)
    while not stop(Interval(lo, hi)):
        m = (lo + hi) / 2
        s_m = _sign(evaluate(h, m))
        if s_m == 0:
            return Interval(m, m)
        if s_m == s_lo:
            lo = m
        else:
            hi = m
    return Interval(lo, hi)


def refine(f: Poly, root: RealRoot, tol) -> Interval:
    """Bisect ``root.isolator`` down to width at most ``tol``."""
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    counter = SturmCounter(f)
    iv = root.isolator
    if counter.count_closed(iv) != 1:
        raise InvalidIsolator(f"[{iv.lo}, {iv.hi}] does not isolate exactly one root")
    if iv.is_point:
        return iv
    sqf = counter.sqf
    return bisect_root(sqf, iv, lambda cur: cur.width <= tol)


def real_count_with_multiplicity(f: Poly) -> int:
    return sum(r.multiplicity for r in isolate_real_roots(f))


def nonreal_count_exact(f: Poly) -> int:
    """Non-real zeros counted with multiplicity; 0 for constants and for 0."""
    if f.is_constant:
        return 0
    return f.degree - real_count_with_multiplicity(f)


@dataclass(frozen=True)
class PositivityVerdict:
    positive: bool
    witness: Optional[Q] = None

    def __bool__(self):
        return self.positive


def _witness_nonpositive(f: Poly) -> Q:
    candidates = [Q(0), Q(1), Q(-1)]
    for x in candidates:
        if evaluate(f, x) <= 0:
            return x
    bound = cauchy_bound(f)
    for x in (bound, -bound):
        if evaluate(f, x) <= 0:
            return x
    roots = isolate_real_roots(f)
    for r in roots:
        for x in (r.isolator.lo, r.isolator.hi, r.isolator.mid):
            if evaluate(f, x) <= 0:
                return x
    # only even-multiplicity roots remain: f touches zero without crossing
    sqf = squarefree_part(f)
    best = None
    for r in roots:
        iv = bisect_root(sqf, r.isolator, lambda cur: cur.width <= Q(1, 10**30))
        if iv.is_point:
            return iv.lo
        guess = Q(to_fraction(iv.mid).limit_denominator(10**9))
        if evaluate(f, guess) == 0:
            return guess
        if best is None or evaluate(f, iv.mid) < evaluate(f, best):
            best = iv.mid
    # irrational touching point: no rational x has f(x) <= 0, return the
    # closest rational approximation found
    return best


def is_strictly_positive_on_R(f: Poly) -> PositivityVerdict:
    if f.is_zero:
        raise ZeroPolynomial()
    if f.is_constant:
        c = f.coeffs[0]
        return PositivityVerdict(True) if c > 0 else PositivityVerdict(False, Q(0))
    if f.degree % 2 == 0 and f.leading > 0 and count_distinct_real_roots(f) == 0:
        return PositivityVerdict(True)
    return PositivityVerdict(False, _witness_nonpositive(f))


def sign_at_root(g: Poly, h: Poly, iv: Interval) -> int:
    """Sign of ``g(alpha)`` where alpha is the unique root of squarefree ``h`` in ``iv``.

    Requires ``g(alpha) != 0``. The isolator is bisected until ``g`` has no
    root in it, after which the sign at an endpoint is the sign at alpha.
    """
    if g.is_zero:
        raise ZeroPolynomial("sign of the zero polynomial at a root")
    if g.is_constant:
        return _sign(g.coeffs[0])
    if has_root_in(poly_gcd(g, h), iv):
        raise ZeroDivisionError("g vanishes at the root of h")
    g_counter = SturmCounter(g)
    narrowed = bisect_root(h, iv, lambda cur: g_counter.count_closed(cur) == 0)
    return _sign(evaluate(g, narrowed.lo))


def has_root_in(p: Poly, iv: Interval) -> bool:
    if p.is_zero:
        return True
    if p.is_constant:
        return False
    return SturmCounter(p).count_closed(iv) > 0


def root_bounds(f: Poly) -> Tuple[Q, Q]:
    b = cauchy_bound(f)
    return -b, b
