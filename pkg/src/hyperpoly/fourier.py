"""Critical points, Fourier multiplicities and non-real zero counting.

For a critical point ``alpha`` (a real zero of ``f'``) with ``f(alpha) != 0``
let ``m`` be the number of consecutive derivatives ``f', ..., f^(m)`` that
vanish there. The Fourier multiplicity is

* ``m / 2`` when ``m`` is even,
* ``(m - 1) / 2`` when ``m`` is odd and ``f(alpha) f^(m+1)(alpha) < 0``,
* ``(m + 1) / 2`` when ``m`` is odd and ``f(alpha) f^(m+1)(alpha) > 0``,

and twice the sum over all critical points equals ``Z(f) - Z(f')`` where
``Z`` counts non-real zeros with multiplicity. Everything is decided in exact
arithmetic; no value is ever sampled numerically at ``alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .errors import InadmissibleChain, InvalidIsolator, MultipleRootOfF
from .poly import Poly, Q, derivative, derivative_chain, poly_gcd, require_nonconstant, squarefree_part
from .realroots import (
    Interval,
    RealRoot,
    SturmCounter,
    bisect_root,
    count_distinct_real_roots,
    has_root_in,
    isolate_real_roots,
    nonreal_count_exact,
    real_count_with_multiplicity,
    sign_at_root,
)

LOCAL_MAX = "local_max"
LOCAL_MIN = "local_min"
NON_EXTREMUM = "non_extremum"
APPROX_WIDTH = Q(1, 2**30)


@dataclass(frozen=True)
class CriticalPoint:
    """A real zero of ``f'`` together with Fourier's bookkeeping.

    ``sign_of_f`` is 0 only for points produced by the lenient scan used in
    the extrema test, where ``alpha`` is also a (multiple) root of ``f``; such
    points have ``fourier_k = None``.
    """

    isolator: Interval
    vanishing_order: int
    kind: str
    sign_of_f: int
    sign_of_next: int
    fourier_k: Optional[int]

    @property
    def approx(self) -> float:
        return float(self.isolator.mid)

    def to_dict(self) -> dict:
        return {
            "isolator": self.isolator.to_dict(),
            "approx": self.approx,
            "vanishing_order": self.vanishing_order,
            "kind": self.kind,
            "sign_of_f": _sign_str(self.sign_of_f),
            "sign_of_next_derivative": _sign_str(self.sign_of_next),
            "fourier_k": self.fourier_k,
        }


def _sign_str(s: int) -> str:
    return {1: "+", -1: "-", 0: "0"}[s]


@dataclass(frozen=True)
class CountingIdentity:
    zc_f: int
    zc_fp: int
    K: int
    holds: bool

    def to_dict(self) -> dict:
        return {"zc_f": self.zc_f, "zc_fp": self.zc_fp, "K": self.K, "holds": self.holds}


def k_from_order(m: int, sign_f: int, sign_next: int) -> int:
    """Fourier multiplicity from the vanishing order and the two signs."""
    if m % 2 == 0:
        return m // 2
    if sign_f * sign_next < 0:
        return (m - 1) // 2
    return (m + 1) // 2


def _kind(m: int, sign_next: int) -> str:
    if m % 2 == 0:
        return NON_EXTREMUM
    return LOCAL_MIN if sign_next > 0 else LOCAL_MAX


class _Context:
    """Shared state for analysing the critical points of one polynomial."""

    def __init__(self, f: Poly):
        require_nonconstant(f)
        self.f = f
        self.chain = derivative_chain(f)
        fp = self.chain[1]
        self.h = squarefree_part(fp) if not fp.is_constant else None
        self.shared = poly_gcd(f, fp)

    def check_isolator(self, iv: Interval) -> None:
        if self.h is None or SturmCounter(self.h).count_closed(iv) != 1:
            raise InvalidIsolator(f"[{iv.lo}, {iv.hi}] does not isolate one root of f'")

    def vanishing_order(self, iv: Interval) -> int:
        # m grows while gcd(sqf(f'), f'', ..., f^(m+1)) still has a root in iv
        p = self.h
        m = 1
        while m + 1 < len(self.chain):
            p = poly_gcd(p, self.chain[m + 1])
            if p.is_constant or not has_root_in(p, iv):
                break
            m += 1
        return m

    def root_of_f(self, iv: Interval) -> bool:
        return not self.shared.is_constant and has_root_in(self.shared, iv)

    def point(self, iv: Interval, strict: bool = True) -> CriticalPoint:
        m = self.vanishing_order(iv)
        sign_next = sign_at_root(self.chain[m + 1], self.h, iv)
        if self.root_of_f(iv):
            if strict:
                raise MultipleRootOfF(
                    f"critical point in [{iv.lo}, {iv.hi}] is also a root of f", iv)
            return CriticalPoint(iv, m, _kind(m, sign_next), 0, sign_next, None)
        sign_f = sign_at_root(self.f, self.h, iv)
        return CriticalPoint(iv, m, _kind(m, sign_next), sign_f, sign_next,
                             k_from_order(m, sign_f, sign_next))

    def isolators(self) -> List[Interval]:
        if self.h is None:
            return []
        # narrow enough that the midpoint is a usable location for reports
        return [bisect_root(self.h, r.isolator, lambda cur: cur.width <= APPROX_WIDTH)
                for r in isolate_real_roots(self.h)]


def _shared_real_root(p: Poly, q: Poly) -> Optional[Interval]:
    g = poly_gcd(p, q)
    if g.is_constant:
        return None
    roots = isolate_real_roots(g)
    return roots[0].isolator if roots else None


def _require_squarefree(f: Poly) -> None:
    fp = derivative(f)
    if not poly_gcd(f, fp).is_constant:
        iv = _shared_real_root(f, fp)
        where = f" near {float(iv.mid):.6g}" if iv is not None else " (non-real)"
        raise MultipleRootOfF(f"f has a repeated root{where}", iv)


def _isolator_of(a) -> Interval:
    return a.isolator if isinstance(a, RealRoot) else a


def vanishing_order(f: Poly, a) -> int:
    """Order ``m`` of the critical point isolated by ``a`` (a RealRoot of f')."""
    ctx = _Context(f)
    iv = _isolator_of(a)
    ctx.check_isolator(iv)
    if ctx.root_of_f(iv):
        raise MultipleRootOfF(f"critical point in [{iv.lo}, {iv.hi}] is also a root of f", iv)
    return ctx.vanishing_order(iv)


def fourier_multiplicity(f: Poly, a) -> int:
    ctx = _Context(f)
    iv = _isolator_of(a)
    ctx.check_isolator(iv)
    return ctx.point(iv).fourier_k


def classify_critical_points(f: Poly) -> List[CriticalPoint]:
    """All real critical points of a squarefree ``f``, ascending."""
    require_nonconstant(f)
    _require_squarefree(f)
    ctx = _Context(f)
    return [ctx.point(iv) for iv in ctx.isolators()]


def scan_critical_points(f: Poly) -> List[CriticalPoint]:
    """Like :func:`classify_critical_points` but tolerates repeated real roots.

    Critical points that are roots of ``f`` come back with ``sign_of_f = 0``.
    """
    ctx = _Context(f)
    return [ctx.point(iv, strict=False) for iv in ctx.isolators()]


def K_of_derivative(f: Poly) -> int:
    """Sum of the Fourier multiplicities of the critical zeros of ``f``."""
    return sum(p.fourier_k for p in classify_critical_points(f))


def verify_counting_identity(f: Poly) -> CountingIdentity:
    require_nonconstant(f)
    K = K_of_derivative(f)
    zc_f = nonreal_count_exact(f)
    zc_fp = nonreal_count_exact(derivative(f))
    return CountingIdentity(zc_f, zc_fp, K, zc_f - zc_fp == 2 * K)


def telescoped_terms(f: Poly) -> List[int]:
    """``[K(f'), K(f''), ...]``, each computed with the previous derivative as base.

    Raises :class:`InadmissibleChain` at the first ``j`` where ``f^(j-1)`` and
    ``f^(j)`` share a root.
    """
    require_nonconstant(f)
    chain = derivative_chain(f)
    terms = []
    for j in range(1, len(chain)):
        base = chain[j - 1]
        if not poly_gcd(base, chain[j]).is_constant:
            raise InadmissibleChain(j, _shared_real_root(base, chain[j]))
        terms.append(K_of_derivative(base))
    return terms


def nonreal_count_via_fourier(f: Poly) -> int:
    return 2 * sum(telescoped_terms(f))


def is_admissible(f: Poly) -> bool:
    require_nonconstant(f)
    chain = derivative_chain(f)
    return all(poly_gcd(chain[j - 1], chain[j]).is_constant for j in range(1, len(chain)))


def extra_critical_zeros(f: Poly) -> int:
    """Real zeros of ``f'`` (with multiplicity) beyond the Rolle minimum.

    Rolle forces ``n - 1`` zeros of ``f'`` between the ``n`` distinct real
    zeros of ``f``; whatever remains is "extra". The minimum is left at
    ``-1`` when ``f`` has no real zero, which keeps the result equal to
    ``Z(f) - Z(f')`` for every squarefree ``f``.
    """
    require_nonconstant(f)
    fp = derivative(f)
    real_fp = 0 if fp.is_constant else real_count_with_multiplicity(fp)
    return real_fp - (count_distinct_real_roots(f) - 1)
