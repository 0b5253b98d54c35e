"""Floating-point experiments with entire functions.

* :class:`TrigPoly` models ``p(z) cos(az) + q(z) sin(az)``, a family closed
  under differentiation; :func:`funny_order` finds how many derivatives of
  ``cos(az)(z^2 + 1/4)`` it takes before a positive local minimum or a
  negative local maximum shows up.
* :func:`partial_product` and :func:`abs_convergence_report` probe the
  linear, quadratic, exponentially-corrected and sine infinite products.
* :func:`hadamard_reconstruct` rebuilds a polynomial from its zeros as
  ``a_k z^k prod (1 - z / z_j)`` and measures the mismatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import WindowTooCoarse
from .oracle import all_roots_float
from .poly import Poly, Q, as_rational, cauchy_bound, evaluate, poly_divmod, require_nonconstant

LOG_THRESHOLD = 1000
REFINE_TOL = 1e-10
DEGENERATE_RTOL = 1e-8


def _trim(c: np.ndarray) -> np.ndarray:
    c = np.atleast_1d(np.asarray(c, dtype=float))
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if nz.size else np.zeros(1)


@dataclass(frozen=True)
class TrigPoly:
    """``p(z) cos(a z) + q(z) sin(a z)`` with ascending float coefficients.

    ``norm`` records the positive factor divided out by the last
    differentiation: the true derivative equals ``norm * self``.
    """

    p: np.ndarray
    q: np.ndarray
    a: float
    norm: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError("frequency a must be positive")
        object.__setattr__(self, "p", _trim(self.p))
        object.__setattr__(self, "q", _trim(self.q))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return (npoly.polyval(x, self.p) * np.cos(self.a * x)
                + npoly.polyval(x, self.q) * np.sin(self.a * x))

    @classmethod
    def family(cls, a: float) -> "TrigPoly":
        """``cos(a z) (z^2 + 1/4)``: real zeros plus the pair ``+-i/2``."""
        return cls(np.array([0.25, 0.0, 1.0]), np.zeros(1), a)


def trig_derivative(T: TrigPoly, normalize: bool = True) -> TrigPoly:
    """``(p, q) -> (p' + a q, q' - a p)``, rescaled so the largest |coefficient| is 1."""
    a = T.a
    n = max(len(T.p), len(T.q))
    p = np.zeros(n)
    q = np.zeros(n)
    p[: len(T.p)] = T.p
    q[: len(T.q)] = T.q
    dp = np.zeros(n)
    dq = np.zeros(n)
    dp[: n - 1] = npoly.polyder(p) if n > 1 else 0.0
    dq[: n - 1] = npoly.polyder(q) if n > 1 else 0.0
    new_p = dp + a * q
    new_q = dq - a * p
    scale = 1.0
    if normalize:
        peak = max(np.max(np.abs(new_p)), np.max(np.abs(new_q)))
        if peak > 0:
            scale = float(peak)
    return TrigPoly(new_p / scale, new_q / scale, a, scale)


class Extremum(NamedTuple):
    x: float
    value: float
    kind: str  # "local_min", "local_max" or "degenerate"


def _sign_changes(values: np.ndarray) -> int:
    s = np.sign(values)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _bisect(fn, lo: float, hi: float, f_lo: float) -> float:
    while hi - lo > REFINE_TOL:
        mid = 0.5 * (lo + hi)
        f_mid = float(fn(mid))
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def scan_extrema(T: TrigPoly, window: Tuple[float, float], samples: int = 4096) -> List[Extremum]:
    """Local extrema of ``T`` on ``window`` from sign changes of ``T'``.

    Raises :class:`WindowTooCoarse` if a grid four times finer sees more sign
    changes of ``T'`` than the working grid.
    """
    if samples < 256:
        raise ValueError("samples must be at least 256")
    lo, hi = float(window[0]), float(window[1])
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError(f"bad window {window!r}")
    d1 = trig_derivative(T)
    d2 = trig_derivative(d1)
    xs = np.linspace(lo, hi, samples)
    vals = d1(xs)
    fine = d1(np.linspace(lo, hi, 4 * samples - 3))
    if _sign_changes(fine) > _sign_changes(vals):
        raise WindowTooCoarse(
            f"{samples} samples miss critical points on [{lo}, {hi}]")
    curvature_scale = float(np.max(np.abs(d2(xs)))) or 1.0
    crit = []
    last = None
    for i in range(samples - 1):
        if vals[i] == 0.0:
            if last != i:
                crit.append(xs[i])
                last = i
        elif vals[i + 1] != 0.0 and (vals[i] > 0) != (vals[i + 1] > 0):
            crit.append(_bisect(d1, xs[i], xs[i + 1], vals[i]))
    if vals[-1] == 0.0 and last != samples - 1:
        crit.append(xs[-1])
    out = []
    for x in crit:
        c = float(d2(x))
        if abs(c) < DEGENERATE_RTOL * curvature_scale:
            kind = "degenerate"
        else:
            kind = "local_min" if c > 0 else "local_max"
        out.append(Extremum(float(x), float(T(x)), kind))
    return out


def funny_extrema(extrema: Sequence[Extremum]) -> List[Extremum]:
    return [e for e in extrema
            if (e.kind == "local_min" and e.value > 0) or (e.kind == "local_max" and e.value < 0)]


def default_window(a: float) -> Tuple[float, float]:
    half = 8 * math.pi / a + 1
    return -half, half


def funny_order(a: float, max_order: int = 64, window: Optional[Tuple[float, float]] = None,
                samples: int = 4096) -> Optional[int]:
    """Smallest ``n`` whose ``n``-th derivative of ``cos(az)(z^2+1/4)`` misbehaves.

    Misbehaving means a positive local minimum or negative local maximum in
    ``window``. Returns ``None`` if nothing shows up through ``max_order``.
    """
    if not a > 0:
        raise ValueError("a must be positive")
    if not 0 <= max_order <= 64:
        raise ValueError("max_order must lie in 0..64")
    window = default_window(a) if window is None else window
    T = TrigPoly.family(a)
    for n in range(max_order + 1):
        if funny_extrema(scan_extrema(T, window, samples)):
            return n
        T = trig_derivative(T)
    return None


PRODUCT_KINDS = ("linear", "quadratic", "weierstrass", "sine")


def _check_kind(kind: str) -> None:
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product kind {kind!r}; choose from {PRODUCT_KINDS}")


def product_factors(kind: str, z: float, j: np.ndarray) -> np.ndarray:
    """The ``j``-th factor of each product, vectorised over ``j``."""
    _check_kind(kind)
    j = np.asarray(j, dtype=float)
    if kind == "linear":
        return 1.0 - z / j
    if kind == "quadratic":
        return 1.0 - z / j**2
    if kind == "weierstrass":
        return (1.0 - z / j) * np.exp(z / j)
    return 1.0 - z * z / j**2


def _log_abs_factors(kind: str, z: float, j: np.ndarray) -> np.ndarray:
    if kind == "linear":
        c = -z / j
    elif kind == "quadratic":
        c = -z / j**2
    elif kind == "weierstrass":
        c = -z / j
    else:
        c = -z * z / j**2
    small = np.abs(c) < 0.5
    with np.errstate(divide="ignore"):
        logs = np.where(small, np.log1p(np.clip(c, -0.5, 0.5)), np.log(np.abs(1.0 + c)))
    if kind == "weierstrass":
        logs = logs + z / j
    return logs


class PartialProduct(NamedTuple):
    value: float
    zero_at: Optional[int] = None

    def __float__(self):
        return self.value


def partial_product(kind: str, z: float, N: int) -> PartialProduct:
    """``prod_{j=1}^N factor_j(z)``; ``zero_at`` flags an exactly vanishing factor."""
    _check_kind(kind)
    if N < 1:
        raise ValueError("N must be positive")
    z = float(z)
    j = np.arange(1, N + 1, dtype=float)
    factors = product_factors(kind, z, j)
    zeros = np.flatnonzero(factors == 0.0)
    if zeros.size:
        return PartialProduct(0.0, int(zeros[0]) + 1)
    if N <= LOG_THRESHOLD:
        return PartialProduct(float(np.prod(factors)))
    sign = -1.0 if np.count_nonzero(factors < 0) % 2 else 1.0
    return PartialProduct(sign * math.exp(math.fsum(_log_abs_factors(kind, z, j))))


def product_terms(kind: str, z: float, j: np.ndarray) -> np.ndarray:
    """``c_j = factor_j(z) - 1`` computed without cancellation."""
    _check_kind(kind)
    j = np.asarray(j, dtype=float)
    if kind == "weierstrass":
        x = z / j
        em1 = np.expm1(x)
        return (em1 - x) - x * em1
    if kind == "linear":
        return -z / j
    if kind == "quadratic":
        return -z / j**2
    return -z * z / j**2


@dataclass(frozen=True)
class AbsConvergenceReport:
    kind: str
    z: float
    N: int
    partial_abs_sums: Tuple[float, float, float]
    growth_class: str
    decay_exponent: float
    verdict: str

    @property
    def partial_abs_sum(self) -> float:
        return self.partial_abs_sums[-1]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind, "z": self.z, "N": self.N,
            "partial_abs_sums": list(self.partial_abs_sums),
            "partial_abs_sum": self.partial_abs_sum,
            "growth_class": self.growth_class,
            "decay_exponent": self.decay_exponent,
            "verdict": self.verdict,
        }


def abs_convergence_report(kind: str, z: float, N: int) -> AbsConvergenceReport:
    """Classify growth of ``sum |c_n|`` from partial sums at ``N/4``, ``N/2``, ``N``.

    For ``|c_n| ~ n^-p`` the increment ratio between the two dyadic blocks is
    ``2^(1-p)``: below 0.9 reads as bounded, 0.9-1.1 as logarithmic, above
    as power growth.
    """
    _check_kind(kind)
    if N < 1000:
        raise ValueError("N must be at least 1000")
    j = np.arange(1, N + 1, dtype=float)
    terms = np.abs(product_terms(kind, float(z), j))
    csum = np.cumsum(terms)
    s1, s2, s3 = (float(csum[N // 4 - 1]), float(csum[N // 2 - 1]), float(csum[N - 1]))
    d1, d2 = s2 - s1, s3 - s2
    if d1 <= 0.0:
        ratio = 0.0
        exponent = math.inf
    else:
        ratio = d2 / d1
        exponent = 1.0 - math.log2(ratio) if ratio > 0 else math.inf
    if ratio < 0.9:
        growth = "bounded"
    elif ratio <= 1.1:
        growth = "logarithmic"
    else:
        growth = "power"
    verdict = "convergent" if growth == "bounded" else "divergent"
    return AbsConvergenceReport(kind, float(z), N, (s1, s2, s3), growth, exponent, verdict)


@dataclass
class HadamardReport:
    zero_multiplicity: int
    leading: Q
    roots: List[complex]
    max_rel_error: float
    exact: bool
    grid: List[float] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "zero_multiplicity": self.zero_multiplicity,
            "leading": str(self.leading),
            "roots": [[z.real, z.imag] for z in self.roots],
            "max_rel_error": self.max_rel_error,
            "exact": self.exact,
        }


def _snap_rational_roots(g: Poly, approx: Sequence[complex]) -> Optional[List[Q]]:
    # promote float roots to exact rationals when every one checks out exactly
    rest = g
    found = []
    for z in approx:
        if abs(z.imag) > 1e-6:
            return None
        cand = Q(Fraction(z.real).limit_denominator(10**6))
        if rest.is_constant or evaluate(rest, cand) != 0:
            return None
        rest = poly_divmod(rest, Poly([-cand, 1]))[0]
        found.append(cand)
    return found if rest.is_constant else None


def hadamard_reconstruct(f: Poly, roots: Optional[Sequence] = None) -> HadamardReport:
    """Compare ``f`` with ``a_k z^k prod (1 - z/z_j)`` on 101 grid points of ``[-B, B]``.

    ``k`` is the exact multiplicity of the root 0 and ``a_k`` the first
    nonzero coefficient. Without ``roots`` the nonzero roots come from the
    Aberth oracle; when they all turn out to be rational (checked exactly)
    or rational ``roots`` are supplied, the comparison runs in exact
    arithmetic and the error is exactly zero.
    """
    require_nonconstant(f)
    if f.degree > 12:
        raise ValueError("hadamard_reconstruct is limited to degree <= 12")
    k = f.trailing_zeros()
    a_k = f.coeffs[k]
    g = Poly(f.coeffs[k:])
    bound = cauchy_bound(f)

    if roots is not None:
        rational = [None if isinstance(r, complex) else as_rational(r) for r in roots]
        exact_roots = None if any(r is None for r in rational) else rational
        approx = [complex(r) for r in roots]
    elif g.is_constant:
        exact_roots, approx = [], []
    else:
        approx = [r.location for r in all_roots_float(g)]
        exact_roots = _snap_rational_roots(g, approx)

    if exact_roots is not None:
        grid = [-bound + 2 * bound * i / 100 for i in range(101)]
        worst = Q(0)
        scale = max(abs(evaluate(f, x)) for x in grid) or Q(1)
        for x in grid:
            val = a_k * x**k
            for r in exact_roots:
                val *= 1 - x / r
            worst = max(worst, abs(evaluate(f, x) - val))
        err = worst / scale
        return HadamardReport(k, a_k, [complex(float(r)) for r in exact_roots],
                              float(err), True, [float(x) for x in grid])

    grid = np.linspace(-float(bound), float(bound), 101)
    fvals = npoly.polyval(grid, np.array(f.to_floats()))
    rebuilt = float(a_k) * grid.astype(complex) ** k
    for r in approx:
        rebuilt = rebuilt * (1 - grid / r)
    scale = float(np.max(np.abs(fvals))) or 1.0
    err = float(np.max(np.abs(fvals - rebuilt))) / scale
    return HadamardReport(k, a_k, list(approx), err, False, grid.tolist())
