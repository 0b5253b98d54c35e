"""Floating-point cross-check: all complex roots by Aberth-Ehrlich iteration.

Nothing here feeds an exact verdict. The exact counts in
:mod:`hyperpoly.realroots` stay the arbiter; this module exists so they can be
compared against an unrelated method.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from .errors import AmbiguousClassification, ConstantPolynomial, NoConvergence
from .poly import Poly, require_nonconstant

MAX_DEGREE = 64
ANGLE_OFFSET = 0.4
NOISE_RATIO = 1e-3


@dataclass(frozen=True)
class ComplexRoot:
    location: complex
    residual: float

    @property
    def re(self) -> float:
        return self.location.real

    @property
    def im(self) -> float:
        return self.location.imag


def _backward_error(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    # normwise: |f(z)| / (max |a_k| * sum |z|^k), coefficients descending.
    # The componentwise variant degenerates at a root z = 0 when a_0 = 0.
    num = np.abs(np.polyval(coeffs, z))
    den = np.max(np.abs(coeffs)) * np.polyval(np.ones(len(coeffs)), np.abs(z))
    return num / den


def _initial_guesses(coeffs: np.ndarray) -> np.ndarray:
    n = len(coeffs) - 1
    radius = 1.0 + np.max(np.abs(coeffs[1:] / coeffs[0]))
    k = np.arange(n)
    return radius * np.exp(1j * (2 * np.pi * k / n + ANGLE_OFFSET))


def aberth(coeffs: np.ndarray, tol: float = 1e-14, max_iter: int = 200) -> np.ndarray:
    """Roots of the polynomial with descending float ``coeffs``."""
    coeffs = np.asarray(coeffs, dtype=complex)
    coeffs = coeffs / coeffs[0]
    n = len(coeffs) - 1
    if n == 1:
        return np.array([-coeffs[1]])
    dcoeffs = np.polyder(coeffs)
    z = _initial_guesses(coeffs)
    eye = np.eye(n, dtype=bool)
    for _ in range(max_iter):
        p = np.polyval(coeffs, z)
        dp = np.polyval(dcoeffs, z)
        ratio = np.divide(p, dp, out=np.zeros_like(p), where=dp != 0)
        diff = z[:, None] - z[None, :]
        diff[eye] = 1.0
        inv = 1.0 / diff
        inv[eye] = 0.0
        repulsion = inv.sum(axis=1)
        step = ratio / (1.0 - ratio * repulsion)
        step[p == 0] = 0.0
        z = z - step
        if np.all(np.abs(step) <= tol * np.maximum(np.abs(z), 1.0)):
            return z
    if np.all(_backward_error(coeffs, z) < 1e-12):
        return z
    raise NoConvergence(f"Aberth iteration did not converge in {max_iter} steps")


def all_roots_float(f: Poly, tol: float = 1e-10, max_iter: int = 200) -> List[ComplexRoot]:
    """All ``deg(f)`` complex roots, sorted by (real, imaginary) part.

    ``residual`` is the normwise backward error
    ``|f(z)| / (max |a_k| * sum |z|^k)``. Raises
    :class:`NoConvergence` when any residual exceeds ``tol``.
    """
    require_nonconstant(f)
    if f.degree > MAX_DEGREE:
        raise ValueError(f"degree {f.degree} exceeds the oracle cap of {MAX_DEGREE}")
    coeffs = np.array(f.to_floats()[::-1], dtype=float)
    z = aberth(coeffs, max_iter=max_iter)
    res = _backward_error(coeffs.astype(complex), z)
    if np.any(res > tol):
        raise NoConvergence(f"max residual {res.max():.3g} exceeds {tol:g}")
    order = np.lexsort((z.imag, z.real))
    return [ComplexRoot(complex(z[i]), float(res[i])) for i in order]


def oracle_nonreal_count(f: Poly, imag_tol: float = 1e-6) -> int:
    """Count roots with ``|im| >= 10 * imag_tol``.

    Imaginary parts below ``NOISE_RATIO * imag_tol`` are read as rounding
    noise on a real root. Anything between that floor and ``10 * imag_tol``
    is too close to call and raises :class:`AmbiguousClassification`. So do
    two roots closer than ``10 * imag_tol`` (a near-double root can hide a
    conjugate pair as two real roots) and an odd count.
    """
    if f.is_constant:
        raise ConstantPolynomial()
    roots = all_roots_float(f, tol=1e-8)
    z = np.array([r.location for r in roots])
    if len(z) > 1:
        gaps = np.abs(z[:, None] - z[None, :]) / np.maximum(1.0, np.abs(z))[:, None]
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < 10 * imag_tol:
            raise AmbiguousClassification("roots cluster within the guard distance")
    count = 0
    for r in roots:
        y = abs(r.im)
        if y < NOISE_RATIO * imag_tol:
            continue
        if y < 10 * imag_tol:
            raise AmbiguousClassification(
                f"root {r.location} has |im| inside the guard band")
        count += 1
    if count % 2:
        raise AmbiguousClassification("odd non-real count; conjugate pairing broken")
    return count


def conjugate_defect(roots: List[ComplexRoot]) -> float:
    """Largest distance from a root to the nearest conjugate in the set (itself included)."""
    z = np.array([r.location for r in roots])
    worst = 0.0
    for w in z:
        worst = max(worst, float(np.min(np.abs(z - np.conj(w)))))
    return worst


def eval_float(f: Poly, z) -> complex:
    acc = 0j
    for c in reversed(f.coeffs):
        acc = acc * z + float(c)
    return acc


def vieta_errors(f: Poly, roots: List[ComplexRoot]) -> tuple:
    """Relative errors of the root sum and product against the coefficients."""
    cs = f.to_floats()
    n = len(cs) - 1
    z = [r.location for r in roots]
    want_sum = -cs[n - 1] / cs[n]
    want_prod = (-1) ** n * cs[0] / cs[n]
    got_sum = sum(z)
    got_prod = complex(np.prod(z))
    e_sum = abs(got_sum - want_sum) / max(1.0, abs(want_sum))
    e_prod = abs(got_prod - want_prod) / max(1.0, abs(want_prod))
    return e_sum, e_prod

