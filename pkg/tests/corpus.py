"""Deterministic polynomial corpus shared by the test modules.

Every member has degree 2..10 and rational coefficients in [-9, 9]. Most are
plain random draws; a slice is engineered to contain a repeated real root and
another slice is built from distinct rational roots, so that both "true" and
"repeated root" verdicts are well represented.
"""

import random
from fractions import Fraction

from hyperpoly.poly import Poly

SEED = 20240611
LIMIT = 9


def _in_range(f: Poly) -> bool:
    return all(abs(c) <= LIMIT for c in f.coeffs)


def _random_coeff(rng):
    q = rng.randint(1, 4)
    return Fraction(rng.randint(-LIMIT * q, LIMIT * q), q)


def random_poly(rng, degree):
    cs = [_random_coeff(rng) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = _random_coeff(rng)
    return Poly(cs + [lead])


def repeated_root_poly(rng):
    while True:
        r = Fraction(rng.randint(-4, 4), rng.randint(1, 2))
        mult = rng.choice([2, 2, 2, 3])
        rest = random_poly(rng, rng.randint(0, 10 - mult)) if rng.random() < 0.8 else Poly([1])
        f = Poly.from_roots([r] * mult) * rest
        if 2 <= f.degree <= 10 and _in_range(f):
            return f


def rooted_poly(rng):
    while True:
        n = rng.randint(2, 5)
        roots = set()
        while len(roots) < n:
            roots.add(Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
        f = Poly.from_roots(sorted(roots), leading=rng.choice([1, -1, 2, Fraction(1, 2)]))
        if _in_range(f):
            return f


def build_corpus(size=500, seed=SEED):
    rng = random.Random(seed)
    out = []
    for i in range(size):
        if i % 10 == 7:
            out.append(repeated_root_poly(rng))
        elif i % 10 == 3:
            out.append(rooted_poly(rng))
        else:
            out.append(random_poly(rng, rng.randint(2, 10)))
    return out


CORPUS = build_corpus()
