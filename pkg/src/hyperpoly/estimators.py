"""scikit-learn style wrappers around the exact decision procedures.

A "sample" is one polynomial. ``X`` may be a sequence of :class:`Poly`
objects, coefficient strings, or ascending coefficient lists; a 2-D numeric
array is read row by row, with trailing zero columns trimmed.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import InadmissibleChain
from .fourier import K_of_derivative, extra_critical_zeros, nonreal_count_via_fourier
from .hyperbolicity import extrema_sign_test, ground_truth, inequality_test
from .parsing import parse_polynomial
from .poly import Poly, is_squarefree, require_nonconstant
from .realroots import count_distinct_real_roots, nonreal_count_exact


def _one(item) -> Poly:
    if isinstance(item, Poly):
        return item
    if isinstance(item, str):
        return parse_polynomial(item)
    if isinstance(item, np.ndarray):
        item = item.tolist()
    return Poly(int(c) if isinstance(c, float) and c.is_integer() else c for c in item)


def check_polynomials(X, *, min_degree: int = 1) -> list:
    """Validate ``X`` and return a list of :class:`Poly`.

    Raises ``ValueError`` for an empty batch, ``ZeroPolynomial`` /
    ``ConstantPolynomial`` for degenerate members, and ``ValueError`` when a
    polynomial has degree below ``min_degree``.
    """
    if isinstance(X, (str, Poly)):
        raise ValueError("expected a batch of polynomials, got a single one")
    polys = [_one(item) for item in X]
    if not polys:
        raise ValueError("X contains no polynomials")
    for i, f in enumerate(polys):
        require_nonconstant(f)
        if f.degree < min_degree:
            raise ValueError(f"polynomial #{i} has degree {f.degree} < {min_degree}")
    return polys


_METHODS = {
    "exact": ground_truth,
    "inequality": lambda f: inequality_test(f).passed,
    "extrema": lambda f: extrema_sign_test(f).passed,
}


class HyperbolicityClassifier(ClassifierMixin, BaseEstimator):
    """Predict whether every root is real and simple.

    Nothing is learned: ``fit`` only validates input and records the class
    labels, so ``score(X, y)`` measures how often the chosen ``method``
    agrees with labels ``y`` (for instance, with another method's output).
    """

    def __init__(self, method: str = "exact"):
        self.method = method

    def fit(self, X, y=None):
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {sorted(_METHODS)}, got {self.method!r}")
        check_polynomials(X)
        self.classes_ = np.array([False, True])
        return self

    def predict(self, X):
        check_is_fitted(self, "classes_")
        decide = _METHODS[self.method]
        return np.array([decide(f) for f in check_polynomials(X)], dtype=bool)


class FourierFeatures(TransformerMixin, BaseEstimator):
    """Integer root-count features for each polynomial.

    Columns: degree, distinct real roots, non-real roots, ``K(f')``, extra
    critical zeros, telescoped non-real count. The last three need a
    squarefree input and the last one an admissible derivative chain; where
    unavailable they hold ``fill_value``.
    """

    feature_names = ("degree", "real_distinct", "nonreal", "K_derivative",
                     "extra_critical_zeros", "telescoped_nonreal")

    def __init__(self, fill_value: float = -1):
        self.fill_value = fill_value

    def fit(self, X, y=None):
        check_polynomials(X, min_degree=2)
        self.n_features_out_ = len(self.feature_names)
        return self

    def get_feature_names_out(self, input_features=None):
        return np.array(self.feature_names, dtype=object)

    def _row(self, f: Poly) -> list:
        row = [f.degree, count_distinct_real_roots(f), nonreal_count_exact(f)]
        if not is_squarefree(f):
            return row + [self.fill_value] * 3
        row += [K_of_derivative(f), extra_critical_zeros(f)]
        try:
            row.append(nonreal_count_via_fourier(f))
        except InadmissibleChain:
            row.append(self.fill_value)
        return row

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        return np.array([self._row(f) for f in check_polynomials(X, min_degree=2)],
                        dtype=float)
