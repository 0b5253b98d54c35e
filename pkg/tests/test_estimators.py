import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from hyperpoly.errors import ConstantPolynomial
from hyperpoly.estimators import FourierFeatures, HyperbolicityClassifier, check_polynomials
from hyperpoly.poly import Poly

from corpus import CORPUS

SAMPLE = CORPUS[:60]


class TestValidation:
    def test_accepts_mixed_inputs(self):
        polys = check_polynomials([Poly([1, 1]), "1,0,1", [0, -1, 0, 1], np.array([2.0, 1.0, 0.0])])
        assert [f.degree for f in polys] == [1, 2, 3, 1]

    def test_array_rows(self):
        polys = check_polynomials(np.array([[1, 0, 1], [-1, 0, 1]]))
        assert polys[1] == Poly([-1, 0, 1])

    def test_rejections(self):
        with pytest.raises(ValueError):
            check_polynomials([])
        with pytest.raises(ValueError):
            check_polynomials("1,0,1")
        with pytest.raises(ConstantPolynomial):
            check_polynomials([[3]])
        with pytest.raises(ValueError):
            check_polynomials([[1, 1]], min_degree=2)


class TestClassifier:
    def test_params(self):
        clf = HyperbolicityClassifier(method="inequality")
        assert clf.get_params() == {"method": "inequality"}
        assert clone(clf).set_params(method="extrema").method == "extrema"

    def test_unfitted(self):
        with pytest.raises(NotFittedError):
            HyperbolicityClassifier().predict(["1,0,1"])

    def test_bad_method(self):
        with pytest.raises(ValueError):
            HyperbolicityClassifier(method="guess").fit(["1,0,1"])

    def test_predictions(self):
        clf = HyperbolicityClassifier().fit(["1,0,1"])
        assert clf.predict(["0,-1,0,1", "1,0,1"]).tolist() == [True, False]

    @pytest.mark.parametrize("method", ["inequality", "extrema"])
    def test_methods_agree_with_exact(self, method):
        truth = HyperbolicityClassifier().fit(SAMPLE).predict(SAMPLE)
        assert HyperbolicityClassifier(method=method).fit(SAMPLE).score(SAMPLE, truth) == 1.0


class TestFeatures:
    def test_columns(self):
        ff = FourierFeatures().fit(["1,0,1"])
        X = ff.transform(["1,0,1", "0,-1,0,1", "1,0,0,0,1", "1,-2,1"])
        assert X.tolist() == [
            [2, 0, 2, 1, 2, 2],
            [3, 3, 0, 0, 0, 0],
            [4, 0, 4, 2, 4, -1],
            [2, 1, 0, -1, -1, -1],
        ]
        assert list(ff.get_feature_names_out())[2] == "nonreal"

    def test_fill_value(self):
        X = FourierFeatures(fill_value=np.nan).fit_transform(["1,-2,1"])
        assert np.isnan(X[0, 3:]).all()

    def test_pipeline(self):
        from sklearn.preprocessing import FunctionTransformer
        pipe = make_pipeline(FourierFeatures(), FunctionTransformer(lambda X: X[:, 2] == 0))
        out = pipe.fit_transform(SAMPLE)
        truth = HyperbolicityClassifier().fit(SAMPLE).predict(SAMPLE)
        # no non-real roots is necessary for real-rootedness, not sufficient
        assert np.all(out[truth])
