import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.utils.validation import NotFittedError

from pollrebound.estimators import LogPerCapitaTransformer, VkmDemandRegressor, make_lagged_design
from pollrebound.exceptions import DomainError
from pollrebound.rebound import fit_vkm_model
from pollrebound.synth import GenSpec, gen_vkm_dataset


@pytest.fixture
def data():
    return gen_vkm_dataset(GenSpec("vkm-model", 40, 8))


def test_matches_functional_fit(data):
    X, y = make_lagged_design(data.matrix(["lnY", "lnP", "lnV"]), data["lnVKM"].values, 2)
    est = VkmDemandRegressor().fit(X, y)
    ref = fit_vkm_model(data)
    np.testing.assert_allclose(est.coef_, ref.ols.coefficients[1:], rtol=1e-12)
    assert est.intercept_ == pytest.approx(ref.lambda_0, rel=1e-12)
    assert est.pre_.short_run == pytest.approx(-ref.lambda_P - 1, rel=1e-12)
    assert est.score(X, y) == pytest.approx(ref.ols.r_squared, rel=1e-12)


def test_params_and_clone():
    est = VkmDemandRegressor(convention="eq-algebra")
    assert est.get_params() == {"convention": "eq-algebra", "price_index": 1}
    assert clone(est).convention == "eq-algebra"


def test_not_fitted():
    with pytest.raises(NotFittedError):
        VkmDemandRegressor().predict(np.ones((3, 4)))


def test_bad_convention(data):
    X, y = make_lagged_design(data.matrix(["lnY", "lnP", "lnV"]), data["lnVKM"].values)
    with pytest.raises(ValueError):
        VkmDemandRegressor(convention="nope").fit(X, y)


def test_transformer_in_pipeline(data):
    pop = data["population"].values
    raw = np.column_stack(
        [np.exp(data["lnY"].values) * pop, np.exp(data["lnP"].values), np.exp(data["lnV"].values), pop]
    )
    tr = LogPerCapitaTransformer(per_capita=[0], population_index=3)
    logs = tr.fit_transform(raw)
    np.testing.assert_allclose(logs, data.matrix(["lnY", "lnP", "lnV"]), atol=1e-12)
    X, y = make_lagged_design(logs, data["lnVKM"].values)
    model = make_pipeline(VkmDemandRegressor())
    model.fit(X, y)
    assert model.predict(X).shape == y.shape


def test_transformer_rejects_nonpositive():
    tr = LogPerCapitaTransformer().fit(np.ones((2, 2)))
    with pytest.raises(DomainError):
        tr.transform(np.array([[1.0, 0.0], [1.0, 1.0]]))


def test_lagged_design_shapes():
    X, y = make_lagged_design(np.arange(20.0).reshape(10, 2), np.arange(10.0), 3)
    assert X.shape == (7, 3) and y.shape == (7,)
    assert list(X[:, -1]) == list(range(7))
