"""scikit-learn compatible wrappers around the demand regression and the
log / per-capita preprocessing, so they slot into ``Pipeline`` and friends."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .exceptions import DomainError
from .kernels import ols_fit
from .rebound import Convention, pre_from_coefficients


def make_lagged_design(X, y, dep_lag: int = 2):
    """Append ``y_{t-dep_lag}`` to time-ordered rows of X and trim the first rows.

    Returns ``(X_aug, y_trim)`` ready for :class:`VkmDemandRegressor`.
    """
    X, y = check_X_y(X, y, y_numeric=True)
    if dep_lag < 1 or dep_lag >= len(y):
        raise ValueError(f"dep_lag must be in [1, {len(y) - 1}]")
    X_aug = np.column_stack([X[dep_lag:], y[:-dep_lag]])
    return X_aug, y[dep_lag:]


class VkmDemandRegressor(RegressorMixin, BaseEstimator):
    """Log-log travel demand regression with rebound conversion.

    ``X`` columns are ``[lnY, lnP, lnV, lnVKM_lagged]`` (see
    :func:`make_lagged_design`); ``y`` is ``lnVKM``. After fitting,
    ``pre_`` holds the short/long-run PRE under ``convention``.

    Parameters
    ----------
    convention : {"reported", "eq-algebra"}
    price_index : int
        Column of X holding the log fuel price.
    """

    def __init__(self, convention="reported", price_index=1):
        self.convention = convention
        self.price_index = price_index

    def fit(self, X, y):
        X, y = check_X_y(X, y, y_numeric=True)
        if X.shape[1] < 2:
            raise ValueError("X needs at least a price column and the lagged dependent column")
        Convention(self.convention)
        fit = ols_fit(y, X, intercept=True)
        self.ols_ = fit
        self.intercept_ = float(fit.coefficients[0])
        self.coef_ = fit.coefficients[1:].copy()
        self.n_features_in_ = X.shape[1]
        self.price_elasticity_ = float(self.coef_[self.price_index])
        self.lag_coef_ = float(self.coef_[-1])
        self.pre_ = pre_from_coefficients(self.price_elasticity_, self.lag_coef_, self.convention)
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = check_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return self.intercept_ + X @ self.coef_


class LogPerCapitaTransformer(TransformerMixin, BaseEstimator):
    """Divide selected columns by a population column, then take natural logs.

    Parameters
    ----------
    per_capita : sequence of int
        Columns to divide by population.
    population_index : int or None
        Column holding population; it is dropped from the output.
    """

    def __init__(self, per_capita=(), population_index=None):
        self.per_capita = per_capita
        self.population_index = population_index

    def fit(self, X, y=None):
        X = check_array(X)
        if self.per_capita and self.population_index is None:
            raise ValueError("per_capita columns need population_index")
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_array(X, copy=True)
        keep = list(range(X.shape[1]))
        if self.population_index is not None:
            pop = X[:, self.population_index]
            if np.any(pop <= 0):
                raise DomainError("population must be strictly positive")
            for j in self.per_capita:
                X[:, j] = X[:, j] / pop
            keep.remove(self.population_index)
        X = X[:, keep]
        if np.any(X <= 0):
            row, col = np.argwhere(X <= 0)[0]
            raise DomainError(f"log of non-positive value at row {row}, column {keep[col]}")
        return np.log(X)
