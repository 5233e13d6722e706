"""Numerical primitives: QR least squares, Bartlett long-run variance, and a
Cholesky-reduced symmetric generalized eigensolver."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy import linalg as sla
from scipy import stats

from .exceptions import DecompositionError, InsufficientDataError, SingularDesignError


@dataclass(frozen=True, eq=False)
class OlsFit:
    """Least-squares estimates and their usual small-sample statistics.

    When the design includes an intercept it is ``coefficients[0]``.
    ``p_values`` are two-sided Student-t with ``n_obs - n_params`` degrees of
    freedom. ``t_stats`` and ``p_values`` are NaN where a standard error is 0.
    """

    coefficients: np.ndarray
    std_errors: np.ndarray
    t_stats: np.ndarray
    p_values: np.ndarray
    r_squared: float
    adj_r_squared: float
    residuals: np.ndarray = field(repr=False)
    n_obs: int
    n_params: int
    intercept: bool = True

    @property
    def df_resid(self) -> int:
        return self.n_obs - self.n_params

    @property
    def ssr(self) -> float:
        return float(self.residuals @ self.residuals)

    @property
    def sigma(self) -> float:
        """Residual standard error, ``sqrt(SSR / (n - k))``."""
        return math.sqrt(self.ssr / self.df_resid)


def _as_design(X, n: int, intercept: bool) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2:
        raise ValueError("X must be 1-D or 2-D")
    if X.shape[0] != n:
        raise ValueError(f"X has {X.shape[0]} rows but y has {n} elements")
    if intercept:
        X = np.column_stack([np.ones(n), X])
    return X


def _check_rank(R: np.ndarray, shape) -> None:
    d = np.abs(np.diag(R))
    tol = max(shape) * np.finfo(float).eps * (d.max() if d.size else 0.0)
    if d.size < shape[1] or d.size == 0 or np.any(d <= tol):
        raise SingularDesignError("design matrix does not have full column rank")


def ols_fit(y, X, intercept: bool = True) -> OlsFit:
    """Ordinary least squares through a Householder QR factorisation.

    Parameters
    ----------
    y : array-like, shape (n,)
    X : array-like, shape (n,) or (n, k)
        Regressors, without the constant column.
    intercept : bool
        Prepend a column of ones.
    """
    y = np.asarray(y, dtype=float).reshape(-1)
    n = y.size
    X = _as_design(X, n, intercept)
    p = X.shape[1]
    if n < p:
        raise InsufficientDataError(f"{n} observations for {p} parameters")
    Q, R = np.linalg.qr(X, mode="reduced")
    _check_rank(R, X.shape)
    if n == p:
        raise InsufficientDataError(f"{n} observations leave no residual degrees of freedom")

    beta = sla.solve_triangular(R, Q.T @ y)
    resid = y - X @ beta
    ssr = float(resid @ resid)
    df = n - p
    sigma2 = ssr / df
    Rinv = sla.solve_triangular(R, np.eye(p))
    se = np.sqrt(sigma2 * np.sum(Rinv**2, axis=1))

    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(se > 0, beta / np.where(se > 0, se, 1.0), np.nan)
    pvals = np.where(np.isnan(t), np.nan, 2.0 * stats.t.sf(np.abs(t), df))

    if intercept:
        sst = float(np.sum((y - y.mean()) ** 2))
        dof_tot = n - 1
    else:
        sst = float(y @ y)
        dof_tot = n
    if sst > 0:
        r2 = 1.0 - ssr / sst
        adj = 1.0 - (ssr / df) / (sst / dof_tot)
    else:
        r2 = adj = float("nan")

    return OlsFit(
        coefficients=beta,
        std_errors=se,
        t_stats=t,
        p_values=pvals,
        r_squared=r2,
        adj_r_squared=adj,
        residuals=resid,
        n_obs=n,
        n_params=p,
        intercept=intercept,
    )


def residualize(Z: np.ndarray, X: Optional[np.ndarray]) -> np.ndarray:
    """Residuals of every column of ``Z`` regressed on ``X`` (no intercept added)."""
    Z = np.asarray(Z, dtype=float)
    if X is None or X.shape[1] == 0:
        return Z.copy()
    Q, R = np.linalg.qr(X, mode="reduced")
    _check_rank(R, X.shape)
    return Z - Q @ (Q.T @ Z)


def default_bandwidth(n_obs: int) -> int:
    """Automatic Bartlett bandwidth ``floor(4 * (T/100)^(2/9))``."""
    return int(math.floor(4.0 * (n_obs / 100.0) ** (2.0 / 9.0)))


def newey_west_lrv(u, bandwidth: Optional[int] = None) -> float:
    """Long-run variance of ``u`` with Bartlett weights.

    Autocovariances are uncentered and divided by T: the input is expected to be
    regression residuals that already have mean zero.
    """
    u = np.asarray(u, dtype=float).reshape(-1)
    T = u.size
    if bandwidth is None:
        bandwidth = default_bandwidth(T)
    if bandwidth < 0:
        raise ValueError("bandwidth must be non-negative")
    if bandwidth >= T:
        raise InsufficientDataError(f"bandwidth {bandwidth} needs more than {bandwidth} observations")
    lrv = float(u @ u) / T
    for j in range(1, bandwidth + 1):
        gamma_j = float(u[j:] @ u[:-j]) / T
        lrv += 2.0 * (1.0 - j / (bandwidth + 1.0)) * gamma_j
    return lrv


@dataclass(frozen=True, eq=False)
class EigenPair:
    eigenvalue: float
    eigenvector: np.ndarray


def solve_gev(A, B, symmetry_tol: float = 1e-8) -> List[EigenPair]:
    """All solutions of ``A v = lambda B v`` for symmetric A and SPD B.

    B = L L' is factored, the problem becomes the ordinary symmetric problem for
    ``L^-1 A L^-T``, and eigenvectors are mapped back with ``L^-T``. Returned
    pairs are sorted by descending eigenvalue; vectors are B-orthonormal.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape != B.shape:
        raise ValueError("A and B must be square matrices of the same size")
    for name, M in (("A", A), ("B", B)):
        scale = max(1.0, np.abs(M).max())
        if np.abs(M - M.T).max() > symmetry_tol * scale:
            raise ValueError(f"{name} is not symmetric")
    try:
        L = np.linalg.cholesky(0.5 * (B + B.T))
    except np.linalg.LinAlgError as exc:
        raise DecompositionError("B is not positive definite") from exc
    Y = sla.solve_triangular(L, 0.5 * (A + A.T), lower=True)
    C = sla.solve_triangular(L, Y.T, lower=True)
    w, V = np.linalg.eigh(0.5 * (C + C.T))
    vecs = sla.solve_triangular(L.T, V, lower=False)
    order = np.argsort(w)[::-1]
    return [EigenPair(float(w[i]), vecs[:, i].copy()) for i in order]
