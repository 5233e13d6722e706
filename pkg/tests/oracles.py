"""Independent reference computations for the test-suite.

Plain Python lists and Gaussian elimination on the normal equations; nothing
here touches the package's QR/Cholesky code paths.
"""

import math


def gauss_solve(A, b):
    """Solve A x = b by Gaussian elimination with partial pivoting."""
    n = len(A)
    M = [list(map(float, row)) + [float(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(M[r][col]))
        if abs(M[piv][col]) < 1e-300:
            raise ZeroDivisionError("singular system")
        M[col], M[piv] = M[piv], M[col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            for c in range(col, n + 1):
                M[r][c] -= f * M[col][c]
    x = [0.0] * n
    for r in range(n - 1, -1, -1):
        x[r] = (M[r][n] - sum(M[r][c] * x[c] for c in range(r + 1, n))) / M[r][r]
    return x


def gauss_inverse(A):
    n = len(A)
    cols = [gauss_solve(A, [1.0 if i == j else 0.0 for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def normal_equation_ols(y, X):
    """Coefficients, standard errors and residuals from (X'X) b = X'y.

    ``X`` is a list of rows and must already contain any constant column.
    """
    n, k = len(X), len(X[0])
    XtX = [[sum(X[t][i] * X[t][j] for t in range(n)) for j in range(k)] for i in range(k)]
    Xty = [sum(X[t][i] * y[t] for t in range(n)) for i in range(k)]
    b = gauss_solve(XtX, Xty)
    resid = [y[t] - sum(X[t][i] * b[i] for i in range(k)) for t in range(n)]
    s2 = sum(e * e for e in resid) / (n - k)
    inv = gauss_inverse(XtX)
    se = [math.sqrt(s2 * inv[i][i]) for i in range(k)]
    return b, se, resid


def df_design(y):
    """Rows [1, y_{t-1}] and targets dy_t for the lags=0 intercept DF regression."""
    return [y[t] - y[t - 1] for t in range(1, len(y))], [[1.0, y[t - 1]] for t in range(1, len(y))]


def df_tstat(y):
    dy, X = df_design(y)
    b, se, _ = normal_equation_ols(dy, X)
    return b[1] / se[1]


def pp_zt(y, bandwidth):
    """Phillips-Perron Z_t written out term by term."""
    dy, X = df_design(y)
    b, se, u = normal_equation_ols(dy, X)
    T = len(u)
    t_rho = b[1] / se[1]
    g0 = sum(e * e for e in u) / T
    lrv = g0
    for j in range(1, bandwidth + 1):
        gj = sum(u[t] * u[t - j] for t in range(j, T)) / T
        lrv += 2 * (1 - j / (bandwidth + 1)) * gj
    s = math.sqrt(sum(e * e for e in u) / (T - 2))
    return math.sqrt(g0 / lrv) * t_rho - 0.5 * (lrv - g0) / math.sqrt(lrv) * T * se[1] / s
