"""Spectral factorization of nonnegative cosine polynomials."""
from __future__ import annotations

import numpy as np
from scipy.optimize import least_squares, minimize_scalar


class NotNonnegativeError(ValueError):
    def __init__(self, theta: float, value: float):
        super().__init__(f"cosine polynomial is negative at theta={theta:.12g} (value {value:.3g})")
        self.theta = theta
        self.value = value


def cosine_polynomial(coeffs, theta):
    """``coeffs[0] + 2 * sum_k coeffs[k] cos(k theta)``."""
    coeffs = np.asarray(coeffs, dtype=float)
    k = np.arange(1, coeffs.size)
    theta = np.asarray(theta, dtype=float)
    return coeffs[0] + 2.0 * np.cos(np.multiply.outer(theta, k)) @ coeffs[1:]


def min_cosine_polynomial(coeffs, grid: int = 4096) -> tuple[float, float]:
    """Global minimum over ``[0, pi]``: dense grid followed by bounded refinement around grid minima."""
    thetas = np.linspace(0.0, np.pi, grid)
    vals = cosine_polynomial(coeffs, thetas)
    best_t, best_v = float(thetas[np.argmin(vals)]), float(vals.min())
    step = thetas[1] - thetas[0]
    interior = np.flatnonzero((vals[1:-1] < vals[:-2]) & (vals[1:-1] <= vals[2:])) + 1
    for i in list(interior) + [0, grid - 1]:
        lo, hi = max(0.0, thetas[i] - step), min(np.pi, thetas[i] + step)
        res = minimize_scalar(lambda t: float(cosine_polynomial(coeffs, t)), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-13})
        if res.fun < best_v:
            best_t, best_v = float(res.x), float(res.fun)
    return best_v, best_t


def autocorrelation(c) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    return np.array([c[: c.size - k] @ c[k:] for k in range(c.size)])


def fejer_riesz_factor(coeffs, tol: float = 1e-9) -> np.ndarray:
    """Real ``c`` with ``coeffs[k] == sum_j c[j] c[j + k]`` for a nonnegative cosine polynomial.

    ``coeffs`` are autocorrelation coefficients: the polynomial is
    ``coeffs[0] + 2 sum_k coeffs[k] cos(k theta)``. The factor has all its roots
    in the closed unit disk and is refined by least squares.

    Raises
    ------
    NotNonnegativeError
        If the polynomial dips below ``-tol`` times the largest coefficient.
    """
    a = np.asarray(coeffs, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise ValueError("need a non-empty coefficient vector")
    scale = max(1.0, float(np.max(np.abs(a))))
    # negligible top coefficients make the root finder overflow
    while a.size > 1 and abs(a[-1]) <= 1e-14 * scale:
        a = a[:-1]
    vmin, tmin = min_cosine_polynomial(a)
    if vmin < -tol * scale:
        raise NotNonnegativeError(tmin, vmin)
    m = a.size - 1
    if m == 0:
        return np.array([np.sqrt(max(a[0], 0.0))])
    laurent = np.concatenate([a[::-1], a[1:]])  # z^m L(z), highest degree first
    roots = np.roots(laurent)
    roots = roots[np.argsort(np.abs(roots))][:m]
    c = np.real(np.poly(roots))
    c *= np.sqrt(max(a[0], 0.0) / max(float(c @ c), 1e-300))
    res = least_squares(lambda x: autocorrelation(x) - a, c, xtol=1e-15, ftol=1e-15, gtol=1e-15)
    c = res.x
    if np.sum(c) < 0:
        c = -c
    return c
