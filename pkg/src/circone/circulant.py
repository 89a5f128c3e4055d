"""Cyclic vectors, circulant matrices and the real symmetric Fourier matrix.

Conventions
-----------
* ``circ(a)[i, j] = a[(j - i) % d]``.
* ``convolve(a, b)[k] = sum_j a[j] * b[(k - j) % d]``.
* ``reverse(a)[i] = a[(-i) % d]``.
* ``dft(a)[k] = d**-0.5 * sum_j exp(2j*pi*j*k/d) * a[j]``, so the eigenvalues of
  ``circ(a)`` are ``sqrt(d) * dft(a)``.

The DFT is evaluated directly in O(d^2) with exactly reduced phases; the sizes
handled here are small and the exact zeros matter more than speed.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .constants import DEFAULT_TOL, cos_rational, sin_rational


def as_cyc(a, dtype=None) -> np.ndarray:
    """Validate and copy a cyclic vector."""
    arr = np.array(a, dtype=dtype)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"expected a non-empty 1-d vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector has non-finite entries")
    if dtype is None and not np.iscomplexobj(arr):
        arr = arr.astype(float)
    return arr


def _same_length(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")


def circ(a) -> np.ndarray:
    """Dense circulant matrix with first row ``a``."""
    a = as_cyc(a)
    d = a.size
    idx = (np.arange(d)[None, :] - np.arange(d)[:, None]) % d
    return a[idx]


def convolve(a, b) -> np.ndarray:
    """Cyclic convolution, computed directly."""
    a, b = as_cyc(a), as_cyc(b)
    _same_length(a, b)
    d = a.size
    idx = (np.arange(d)[:, None] - np.arange(d)[None, :]) % d  # idx[k, j] = k - j
    return b[idx] @ a


def reverse(a) -> np.ndarray:
    a = as_cyc(a)
    return a[(-np.arange(a.size)) % a.size]


def shift(a, k: int) -> np.ndarray:
    """``shift(a, k)[i] = a[i - k]``."""
    a = as_cyc(a)
    return np.roll(a, k)


def hermitian_autocorr(x, y) -> np.ndarray:
    """``x * reverse(y)``; for ``y = conj(x)`` this is the Hermitian autocorrelation of ``x``.

    Entry ``k`` equals ``sum_j x[j] * y[j - k]``. Every summand of the separable
    decompositions used in :mod:`circone.tcp` has this form.
    """
    return convolve(x, reverse(y))


@lru_cache(maxsize=64)
def _fourier(d: int) -> np.ndarray:
    jk = np.outer(np.arange(d), np.arange(d)) % d
    re = np.vectorize(lambda m: cos_rational(int(m), d))(jk)
    im = np.vectorize(lambda m: sin_rational(int(m), d))(jk)
    f = (re + 1j * im) / np.sqrt(d)
    f.setflags(write=False)
    return f


def fourier_matrix(d: int) -> np.ndarray:
    """Unitary matrix ``F[j, k] = exp(2*pi*i*j*k/d) / sqrt(d)``."""
    if d < 1:
        raise ValueError("d must be positive")
    return _fourier(d).copy()


def dft(a) -> np.ndarray:
    a = as_cyc(a)
    return _fourier(a.size) @ a


def idft(a) -> np.ndarray:
    a = as_cyc(a)
    return _fourier(a.size).conj() @ a


def circ_eigenvalues(a) -> np.ndarray:
    """Eigenvalues of ``circ(a)``, indexed by Fourier mode."""
    a = as_cyc(a)
    return np.sqrt(a.size) * dft(a)


def real_if_close(z: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    z = np.asarray(z)
    if np.iscomplexobj(z) and np.all(np.abs(z.imag) <= tol * max(1.0, float(np.max(np.abs(z))))):
        return z.real.copy()
    return z


def support(a, tol: float = DEFAULT_TOL) -> tuple[int, ...]:
    """Indices whose entry exceeds ``tol`` times the largest magnitude (absolute if that is < 1)."""
    a = np.asarray(a)
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    return tuple(int(i) for i in np.flatnonzero(np.abs(a) > tol * scale))


# -- real symmetric subspace -------------------------------------------------

def sym_dim(d: int) -> int:
    """Dimension ``1 + d // 2`` of the reflection-symmetric subspace of R^d."""
    return 1 + d // 2


def is_symmetric(a, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a)
    scale = max(1.0, float(np.max(np.abs(a))))
    return bool(np.all(np.abs(a - reverse(a)) <= tol * scale))


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    """``a == conj(reverse(a))``, i.e. ``circ(a)`` is a Hermitian matrix."""
    a = np.asarray(a)
    scale = max(1.0, float(np.max(np.abs(a))))
    return bool(np.all(np.abs(a - np.conj(reverse(a))) <= tol * scale))


def symmetric_basis(d: int) -> np.ndarray:
    """Columns: e_0, (e_i + e_-i)/sqrt(2) for 0 < i < d/2, and e_{d/2} for even d."""
    n = sym_dim(d)
    basis = np.zeros((d, n))
    basis[0, 0] = 1.0
    for i in range(1, n):
        if 2 * i == d:
            basis[i, i] = 1.0
        else:
            basis[i, i] = basis[d - i, i] = 1.0 / np.sqrt(2.0)
    return basis


def sym_restrict(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Coordinates of a real symmetric vector in :func:`symmetric_basis`.

    Raises ``ValueError`` if ``a`` is not real and reflection-symmetric.
    """
    a = real_if_close(as_cyc(a), tol)
    if np.iscomplexobj(a):
        raise ValueError("symmetric vectors must be real")
    if not is_symmetric(a, tol):
        raise ValueError(f"vector is not reflection-symmetric: {a}")
    return symmetric_basis(a.size).T @ a


def sym_embed(r, d: int) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if r.shape != (sym_dim(d),):
        raise ValueError(f"expected {sym_dim(d)} reduced coordinates for d={d}, got {r.shape}")
    return symmetric_basis(d) @ r


@lru_cache(maxsize=64)
def _g_matrix(d: int) -> np.ndarray:
    n = sym_dim(d)
    half = d % 2 == 0
    g = np.zeros((n, n))
    rd = np.sqrt(d)
    for i in range(n):
        for j in range(n):
            i_edge = i == 0 or (half and i == n - 1)
            j_edge = j == 0 or (half and j == n - 1)
            c = cos_rational(i * j, d)
            if i_edge and j_edge:
                g[i, j] = c / rd
            elif i_edge or j_edge:
                g[i, j] = np.sqrt(2.0) * c / rd
            else:
                g[i, j] = 2.0 * c / rd
    g.setflags(write=False)
    return g


def g_matrix(d: int) -> np.ndarray:
    """The DFT restricted to the real symmetric subspace, in :func:`symmetric_basis`.

    Symmetric, real, and an involution. A symmetric vector ``a`` satisfies
    ``g_matrix(d) @ sym_restrict(a) == sym_restrict(dft(a))``.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    return _g_matrix(d).copy()


def symmetric_dft(a) -> np.ndarray:
    """Real DFT of a real symmetric vector, returned in R^d."""
    a = np.asarray(a, dtype=float)
    return sym_embed(_g_matrix(a.size) @ sym_restrict(a), a.size)


def cos_modes(d: int) -> np.ndarray:
    """Rows ``m``: the real Fourier mode ``cos(2*pi*m*k/d)`` over ``k``."""
    jk = np.outer(np.arange(d), np.arange(d)) % d
    return np.vectorize(lambda m: cos_rational(int(m), d))(jk).astype(float)
