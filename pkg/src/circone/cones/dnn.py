"""Positive-semidefinite, entrywise-nonnegative and doubly nonnegative circulants."""
from __future__ import annotations

import math

import numpy as np

from ..certificates import ConeVerdict, Witness, member, not_member
from ..circulant import cos_modes, fourier_matrix, g_matrix, sym_embed, sym_restrict, support
from ..constants import DEFAULT_TOL, DNN_TABLES
from ..spc import RayRecord, enumerate_extremal_rays
from .families import Ray, sym_unit

MAX_ENUM_D = 16


def circ_psd_extremal(d: int, k: int) -> np.ndarray:
    """Inverse-DFT column ``k``: the rank-one circulant whose only nonzero eigenvalue sits at mode ``k``."""
    if not 0 <= k < d:
        raise ValueError(f"mode {k} out of range for d={d}")
    return fourier_matrix(d).conj()[:, k]


def circ_ewp_extremal(d: int, k: int) -> np.ndarray:
    if not 0 <= k < d:
        raise ValueError(f"index {k} out of range for d={d}")
    e = np.zeros(d)
    e[k] = 1.0
    return e


def as_symmetric(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Real symmetric copy of ``a``; raises ``ValueError`` otherwise."""
    return sym_embed(sym_restrict(a, tol), np.asarray(a).size)


def _scale(a: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(a))))


def dnn_witness(a, tol: float = DEFAULT_TOL) -> Witness | None:
    """Most negative coordinate or Fourier witness, or ``None`` if ``a`` is doubly nonnegative.

    Coordinate witnesses are ``e_i + e_-i``; Fourier witnesses are real cosine
    modes, which are positive semidefinite circulants. Both are copositive.
    """
    a = np.asarray(a, dtype=float)
    d = a.size
    s = _scale(a)
    best: Witness | None = None
    for i in range(d // 2 + 1):
        w = sym_unit(d, i)
        p = float(w @ a)
        if p < -tol * s and (best is None or p < best.pairing):
            best = Witness(w, p, f"coordinate {i}")
    modes = cos_modes(d)
    for m in range(d // 2 + 1):
        p = float(modes[m] @ a)
        if p < -tol * s and (best is None or p < best.pairing):
            best = Witness(modes[m].copy(), p, f"fourier mode {m}")
    return best


def dnn_member(a, tol: float = DEFAULT_TOL) -> ConeVerdict:
    """Membership in the doubly nonnegative circulant cone: ``a >= 0`` and ``dft(a) >= 0``."""
    a = as_symmetric(a, tol)
    w = dnn_witness(a, tol)
    if w is None:
        return member(tol=tol, reason="entries and Fourier coefficients are nonnegative")
    return not_member(w, tol=tol, reason=f"negative {w.label}")


def _record_from_full(a: np.ndarray, tol: float) -> RayRecord:
    a = a / a[0]
    a[np.abs(a) < 1e-13] = 0.0
    mu = cos_modes(a.size) @ a
    return RayRecord(a, support(a, tol), support(mu, 1e-10))


def dnn_rays_by_enumeration(d: int, tol: float = DEFAULT_TOL) -> list[RayRecord]:
    """Extremal rays from the semi-positive cone of :func:`g_matrix`, embedded into R^d."""
    if not 2 <= d <= MAX_ENUM_D:
        raise ValueError(f"enumeration supports 2 <= d <= {MAX_ENUM_D}, got {d}")
    out = []
    for rec in enumerate_extremal_rays(g_matrix(d), tol):
        out.append(_record_from_full(sym_embed(rec.vector, d), tol))
    return sorted(out, key=RayRecord.key)


def dnn_extremal_catalog(d: int, tol: float = DEFAULT_TOL) -> list[RayRecord]:
    """Extremal rays normalized to first entry 1, with ``supp(a)`` and ``supp(dft(a))`` in R^d."""
    if d in DNN_TABLES:
        return [RayRecord(np.array(v), s, fs) for v, s, fs in DNN_TABLES[d]]
    return dnn_rays_by_enumeration(d, tol)


def extremal_low_support(d: int, i: int) -> Ray:
    """The extremal ray other than ``|0>`` supported on ``{0, i, -i}``.

    With ``q = d / gcd(i, d)`` the ray is ``(2 cos(pi / q), 1, 1)`` on
    ``(0, i, -i)`` for odd ``q`` and ``(2, 1, 1)`` for even ``q``. For
    ``i = d/2`` it is ``e_0 + e_{d/2}``.
    """
    if not 0 < i < d:
        raise ValueError(f"need 0 < i < d, got i={i}, d={d}")
    v = np.zeros(d)
    if 2 * i == d:
        v[0] = v[i] = 1.0
        return Ray(v, f"low-support {{0,{i}}}")
    q = d // math.gcd(i, d)
    v[0] = 2.0 * math.cos(math.pi / q) if q % 2 else 2.0
    v[i] = v[d - i] = 1.0
    return Ray(v, f"low-support {{0,{i},{d - i}}}")
