"""Mixtures of two-excitation symmetric states with circulant weights.

A symmetric circulant ``p = circ(a)`` with nonnegative entries defines
``sum_ij p_ij |D_ij><D_ij|``. It is the triple ``(a, a_0 e_0, a)``; it is PPT
iff ``a`` is doubly nonnegative and separable iff ``a`` is completely positive.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certificates import ConeVerdict, Verdict, Witness
from .circulant import circ, is_symmetric
from .cones.cp import cp_member
from .cones.dnn import as_symmetric, dnn_member
from .constants import DEFAULT_TOL
from .lcsi import AbcTriple


def project_circulant(x) -> np.ndarray:
    """First row of the cyclic average ``(1/d) sum_k P^-k X P^k``: ``a_m = mean_i X[i, i+m]``."""
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {x.shape}")
    d = x.shape[0]
    i = np.arange(d)
    return np.array([x[i, (i + m) % d].mean() for m in range(d)])


def dicke_to_lcsi(a, tol: float = DEFAULT_TOL) -> AbcTriple:
    a = as_symmetric(a, tol)
    b = np.zeros_like(a)
    b[0] = a[0]
    return AbcTriple(a, b, a)


def dicke_dense(p) -> np.ndarray:
    """``sum_ij p_ij |D_ij><D_ij|`` with ``|D_ii> = |ii>`` and ``|D_ij> = (|ij> + |ji>)/sqrt(2)``."""
    p = np.asarray(p, dtype=float)
    d = p.shape[0]
    out = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            ket = np.zeros(d * d)
            if i == j:
                ket[i * d + i] = 1.0
            else:
                ket[i * d + j] = ket[j * d + i] = 1.0 / np.sqrt(2.0)
            out += p[i, j] * np.outer(ket, ket)
    return out


def dicke_ppt_check(a, tol: float = DEFAULT_TOL) -> ConeVerdict:
    return dnn_member(a, tol)


def dicke_sep_check(a, tol: float = DEFAULT_TOL, **kwargs) -> ConeVerdict:
    return cp_member(a, tol, **kwargs)


@dataclass
class NotCpReport:
    """Outcome of :func:`detect_not_cp`.

    ``pairing`` is ``trace(W X)`` for the circulant witness ``W``; it equals the
    witness paired with ``d * projected``.
    """

    status: str  # "NotCP" or "Inconclusive"
    projected: np.ndarray
    scaled: np.ndarray
    verdict: ConeVerdict
    witness_matrix: np.ndarray | None = None
    pairing: float | None = None

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "projected": [float(v) for v in self.projected],
            "projected_times_d": [float(v) for v in self.scaled],
            "cp_verdict": self.verdict.to_json(),
        }
        if self.pairing is not None:
            out["pairing"] = self.pairing
        return out


def detect_not_cp(x, tol: float = DEFAULT_TOL) -> NotCpReport:
    """Sufficient test that a doubly nonnegative matrix is not completely positive.

    Cyclic averaging preserves complete positivity, so a witness against the
    projected circulant lifts to ``W = circ(w)``, which is copositive and has
    ``trace(W X) < 0``.

    Raises
    ------
    ValueError
        If ``x`` is not symmetric, entrywise nonnegative and PSD.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {x.shape}")
    s = max(1.0, float(np.max(np.abs(x))))
    if np.max(np.abs(x - x.T)) > tol * s:
        raise ValueError("matrix is not symmetric")
    if np.min(x) < -tol * s:
        raise ValueError(f"matrix has a negative entry {np.min(x):.3g}")
    lam = float(np.linalg.eigvalsh((x + x.T) / 2)[0])
    if lam < -tol * s * x.shape[0]:
        raise ValueError(f"matrix is not positive semidefinite (eigenvalue {lam:.3g})")
    d = x.shape[0]
    a = project_circulant(x)
    if not is_symmetric(a, tol):
        raise ValueError("projection is not symmetric")
    a = (a + a[(-np.arange(d)) % d]) / 2.0
    verdict = cp_member(a, tol)
    if verdict.verdict is Verdict.NOT_MEMBER and isinstance(verdict.certificate, Witness):
        w = verdict.certificate.vector
        wm = circ(w)
        return NotCpReport("NotCP", a, d * a, verdict, wm, float(np.trace(wm.T @ x)))
    return NotCpReport("Inconclusive", a, d * a, verdict)
