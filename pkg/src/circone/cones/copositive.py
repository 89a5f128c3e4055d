"""Copositive and SPN circulants: the duals of the CP and DNN circulant cones."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from ..certificates import ConeVerdict, Witness, member, not_member, undecided, vec_to_json
from ..circulant import circ, cos_modes
from ..constants import DEFAULT_TOL
from .dnn import as_symmetric
from .families import Catalog, Ray, ThetaFamily, sym_unit, witness_vector


def cop_necessary(a, tol: float = DEFAULT_TOL) -> bool:
    """Cheap necessary test: ``a_0 >= 0`` and ``2 a_0 + a_2k + a_-2k >= 0`` for every ``k``.

    The second family is the quadratic form on ``e_k + e_-k``.
    """
    a = as_symmetric(a, tol)
    d = a.size
    s = max(1.0, float(np.max(np.abs(a))))
    if a[0] < -tol * s:
        return False
    return all(2 * a[0] + a[(2 * k) % d] + a[(-2 * k) % d] >= -tol * s for k in range(1, d))


def _project_simplex(v: np.ndarray) -> np.ndarray:
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    rho = np.nonzero(u - css / np.arange(1, v.size + 1) > 0)[0][-1]
    return np.maximum(v - css[rho] / (rho + 1.0), 0.0)


def cop_validate(a, starts: int = 64, tol: float = DEFAULT_TOL, seed: int = 0, iters: int = 400):
    """Numerical copositivity check by projected-gradient descent on the simplex.

    Starts from every vertex, every edge midpoint, the barycenter and ``starts``
    seeded random points. ``True`` only means no violation was found.

    Returns
    -------
    (bool, numpy.ndarray, float)
        Verdict, the best point found and ``v^T circ(a) v`` there.
    """
    a = as_symmetric(a, tol)
    d = a.size
    q = circ(a)
    q = (q + q.T) / 2.0
    s = max(1.0, float(np.max(np.abs(a))))
    lip = 2.0 * max(float(np.linalg.norm(q, 2)), 1e-12)
    rng = np.random.default_rng(seed)
    pts = [np.eye(d)[i] for i in range(d)]
    pts += [(np.eye(d)[i] + np.eye(d)[j]) / 2 for i in range(d) for j in range(i + 1, d)]
    pts.append(np.full(d, 1.0 / d))
    pts += list(rng.dirichlet(np.full(d, 0.5), size=starts))
    best_v, best_f = pts[0], float(pts[0] @ q @ pts[0])
    for v in pts:
        v = v.copy()
        for _ in range(iters):
            nv = _project_simplex(v - (2.0 * q @ v) / lip)
            if np.max(np.abs(nv - v)) < 1e-14:
                v = nv
                break
            v = nv
        f = float(v @ q @ v)
        if f < best_f:
            best_v, best_f = v, f
        if best_f < -tol * s:
            break
    return best_f >= -tol * s, best_v, best_f


def horn_vector() -> np.ndarray:
    return np.array([1.0, -1.0, 1.0, 1.0, -1.0])


def cop5_witness_families() -> tuple[ThetaFamily, ThetaFamily]:
    """``h(theta) = (1, -cos t, cos 2t, cos 2t, -cos t)`` and its index-doubled twin, ``t`` in ``[0, pi/5]``."""
    return (
        ThetaFamily("h", 5, 1, math.pi / 5, "witness"),
        ThetaFamily("h'", 5, 2, math.pi / 5, "witness"),
    )


def cop5_extremal_catalog() -> Catalog:
    fixed = (Ray(sym_unit(5, 1), "e1+e4"), Ray(sym_unit(5, 2), "e2+e3"))
    return Catalog(5, fixed, cop5_witness_families())


def spn5_extremal_catalog() -> list[Ray]:
    """Sum of PSD and nonnegative circulants at d = 5: four extremal rays."""
    t = math.pi / 5
    return [
        Ray(sym_unit(5, 1), "e1+e4"),
        Ray(sym_unit(5, 2), "e2+e3"),
        Ray(witness_vector(5, 1, t), "h(pi/5)", theta=t),
        Ray(witness_vector(5, 2, t), "h'(pi/5)", theta=t),
    ]


@dataclass
class SpnSplit:
    """``a = psd + nonneg`` with ``circ(psd)`` positive semidefinite and ``nonneg >= 0``."""

    psd: np.ndarray
    nonneg: np.ndarray

    kind = "spn_split"

    def verify(self, a, tol: float) -> bool:
        a = np.asarray(a, dtype=float)
        s = max(1.0, float(np.max(np.abs(a))))
        return bool(np.max(np.abs(self.psd + self.nonneg - a)) <= tol * s
                    and np.min(self.nonneg) >= -tol * s
                    and np.min(cos_modes(a.size) @ self.psd) >= -tol * s)

    def to_json(self) -> dict:
        return {"kind": self.kind, "psd": vec_to_json(self.psd), "nonneg": vec_to_json(self.nonneg)}


def spn_witness(a, tol: float = DEFAULT_TOL) -> Witness | None:
    """Doubly nonnegative ``w`` minimizing ``<w, a>`` with mode weights summing to one; ``None`` if the minimum is ``>= 0``.

    ``w = sum_k y_k cos_k`` with ``y >= 0`` is PSD; ``w >= 0`` is imposed.
    """
    a = as_symmetric(a, tol)
    d = a.size
    modes = cos_modes(d)
    s = max(1.0, float(np.max(np.abs(a))))
    res = linprog(modes @ a, A_ub=-modes.T, b_ub=np.zeros(d), A_eq=np.ones((1, d)), b_eq=[1.0],
                  bounds=(0, None), method="highs")
    if res.status != 0:
        raise RuntimeError(f"witness LP failed: {res.message}")
    w = np.maximum(modes.T @ res.x, 0.0)
    p = float(w @ a)
    if p < -tol * s:
        return Witness(w, p, "doubly nonnegative witness")
    return None


def spn_member(a, tol: float = DEFAULT_TOL) -> ConeVerdict:
    """Membership in PSD + nonnegative circulants, decided exactly by two linear programs."""
    a = as_symmetric(a, tol)
    d = a.size
    w = spn_witness(a, tol)
    if w is not None:
        return not_member(w, tol=tol, reason="negative pairing with a doubly nonnegative circulant")
    modes = cos_modes(d)
    s = max(1.0, float(np.max(np.abs(a))))
    sym = np.eye(d) - np.eye(d)[(-np.arange(d)) % d]
    res = linprog(np.ones(d), A_ub=modes, b_ub=modes @ a + tol * s, A_eq=sym, b_eq=np.zeros(d),
                  bounds=(0, None), method="highs")
    if res.status != 0:
        return undecided(tol=tol, reason=f"split LP failed: {res.message}")
    split = SpnSplit(a - res.x, res.x)
    if not split.verify(a, 10 * d * tol):
        return undecided(tol=tol, reason="split failed to verify")
    return member(split, tol=tol, reason="PSD plus nonnegative split")


def _generator_family_minimum(fam: ThetaFamily, a: np.ndarray) -> tuple[float, float]:
    """Exact minimum of ``<x(theta), a>`` over the family range; the pairing is quadratic in ``cos(theta)``."""
    lo = math.cos(fam.theta_max)
    ts = np.array([lo, (lo + 1.0) / 2.0, 1.0])
    vals = np.array([fam.vector(math.acos(t)) @ a for t in ts])
    p, q, r = np.polyfit(ts, vals, 2)
    cands = [lo, 1.0]
    if p > 0 and lo < -q / (2 * p) < 1.0:
        cands.append(-q / (2 * p))
    best = min(cands, key=lambda t: p * t * t + q * t + r)
    theta = math.acos(min(1.0, max(-1.0, best)))
    return float(fam.vector(theta) @ a), theta


def cop_member(a, tol: float = DEFAULT_TOL, starts: int = 64, seed: int = 0) -> ConeVerdict:
    """Membership in the copositive circulants.

    Exact for ``d <= 5`` (pairing against the complete completely positive
    catalog, which is the doubly nonnegative cone for ``d <= 4``). Otherwise a
    negative quadratic form found by search refutes, a PSD-plus-nonnegative
    split certifies, and anything else is ``Undecided``.
    """
    from .cp import cp5_extremal_catalog

    a = as_symmetric(a, tol)
    d = a.size
    s = max(1.0, float(np.max(np.abs(a))))
    if d <= 4:
        v = spn_member(a, tol)
        v.reason = "copositive equals PSD plus nonnegative here; " + v.reason
        return v
    if d == 5:
        cat = cp5_extremal_catalog()
        best = None
        for r in cat.fixed:
            p = float(r.vector @ a)
            if best is None or p < best[0]:
                best = (p, r.vector, r.label)
        for fam in cat.families:
            p, th = _generator_family_minimum(fam, a)
            if p < best[0]:
                best = (p, fam.vector(th), f"{fam.name}({th:.6g})")
        if best[0] < -tol * s:
            return not_member(Witness(best[1], best[0], best[2]), tol=tol,
                              reason=f"negative pairing with completely positive {best[2]}")
        return member(tol=tol, reason="pairs nonnegatively with every completely positive extremal ray")
    ok, v, f = cop_validate(a, starts=starts, tol=tol, seed=seed)
    if not ok:
        x = np.array([float(v @ np.roll(v, -k)) for k in range(d)])  # v * reverse(v), completely positive
        return not_member(Witness(x, float(x @ a), "v * reverse(v) from search"), tol=tol,
                          reason=f"v^T circ(a) v = {f:.6g} at a nonnegative v", argmin=v)
    spn = spn_member(a, tol)
    if spn.is_member:
        spn.reason = "PSD plus nonnegative split, which implies copositivity"
        return spn
    return undecided(tol=tol, reason="no violation found by search and no PSD-plus-nonnegative split", min_value=f)
