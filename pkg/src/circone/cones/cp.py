"""Completely positive circulants: sums of autocorrelations ``v * reverse(v)`` with ``v >= 0``.

Exact decisions are available for ``d <= 4`` (the cone equals the doubly
nonnegative one), ``d = 5`` and the faces of ``d = 6, 7`` that have a zero at a
defining coordinate; everything else goes through certified heuristics and may
come back ``Undecided``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares, nnls

from ..certificates import ConeVerdict, Decomposition, Witness, member, not_member, undecided
from ..circulant import cos_modes, support
from ..constants import DEFAULT_TOL
from .cliques import cliques_through_zero
from .copositive import cop_validate
from .dnn import as_symmetric, dnn_witness
from .families import Catalog, Ray, ThetaFamily, autocorr, sym_unit, unit

DECOMPOSITION_TOL = 1e-7


def _gen_ray(v, label: str) -> Ray:
    v = np.asarray(v, dtype=float)
    return Ray(autocorr(v), label, v)


def _scale(a: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(a))))


def nnls_decompose(a: np.ndarray, gens: list[np.ndarray]) -> Decomposition:
    """Nonnegative least squares of ``a`` over autocorrelations of ``gens``."""
    mat = np.column_stack([autocorr(v) for v in gens])
    w, _ = nnls(mat, a, maxiter=50 * mat.shape[1])
    w[w <= 1e-13 * max(float(w.max(initial=0.0)), 1e-300)] = 0.0
    keep = [(np.asarray(gens[i], dtype=float), float(w[i])) for i in np.flatnonzero(w > 0)]
    resid = float(np.max(np.abs(mat @ w - a))) if a.size else 0.0
    return Decomposition(keep, resid)


def _certified(a, dec: Decomposition, tol: float, reason: str, **details) -> ConeVerdict | None:
    if dec.verify(a, tol):
        dec.residual = float(np.max(np.abs(dec.reconstruct(a.size) - a)))
        return member(dec, tol=tol, reason=reason, **details)
    return None


# -- d <= 4 -----------------------------------------------------------------

def _small_generators(d: int) -> list[np.ndarray]:
    gens = [unit(d, 0), np.ones(d) / math.sqrt(d)]
    if d == 4:
        gens += [unit(4, 0, 1) / math.sqrt(2), unit(4, 0, 2) / math.sqrt(2)]
    return gens


# -- exact faces ---------------------------------------------------------------

@dataclass(frozen=True)
class FaceModel:
    """Dual description of a cone (or face) cut out by stepped witness families.

    Membership of ``a`` supported in ``face``: coordinates at ``+-m`` and
    ``+-2m`` nonnegative and every family's pairing nonnegative for ``theta``
    in ``[0, theta_max]``.
    """

    d: int
    face: tuple[int, ...]
    steps: tuple[int, ...]
    theta_max: float
    fixed: tuple[Ray, ...]
    names: tuple[tuple[str, str], ...] = ()

    def _name(self, i: int, kind: int, m: int) -> str:
        return self.names[i][kind] if self.names else ("w", "x")[kind] + f"[{m}]"

    def witness_families(self) -> list[ThetaFamily]:
        return [ThetaFamily(self._name(i, 0, m), self.d, m, self.theta_max, "witness")
                for i, m in enumerate(self.steps)]

    def generator_families(self) -> list[ThetaFamily]:
        return [ThetaFamily(self._name(i, 1, m), self.d, m, self.theta_max, "generator")
                for i, m in enumerate(self.steps)]

    def primal(self) -> Catalog:
        return Catalog(self.d, self.fixed, tuple(self.generator_families()), self.face)

    def dual(self) -> Catalog:
        coords = []
        for m in self.steps:
            for k in (m, 2 * m):
                w = sym_unit(self.d, k)
                if not any(np.array_equal(w, r.vector) for r in coords):
                    coords.append(Ray(w, f"coordinate {k % self.d}"))
        return Catalog(self.d, tuple(coords), tuple(self.witness_families()), self.face)

    def lift_witness(self, w: Witness, a: np.ndarray) -> Witness:
        """Raise ``w`` off the face until it is copositive on all of ``R^d_+``.

        Coordinates outside the face pair with zeros of ``a``, so the pairing is
        unchanged. Each step doubles the added mass; the copositivity check is the
        multistart simplex search.
        """
        outside = [k for k in range(1, self.d // 2 + 1) if k not in self.face]
        if not outside:
            return w
        base = float(np.max(np.abs(w.vector)))
        for s in [0.0] + [base * 2.0 ** j for j in range(-2, 7)]:
            v = w.vector + s * sum(sym_unit(self.d, k) for k in outside)
            if cop_validate(v, starts=64)[0]:
                label = w.label if s == 0 else f"{w.label}, lifted by {s:g} off the face"
                return Witness(v, float(v @ a), label)
        return Witness(w.vector, w.pairing, f"{w.label} (copositive on the face only)")

    def decide(self, a: np.ndarray, tol: float, dec_tol: float, samples: int) -> ConeVerdict:
        s = _scale(a)
        best: Witness | None = None
        for r in self.dual().fixed:
            p = float(r.vector @ a)
            if p < -tol * s and (best is None or p < best.pairing):
                best = Witness(r.vector, p, r.label)
        minima = []
        for fam in self.witness_families():
            val, theta = fam.minimize_pairing(a)
            minima.append(theta)
            if val < -tol * s and (best is None or val < best.pairing):
                w = fam.vector(theta)
                best = Witness(w, float(w @ a), f"{fam.name} at theta={theta:.12g}")
        if best is not None:
            lifted = self.lift_witness(best, a)
            return not_member(lifted, tol=tol, reason=f"negative pairing with {lifted.label}", face=self.face)
        gens = [r.generator for r in self.fixed]
        for fam, theta in zip(self.generator_families(), minima):
            gens += [r.generator for r in fam.sample(samples)]
            gens.append(fam.generator(theta))
        dec = nnls_decompose(a, gens)
        out = _certified(a, dec, dec_tol * s, "dual witnesses nonnegative; decomposition found", face=self.face)
        if out is not None:
            return out
        return member(None, tol=tol, reason="dual witnesses nonnegative (decomposition residual "
                      f"{dec.residual:.3g} above tolerance)", face=self.face)


def _model_d5() -> FaceModel:
    fixed = (
        _gen_ray(unit(5, 0), "e0"),
        _gen_ray(np.ones(5) / math.sqrt(5), "e"),
        _gen_ray(unit(5, 0, 1), "(2,1,0,0,1)"),
        _gen_ray(unit(5, 0, 2), "(2,0,1,1,0)"),
    )
    return FaceModel(5, (0, 1, 2, 3, 4), (1, 2), math.pi / 5, fixed, (("h", "x"), ("h'", "x'")))


def _model_d6_three() -> FaceModel:
    fixed = (
        _gen_ray(unit(6, 0), "e0"),
        _gen_ray(unit(6, 0, 1), "(2,1,0,0,0,1)"),
        _gen_ray(unit(6, 0, 2, 4) / math.sqrt(3), "(1,0,1,0,1,0)"),
    )
    return FaceModel(6, (0, 1, 2, 4, 5), (1,), math.pi / 3, fixed)


def _model_d7(m: int) -> FaceModel:
    face = tuple(sorted({0, m % 7, -m % 7, 2 * m % 7, -2 * m % 7}))
    fixed = (_gen_ray(unit(7, 0), "e0"), _gen_ray(unit(7, 0, m), f"(e0+e{m})*R"))
    return FaceModel(7, face, (m,), math.pi / 2, fixed)


def _polyhedral_d6(face: tuple[int, ...]) -> list[Ray]:
    rays = [_gen_ray(unit(6, 0), "e0"), _gen_ray(unit(6, 0, 3) / math.sqrt(2), "(1,0,0,1,0,0)")]
    if face == (0, 1, 3, 5):
        rays.append(_gen_ray(unit(6, 0, 1), "(2,1,0,0,0,1)"))
    else:
        rays.append(_gen_ray(unit(6, 0, 2, 4) / math.sqrt(3), "(1,0,1,0,1,0)"))
    return rays


def cp5_extremal_catalog() -> Catalog:
    """Extremal rays at d = 5: four fixed rays and the families ``x(theta)``, ``x'(theta)``, ``theta`` in ``[0, pi/5]``.

    Family members past ``pi/5`` are produced with ``extremal=False``.
    """
    return _model_d5().primal()


@dataclass(frozen=True)
class FaceCatalog:
    face: tuple[int, ...]
    primal: Catalog
    dual: Catalog | None


def cp6_face_catalogs() -> dict[tuple[int, ...], FaceCatalog]:
    """Faces of the d = 6 cone with zeros at a defining coordinate.

    The faces ``{0,1,3,5}`` and ``{0,2,3,4}`` coincide with the doubly
    nonnegative faces, so their duals are the DNN witnesses (``dual=None``).
    """
    m = _model_d6_three()
    out = {m.face: FaceCatalog(m.face, m.primal(), m.dual())}
    for f in ((0, 1, 3, 5), (0, 2, 3, 4)):
        out[f] = FaceCatalog(f, Catalog(6, tuple(_polyhedral_d6(f)), (), f), None)
    return out


def cp7_face_catalogs() -> dict[tuple[int, ...], FaceCatalog]:
    out = {}
    for k in (1, 2, 3):
        m = _model_d7(k)
        out[m.face] = FaceCatalog(m.face, m.primal(), m.dual())
    return out


# -- generic -------------------------------------------------------------------

def separable_ball_radius(d: int, eps: float = 1.0) -> float:
    """Radius ``2 eps^2 / (d + (d-1) eps + d eps^2)`` of the completely positive ball around the all-ones vector.

    The ball is measured in the ``a_0 = 1`` slice over coordinates ``1..d-1``.
    """
    if d < 2 or eps <= 0:
        raise ValueError("need d >= 2 and eps > 0")
    return 2.0 * eps * eps / (d + (d - 1) * eps + d * eps * eps)


def spectral_decomposition(a, tol: float = DEFAULT_TOL) -> Decomposition | None:
    """Exact decomposition for symmetric ``a`` whose constant mode dominates.

    With ``mu_j = sum_k a_k cos(2 pi j k / d)``, if all ``mu_j >= 0`` and
    ``mu_0 >= 4 sum_{0<j<d/2} mu_j + mu_{d/2}`` then ``a`` is a nonnegative
    combination of ``e`` and ``(e + cos_j) * reverse(e + cos_j) / d``.
    """
    a = np.asarray(a, dtype=float)
    d = a.size
    mu = cos_modes(d) @ a
    s = _scale(a)
    if np.any(mu < -tol * s):
        return None
    mu = np.maximum(mu, 0.0)
    modes = cos_modes(d)
    gens: list[tuple[np.ndarray, float]] = []
    rest = mu[0]
    for j in range(1, d // 2 + 1):
        w = mu[j] / d if 2 * j == d else 4.0 * mu[j] / d
        rest -= mu[j] * (1.0 if 2 * j == d else 4.0)
        if w > 0:
            gens.append(((np.ones(d) + modes[j]) / math.sqrt(d), w))
    if rest < -tol * s * d:
        return None
    if rest > 0:
        gens.append((np.ones(d) / math.sqrt(d), rest / d))
    dec = Decomposition(gens, 0.0)
    dec.residual = float(np.max(np.abs(dec.reconstruct(d) - a)))
    return dec


def generic_witness_families(d: int) -> list[ThetaFamily]:
    """Copositive families valid for every vector of length ``d``.

    When ``5 | d`` the d = 5 witnesses spread with step ``d/5`` stay copositive:
    the quadratic form splits into independent length-5 pieces.
    """
    if d % 5 or d == 5:
        return []
    r = d // 5
    return [ThetaFamily(f"h[{r}]", d, r, math.pi / 5, "witness"),
            ThetaFamily(f"h[{2 * r}]", d, 2 * r, math.pi / 5, "witness")]


def _clique_pool(d: int, cliques, rng, n_random: int) -> list[np.ndarray]:
    pool: dict[tuple, np.ndarray] = {}
    for c in cliques:
        idx = list(c)
        if len(idx) <= 10:
            for size in range(1, len(idx) + 1):
                for sub in itertools.combinations(idx, size):
                    if 0 in sub:
                        v = unit(d, *sub)
                        pool.setdefault(tuple(np.round(autocorr(v), 12)), v)
        for _ in range(n_random):
            v = np.zeros(d)
            v[idx] = rng.random(len(idx)) ** 2
            pool.setdefault(tuple(np.round(autocorr(v), 12)), v)
    return list(pool.values())


def heuristic_decomposition(a, dec_tol: float = DECOMPOSITION_TOL, seed: int = 0,
                            n_random: int = 96) -> Decomposition:
    """NNLS over clique-supported autocorrelations, then bounded least-squares refinement of the factors."""
    a = np.asarray(a, dtype=float)
    d = a.size
    s = _scale(a)
    rng = np.random.default_rng(seed)
    conn = [k for k in support(a, 1e-12) if k]
    cliques = cliques_through_zero(d, conn) if conn else [(0,)]
    dec = nnls_decompose(a, _clique_pool(d, cliques, rng, n_random))
    if dec.residual <= dec_tol * s or not dec.generators:
        return dec
    masks = [np.asarray(v) > 0 for v, _ in dec.generators]
    x0 = np.concatenate([np.sqrt(w) * np.asarray(v)[m] for (v, w), m in zip(dec.generators, masks)])

    def unpack(x):
        out, pos = [], 0
        for m in masks:
            v = np.zeros(d)
            k = int(m.sum())
            v[m] = x[pos:pos + k]
            pos += k
            out.append(v)
        return out

    def resid(x):
        return sum(autocorr(v) for v in unpack(x)) - a

    res = least_squares(resid, x0, bounds=(0.0, np.inf), xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=2000)
    refined = Decomposition([(v, 1.0) for v in unpack(res.x) if np.any(v > 0)], 0.0)
    refined.residual = float(np.max(np.abs(refined.reconstruct(d) - a)))
    return refined if refined.residual < dec.residual else dec


def _face_model_for(a: np.ndarray, tol: float):
    d = a.size
    s = _scale(a)
    zero = [abs(x) <= tol * s for x in a]
    if d == 6:
        if zero[3]:
            return _model_d6_three()
        for f, k in (((0, 1, 3, 5), 2), ((0, 2, 3, 4), 1)):
            if zero[k]:
                return f
    if d == 7:
        for m, k in ((1, 3), (2, 1), (3, 2)):
            if zero[k]:
                return _model_d7(m)
    return None


def _restrict(a: np.ndarray, face) -> np.ndarray:
    out = np.zeros_like(a)
    out[list(face)] = a[list(face)]
    return out


def cp_member(a, tol: float = DEFAULT_TOL, decomposition_tol: float = DECOMPOSITION_TOL,
              theta_samples: int = 64, seed: int = 0) -> ConeVerdict:
    """Membership in the completely positive circulant cone.

    ``NotMember`` always carries a copositive witness with negative pairing;
    ``Member`` carries a nonnegative factor decomposition whenever one was
    constructed.
    """
    a = as_symmetric(a, tol)
    d = a.size
    s = _scale(a)
    if np.all(np.abs(a) <= tol * s) and np.all(np.abs(a) <= tol):
        return member(Decomposition([], 0.0), tol=tol, reason="zero vector")
    w = dnn_witness(a, tol)
    if w is not None:
        return not_member(w, tol=tol, reason=f"not doubly nonnegative: negative {w.label}")
    if d <= 4:
        dec = nnls_decompose(a, _small_generators(d))
        out = _certified(a, dec, decomposition_tol * s, "doubly nonnegative, which suffices for d <= 4")
        return out or member(None, tol=tol, reason="doubly nonnegative, which suffices for d <= 4")
    if d == 5:
        return _model_d5().decide(a, tol, decomposition_tol, theta_samples)
    face = _face_model_for(a, tol)
    if isinstance(face, FaceModel):
        return face.decide(_restrict(a, face.face), tol, decomposition_tol, theta_samples)
    if face is not None:
        ar = _restrict(a, face)
        dec = nnls_decompose(ar, [r.generator for r in _polyhedral_d6(face)])
        out = _certified(a, dec, decomposition_tol * s, "face equals its doubly nonnegative counterpart", face=face)
        return out or member(None, tol=tol, reason="face equals its doubly nonnegative counterpart", face=face)
    for fam in generic_witness_families(d):
        val, theta = fam.minimize_pairing(a)
        if val < -tol * s:
            wv = fam.vector(theta)
            return not_member(Witness(wv, float(wv @ a), f"{fam.name} at theta={theta:.12g}"), tol=tol,
                              reason="negative pairing with a spread copositive witness")
    dec = spectral_decomposition(a, tol)
    if dec is not None:
        out = _certified(a, dec, decomposition_tol * s, "constant Fourier mode dominates")
        if out is not None:
            return out
    dec = heuristic_decomposition(a, decomposition_tol, seed)
    out = _certified(a, dec, decomposition_tol * s, "heuristic factorization")
    if out is not None:
        return out
    return undecided(tol=tol, reason=f"no witness found; best decomposition residual {dec.residual:.3g}")
