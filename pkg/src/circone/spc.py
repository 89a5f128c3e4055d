"""Extremal rays of semi-positive cones ``{x >= 0 : X x >= 0}``.

A ray with support ``I`` and image support ``J = supp(X x)`` exists exactly when
the submatrix ``X[J^c, I]`` has a one-dimensional kernel spanned by a vector
that is positive on ``I`` and maps to a positive vector on ``J``. The kernel
dimension is monotone in both ``I`` and ``J``, so pairs dominating a pair with
kernel dimension at least two are skipped.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_TOL

MAX_N = 22


@dataclass(frozen=True)
class RayRecord:
    vector: np.ndarray
    supp: tuple[int, ...]
    image_supp: tuple[int, ...]

    def key(self):
        return (len(self.supp), self.supp)


@dataclass(frozen=True)
class ExtremalityDiagnosis:
    is_extremal: bool
    beta: int
    supp: tuple[int, ...]
    image_supp: tuple[int, ...]
    split_direction: np.ndarray | None = None
    epsilon: float | None = None
    reason: str = ""


class SemiPositiveCone:
    def __init__(self, matrix, tol: float = DEFAULT_TOL):
        x = np.array(matrix, dtype=float)
        if x.ndim != 2 or x.shape[0] != x.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {x.shape}")
        if not np.all(np.isfinite(x)):
            raise ValueError("matrix has non-finite entries")
        self.matrix = x
        self.tol = tol
        self.scale = max(1.0, float(np.linalg.norm(x, 2)))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def contains(self, v, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        v = np.asarray(v, dtype=float)
        s = max(1.0, float(np.max(np.abs(v))))
        return bool(np.all(v >= -tol * s) and np.all(self.matrix @ v >= -tol * s * self.scale))

    def _kernel(self, rows, cols) -> np.ndarray:
        """Orthonormal kernel basis (as columns) of ``matrix[rows, cols]``."""
        cols = list(cols)
        if not rows:
            return np.eye(len(cols))
        sub = self.matrix[np.ix_(list(rows), cols)]
        _, s, vh = np.linalg.svd(sub)
        thresh = self.tol * max(float(s[0]) if s.size else 0.0, self.scale)
        rank = int(np.sum(s > thresh))
        return vh[rank:].T

    def beta(self, supp, image_supp) -> int:
        """Kernel dimension of ``matrix[complement(image_supp), supp]``; ``|supp|`` if the complement is empty."""
        comp = [r for r in range(self.n) if r not in set(image_supp)]
        return self._kernel(comp, supp).shape[1]


def beta(matrix, supp, image_supp, tol: float = DEFAULT_TOL) -> int:
    return SemiPositiveCone(matrix, tol).beta(supp, image_supp)


def _mask_to_tuple(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask >> i & 1)


def _masks_by_size(n: int) -> list[int]:
    out = []
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            out.append(sum(1 << i for i in combo))
    return out


def enumerate_extremal_rays(matrix, tol: float = DEFAULT_TOL, prune: bool = True) -> list[RayRecord]:
    """All extremal rays of the semi-positive cone of ``matrix``.

    Rays are normalized to unit maximum entry, deduplicated after rounding to
    12 decimals and sorted by ``(|supp|, supp)``. The scan visits support pairs
    by increasing size so that the monotonicity pruning sees subsets first.

    Raises
    ------
    ValueError
        If the matrix is not square or its dimension exceeds 22.
    """
    cone = SemiPositiveCone(matrix, tol)
    n = cone.n
    if n > MAX_N:
        raise ValueError(f"support-pair scan is exponential; refusing n={n} > {MAX_N}")
    x = cone.matrix
    masks = _masks_by_size(n)
    full = (1 << n) - 1
    dead: set[tuple[int, int]] = set()
    found: dict[tuple, RayRecord] = {}
    for imask in masks:
        supp = _mask_to_tuple(imask, n)
        for jmask in masks:
            if prune and _dominates_dead(imask, jmask, dead, n):
                dead.add((imask, jmask))
                continue
            image = _mask_to_tuple(jmask, n)
            comp = _mask_to_tuple(full & ~jmask, n)
            ker = cone._kernel(comp, supp)
            if ker.shape[1] >= 2:
                dead.add((imask, jmask))
                continue
            if ker.shape[1] != 1:
                continue
            v = ker[:, 0]
            v = v / v[np.argmax(np.abs(v))]
            if np.any(v <= tol):
                continue
            full_v = np.zeros(n)
            full_v[list(supp)] = v
            img = x @ full_v
            if np.any(img[list(image)] <= tol * cone.scale):
                continue
            rec = RayRecord(_clean(full_v), supp, image)
            found.setdefault(tuple(np.round(rec.vector, 12)), rec)
    return sorted(found.values(), key=RayRecord.key)


def _dominates_dead(imask: int, jmask: int, dead: set, n: int) -> bool:
    for i in range(n):
        bit = 1 << i
        if imask & bit and imask != bit and (imask ^ bit, jmask) in dead:
            return True
        if jmask & bit and jmask != bit and (imask, jmask ^ bit) in dead:
            return True
    return False


def _clean(v: np.ndarray) -> np.ndarray:
    v = v / np.max(v)
    v[np.abs(v) < 1e-14] = 0.0
    return v


def is_extremal_ray(matrix, v, tol: float = DEFAULT_TOL) -> ExtremalityDiagnosis:
    """Decide whether ``v`` spans an extremal ray and, if not, how it splits.

    A non-extremal member comes with a direction ``b`` supported in ``supp(v)``
    such that ``v +- epsilon * b`` both stay in the cone.
    """
    cone = SemiPositiveCone(matrix, tol)
    v = np.asarray(v, dtype=float)
    if v.shape != (cone.n,):
        raise ValueError(f"vector length {v.shape} does not match matrix dimension {cone.n}")
    if not np.any(np.abs(v) > tol) or not cone.contains(v):
        return ExtremalityDiagnosis(False, 0, (), (), reason="not a nonzero member of the cone")
    s = float(np.max(np.abs(v)))
    supp = tuple(int(i) for i in np.flatnonzero(v > tol * s))
    img = cone.matrix @ v
    image = tuple(int(i) for i in np.flatnonzero(img > tol * s * cone.scale))
    comp = [r for r in range(cone.n) if r not in image]
    ker = cone._kernel(comp, supp)
    b = ker.shape[1]
    if b == 1:
        return ExtremalityDiagnosis(True, 1, supp, image, reason="one-dimensional kernel")
    # pick a kernel vector independent of v restricted to its support
    vs = v[list(supp)] / np.linalg.norm(v[list(supp)])
    resid = ker - np.outer(vs, vs @ ker)
    col = int(np.argmax(np.linalg.norm(resid, axis=0)))
    dir_s = resid[:, col] / np.linalg.norm(resid[:, col])
    direction = np.zeros(cone.n)
    direction[list(supp)] = dir_s
    eps = _split_epsilon(cone.matrix, v, direction, supp, image)
    return ExtremalityDiagnosis(False, b, supp, image, direction, eps, reason="kernel dimension > 1")


def _split_epsilon(x, v, direction, supp, image) -> float:
    xv, xb = x @ v, x @ direction
    ratios = [v[i] / abs(direction[i]) for i in supp if abs(direction[i]) > 0]
    ratios += [xv[j] / abs(xb[j]) for j in image if abs(xb[j]) > 0]
    return float(min(ratios)) if ratios else 1.0
