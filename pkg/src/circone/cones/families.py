"""Rays, one-parameter families and catalogs of circulant cones.

The curved families all share one shape. For a step ``m`` the witness
``w(theta)`` has ``1`` at 0, ``-cos(theta)`` at ``+-m`` and ``cos(2 theta)`` at
``+-2m``; the generator is ``x(theta) = v * reverse(v)`` with
``v = 2 cos(theta) e_0 + e_m + e_-m``. Their pairing is
``4 (cos alpha - cos beta)^2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..circulant import hermitian_autocorr


@dataclass(frozen=True)
class Ray:
    vector: np.ndarray
    label: str = ""
    generator: np.ndarray | None = None  # vector == weight * generator * reverse(generator)
    weight: float = 1.0
    theta: float | None = None
    extremal: bool = True


def unit(d: int, *idx: int) -> np.ndarray:
    v = np.zeros(d)
    for i in idx:
        v[i % d] += 1.0
    return v


def sym_unit(d: int, i: int) -> np.ndarray:
    """``e_i + e_-i``, or ``e_i`` when ``i == -i``."""
    i %= d
    return unit(d, i) if (2 * i) % d == 0 else unit(d, i, -i)


def witness_vector(d: int, m: int, theta: float) -> np.ndarray:
    w = np.zeros(d)
    w[0] = 1.0
    c, c2 = math.cos(theta), math.cos(2.0 * theta)
    for s in (m, -m):
        w[s % d] += -c
    for s in (2 * m, -2 * m):
        w[s % d] += c2
    return w


def family_generator(d: int, m: int, theta: float) -> np.ndarray:
    v = np.zeros(d)
    v[0] = 2.0 * math.cos(theta)
    v[m % d] += 1.0
    v[(-m) % d] += 1.0
    return v


def autocorr(v) -> np.ndarray:
    return np.real(hermitian_autocorr(v, v))


@dataclass(frozen=True)
class ThetaFamily:
    """Witness or generator family of step ``m``, extremal for ``theta`` in ``[0, theta_max]``."""

    name: str
    d: int
    m: int
    theta_max: float
    kind: str  # "witness" or "generator"

    def vector(self, theta: float) -> np.ndarray:
        if self.kind == "witness":
            return witness_vector(self.d, self.m, theta)
        return autocorr(family_generator(self.d, self.m, theta))

    def generator(self, theta: float) -> np.ndarray:
        if self.kind != "generator":
            raise TypeError(f"{self.name} is a witness family")
        return family_generator(self.d, self.m, theta)

    def in_range(self, theta: float, tol: float = 1e-12) -> bool:
        return -tol <= theta <= self.theta_max + tol

    def ray(self, theta: float) -> Ray:
        gen = self.generator(theta) if self.kind == "generator" else None
        return Ray(self.vector(theta), f"{self.name}({theta:.6g})", gen, 1.0, theta, self.in_range(theta))

    def sample(self, k: int) -> list[Ray]:
        if k < 1:
            raise ValueError("need at least one sample")
        thetas = np.linspace(0.0, self.theta_max, k) if k > 1 else np.array([0.0])
        return [self.ray(float(t)) for t in thetas]

    def pairing_quadratic(self, a) -> tuple[float, float, float]:
        """Coefficients ``(p, q, r)`` with ``<w(theta), a> = p t^2 + q t + r`` at ``t = cos(theta)``."""
        if self.kind != "witness":
            raise TypeError("pairing quadratic is defined for witness families")
        d, m = self.d, self.m
        a = np.asarray(a, dtype=float)
        am = a[m % d] + a[(-m) % d]
        a2m = a[(2 * m) % d] + a[(-2 * m) % d]
        return 2.0 * a2m, -am, a[0] - a2m

    def minimize_pairing(self, a) -> tuple[float, float]:
        """Exact minimum of the pairing over the extremal range; returns ``(value, theta)``."""
        p, q, r = self.pairing_quadratic(a)
        lo, hi = math.cos(self.theta_max), 1.0
        cands = [lo, hi]
        if p > 0:
            t = -q / (2.0 * p)
            if lo < t < hi:
                cands.append(t)
        vals = [p * t * t + q * t + r for t in cands]
        i = int(np.argmin(vals))
        return float(vals[i]), float(math.acos(min(1.0, max(-1.0, cands[i]))))


@dataclass(frozen=True)
class Catalog:
    """Finitely many fixed rays plus curved families."""

    d: int
    fixed: tuple[Ray, ...]
    families: tuple[ThetaFamily, ...] = field(default_factory=tuple)
    face: tuple[int, ...] | None = None

    def rays(self, theta_samples: int = 64) -> list[Ray]:
        out = list(self.fixed)
        for fam in self.families:
            out.extend(fam.sample(theta_samples))
        return out
