"""Numerical constants and printed extremal-ray tables.

All vectors are 0-indexed: entry ``k`` is the coefficient of the cyclic shift by ``k``.
"""
from __future__ import annotations

import math

DEFAULT_TOL = 1e-9

SQRT2 = 1.4142135623730950488
SQRT5 = 2.2360679774997896964
GOLDEN_CONJ = (SQRT5 - 1.0) / 2.0  # 1 / golden ratio
GOLDEN = (SQRT5 + 1.0) / 2.0  # 2 cos(pi/5)
COS_PI_5 = (1.0 + SQRT5) / 4.0
COS_2PI_5 = (SQRT5 - 1.0) / 4.0
COS_PI_3 = 0.5

# cos(2 pi p / q) for the angles where the value is rational or a quadratic surd we use.
_EXACT_COS = {
    (0, 1): 1.0,
    (1, 2): -1.0,
    (1, 3): -0.5,
    (1, 4): 0.0,
    (3, 4): 0.0,
    (1, 6): 0.5,
    (5, 6): 0.5,
    (2, 3): -0.5,
    (1, 5): COS_2PI_5,
    (4, 5): COS_2PI_5,
    (2, 5): -COS_PI_5,
    (3, 5): -COS_PI_5,
    (1, 10): COS_PI_5,
    (9, 10): COS_PI_5,
    (3, 10): -COS_2PI_5,
    (7, 10): -COS_2PI_5,
}


def cos_rational(p: int, q: int) -> float:
    """cos(2*pi*p/q), exact at angles whose cosine is 0, +-1/2, +-1 or a fifth-root surd."""
    p %= q
    g = math.gcd(p, q)
    key = (p // g, q // g)
    if key in _EXACT_COS:
        return _EXACT_COS[key]
    return math.cos(2.0 * math.pi * p / q)


def sin_rational(p: int, q: int) -> float:
    """sin(2*pi*p/q) via the shifted cosine, so that exact zeros stay exact."""
    return cos_rational(4 * p - q, 4 * q)


# Extremal rays of the doubly nonnegative circulant cone for d = 2..6,
# normalized to first entry 1; each row is (vector, supp(a), supp(Fa)).
DNN_TABLES: dict[int, list[tuple[tuple[float, ...], tuple[int, ...], tuple[int, ...]]]] = {
    2: [
        ((1.0, 0.0), (0,), (0, 1)),
        ((1.0, 1.0), (0, 1), (0,)),
    ],
    3: [
        ((1.0, 0.0, 0.0), (0,), (0, 1, 2)),
        ((1.0, 1.0, 1.0), (0, 1, 2), (0,)),
    ],
    4: [
        ((1.0, 0.0, 0.0, 0.0), (0,), (0, 1, 2, 3)),
        ((1.0, 0.5, 0.0, 0.5), (0, 1, 3), (0, 1, 3)),
        ((1.0, 0.0, 1.0, 0.0), (0, 2), (0, 2)),
        ((1.0, 1.0, 1.0, 1.0), (0, 1, 2, 3), (0,)),
    ],
    5: [
        ((1.0, 0.0, 0.0, 0.0, 0.0), (0,), (0, 1, 2, 3, 4)),
        ((1.0, GOLDEN_CONJ, 0.0, 0.0, GOLDEN_CONJ), (0, 1, 4), (0, 1, 4)),
        ((1.0, 0.0, GOLDEN_CONJ, GOLDEN_CONJ, 0.0), (0, 2, 3), (0, 2, 3)),
        ((1.0, 1.0, 1.0, 1.0, 1.0), (0, 1, 2, 3, 4), (0,)),
    ],
    6: [
        ((1.0, 0.0, 0.0, 0.0, 0.0, 0.0), (0,), (0, 1, 2, 3, 4, 5)),
        ((1.0, 0.5, 0.0, 0.0, 0.0, 0.5), (0, 1, 5), (0, 1, 2, 4, 5)),
        ((1.0, 0.0, 1.0, 0.0, 1.0, 0.0), (0, 2, 4), (0, 3)),
        ((1.0, 0.0, 0.0, 1.0, 0.0, 0.0), (0, 3), (0, 2, 4)),
        ((1.0, 0.75, 0.25, 0.0, 0.25, 0.75), (0, 1, 2, 4, 5), (0, 1, 5)),
        ((1.0, 1.0, 1.0, 1.0, 1.0, 1.0), (0, 1, 2, 3, 4, 5), (0,)),
    ],
}
