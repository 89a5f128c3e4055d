"""Two-dimensional slices of the cones, as rows for CSV export."""
from __future__ import annotations

import numpy as np

from .cones.cp import cp5_extremal_catalog, cp6_face_catalogs, cp7_face_catalogs
from .cones.copositive import cop5_extremal_catalog, spn5_extremal_catalog
from .cones.dnn import dnn_extremal_catalog
from .cones.families import autocorr

# slice name -> (d, coordinate of x, coordinate of y, support of the sampled factors)
SLICES = {
    "d4": (4, 1, 2, (0, 1, 2, 3)),
    "d5": (5, 1, 2, (0, 1, 2, 3, 4)),
    "d5dual": (5, 1, 2, None),
    "d6face": (6, 1, 2, (0, 1, 2)),
    "d7face": (7, 1, 2, (0, 1, 2)),
}


def _xy(a, ix: int, iy: int) -> tuple[float, float]:
    a = np.asarray(a, dtype=float)
    return float(a[ix] / a[0]), float(a[iy] / a[0])


def _dnn_face_vertices(d: int, face) -> list[tuple[float, float]]:
    out = []
    for rec in dnn_extremal_catalog(d):
        if set(rec.supp) <= set(face):
            out.append(_xy(rec.vector, 1, 2))
    return out


def slice_rows(name: str, samples: int = 200, theta_samples: int = 64, seed: int = 0) -> list[tuple[str, float, float]]:
    """Rows ``(series, x, y)`` in the first-entry-1 slice.

    Series: ``dnn_vertex``, ``cp_vertex``, ``cp_curve``, ``cp_sample`` for the
    primal slices; ``cop_curve``, ``cop_ray``, ``spn_vertex`` for ``d5dual``.
    """
    if name not in SLICES:
        raise ValueError(f"unknown slice {name!r}; choose from {sorted(SLICES)}")
    d, ix, iy, supp = SLICES[name]
    rows: list[tuple[str, float, float]] = []
    if name == "d5dual":
        cat = cop5_extremal_catalog()
        for fam in cat.families:
            for r in fam.sample(theta_samples):
                rows.append(("cop_curve", *_xy(r.vector, ix, iy)))
        for r in cat.fixed:
            rows.append(("cop_ray", float(r.vector[ix]), float(r.vector[iy])))
        for r in spn5_extremal_catalog()[2:]:
            rows.append(("spn_vertex", *_xy(r.vector, ix, iy)))
        return rows
    if name == "d6face":
        face = (0, 1, 2, 4, 5)
        cat = cp6_face_catalogs()[face].primal
    elif name == "d7face":
        face = (0, 1, 2, 5, 6)
        cat = cp7_face_catalogs()[face].primal
    elif name == "d5":
        face = tuple(range(5))
        cat = cp5_extremal_catalog()
    else:
        face = tuple(range(4))
        cat = None
    for v in _dnn_face_vertices(d, face):
        rows.append(("dnn_vertex", *v))
    if cat is not None:
        for r in cat.fixed:
            rows.append(("cp_vertex", *_xy(r.vector, ix, iy)))
        for fam in cat.families:
            for r in fam.sample(theta_samples):
                rows.append(("cp_curve", *_xy(r.vector, ix, iy)))
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        a = np.zeros(d)
        for _ in range(rng.integers(1, 4)):
            v = np.zeros(d)
            v[list(supp)] = rng.random(len(supp)) ** 2
            a += autocorr(np.roll(v, rng.integers(d)))
        rows.append(("cp_sample", *_xy(a, ix, iy)))
    return rows


def slice_csv(name: str, **kwargs) -> str:
    lines = ["series,x,y"]
    lines += [f"{s},{x:.15g},{y:.15g}" for s, x, y in slice_rows(name, **kwargs)]
    return "\n".join(lines) + "\n"

