"""Regenerate reference tables and examples and diff them against the bundled golden data."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .cones.cp import cp_member
from .cones.dnn import dnn_rays_by_enumeration
from .cones.families import Ray
from .dicke import detect_not_cp
from .lcsi import AbcTriple, is_ppt
from .slices import slice_csv, slice_rows
from .spc import enumerate_extremal_rays
from .tcp import construct_ppt_entangled, extremal_b_sep_check

GOLDEN_TOL = 1e-9


def golden(name: str) -> dict:
    with resources.files("circone.golden").joinpath(f"{name}.json").open() as fh:
        return json.load(fh)


@dataclass
class ReproResult:
    target: str
    ok: bool
    lines: list[str] = field(default_factory=list)
    artifacts: dict[str, str] = field(default_factory=dict)
    seconds: float = 0.0


def _fmt(v) -> str:
    return "(" + ", ".join(f"{x:.12g}" for x in np.asarray(v, dtype=float)) + ")"


def _dnn_table(d: int) -> ReproResult:
    want = sorted(golden("dnn_tables")["tables"][str(d)], key=lambda r: (len(r["supp"]), r["supp"]))
    got = dnn_rays_by_enumeration(d)
    lines = [f"{'vector':<48} {'supp(a)':<20} supp(dft a)"]
    ok = len(got) == len(want)
    for rec, ref in zip(got, want):
        match = (rec.supp == tuple(ref["supp"]) and rec.image_supp == tuple(ref["fourier_supp"])
                 and np.max(np.abs(rec.vector - np.array(ref["vector"]))) <= GOLDEN_TOL)
        ok &= bool(match)
        lines.append(f"{_fmt(rec.vector):<48} {str(rec.supp):<20} {rec.image_supp}{'' if match else '   MISMATCH'}")
    if len(got) != len(want):
        lines.append(f"ray count {len(got)} != golden {len(want)}")
    return ReproResult(f"dnn-table-d{d}", ok, lines)


def _spc_example() -> ReproResult:
    g = golden("spc_example")
    got = enumerate_extremal_rays(g["matrix"])
    ok = len(got) == len(g["rays"])
    lines = []
    for rec, ref in zip(got, g["rays"]):
        match = (rec.supp == tuple(ref["supp"]) and rec.image_supp == tuple(ref["image_supp"])
                 and np.max(np.abs(rec.vector - np.array(ref["vector"]))) <= GOLDEN_TOL)
        ok &= bool(match)
        lines.append(f"{_fmt(rec.vector)}  supp={rec.supp}  supp(Xa)={rec.image_supp}{'' if match else '  MISMATCH'}")
    return ReproResult("spc-example", ok, lines)


def _detect_tura() -> ReproResult:
    g = golden("tura")
    rep = detect_not_cp(np.array(g["matrix"], dtype=float))
    ok = (rep.status == g["status"]
          and np.max(np.abs(rep.scaled - np.array(g["projected_times_d"]))) <= GOLDEN_TOL
          and rep.pairing is not None and abs(rep.pairing - g["pairing"]) <= GOLDEN_TOL
          and np.max(np.abs(rep.verdict.certificate.vector - np.array(g["witness"]))) <= GOLDEN_TOL)
    lines = [f"projected      = {_fmt(rep.projected)}",
             f"projected * d  = {_fmt(rep.scaled)}",
             f"status         = {rep.status}",
             f"witness        = {_fmt(rep.verdict.certificate.vector) if rep.verdict.certificate is not None else '-'}",
             f"trace(W X)     = {rep.pairing}"]
    return ReproResult("detect-tura", ok, lines)


def _mu_example() -> ReproResult:
    g = golden("examples")["d3_mu"]
    ok, lines = True, []
    for mu, want_ppt, want_sep in zip(g["mu"], g["ppt"], g["sep"]):
        t = AbcTriple([2 * mu, 1, 4 * mu * mu], [2 * mu] * 3, [2 * mu] * 3)
        ppt, sep = is_ppt(t).verdict.value, extremal_b_sep_check(t).verdict.value
        ok &= ppt == want_ppt and sep == want_sep
        lines.append(f"mu={mu:<4} ppt={ppt:<10} sep={sep}")
    return ReproResult("example-mu", ok, lines)


def _ppt_entangled() -> ReproResult:
    g = golden("examples")["ppt_entangled"]
    t = construct_ppt_entangled(g["d"], g["alpha"])
    want = AbcTriple(g["a"], g["b"], g["c"])
    ok = bool(np.allclose(t.a, want.a) and np.allclose(t.b, want.b) and np.allclose(t.c, want.c))
    ppt, sep = is_ppt(t).verdict.value, extremal_b_sep_check(t).verdict.value
    ok &= ppt == g["ppt"] and sep == g["sep"]
    lines = [json.dumps(t.to_json()), f"ppt={ppt} sep={sep}"]
    for d in range(4, 8):
        tt = construct_ppt_entangled(d, 2.0)
        lines.append(f"d={d}: ppt={is_ppt(tt).verdict.value} sep={extremal_b_sep_check(tt).verdict.value}")
    return ReproResult("example-ppt-entangled", ok, lines)


def _slice(name: str) -> ReproResult:
    rows = slice_rows(name)
    ok, lines = True, [f"{len(rows)} rows"]
    ref = golden("slices").get(name, {})
    for key, series in (("dnn_vertices", "dnn_vertex"), ("cp_vertices", "cp_vertex"), ("spn_vertices", "spn_vertex")):
        if key not in ref:
            continue
        got = sorted((round(x, 12), round(y, 12)) for s, x, y in rows if s == series)
        want = sorted((round(x, 12), round(y, 12)) for x, y in ref[key])
        match = len(got) == len(want) and all(abs(p[0] - q[0]) <= GOLDEN_TOL and abs(p[1] - q[1]) <= GOLDEN_TOL
                                              for p, q in zip(got, want))
        ok &= match
        lines.append(f"{key}: {got}{'' if match else '  MISMATCH vs ' + str(want)}")
    if name != "d5dual":
        d = {"d4": 4, "d5": 5, "d6face": 6, "d7face": 7}[name]
        curve = [(x, y) for s, x, y in rows if s in ("cp_curve", "cp_vertex")]
        bad = 0
        for x, y in curve:
            a = np.zeros(d)
            a[0], a[1], a[-1], a[2], a[-2] = 1.0, x, x, y, y
            bad += not cp_member(a).is_member
        ok &= bad == 0
        lines.append(f"cp boundary points certified: {len(curve) - bad}/{len(curve)}")
    return ReproResult(f"slice-{name}", ok, lines, {f"slice-{name}.csv": slice_csv(name)})


TARGETS = {f"dnn-table-d{d}": (lambda d=d: _dnn_table(d)) for d in range(2, 7)}
TARGETS.update({
    "spc-example": _spc_example,
    "detect-tura": _detect_tura,
    "example-mu": _mu_example,
    "example-ppt-entangled": _ppt_entangled,
})
TARGETS.update({f"slice-{n}": (lambda n=n: _slice(n)) for n in ("d4", "d5", "d5dual", "d6face", "d7face")})


def run_target(name: str) -> ReproResult:
    if name not in TARGETS:
        raise KeyError(f"unknown target {name!r}; choose from {', '.join(sorted(TARGETS))}")
    t0 = time.perf_counter()
    res = TARGETS[name]()
    res.seconds = time.perf_counter() - t0
    return res


def ray_line(r: Ray) -> str:
    tag = "" if r.extremal else "  [non-extremal]"
    return f"{r.label:<28} {_fmt(r.vector)}{tag}"
