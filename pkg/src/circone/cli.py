"""Command-line interface.

Exit codes: 0 member / pass, 1 not a member / fail, 2 undecided, 3 input error.
``CIRCONE_TOL`` overrides the default tolerance; ``-`` reads a file argument from stdin.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .certificates import ConeVerdict, Verdict, vec_from_json, vec_to_json
from .cones import (
    cop5_extremal_catalog,
    cop_member,
    cp5_extremal_catalog,
    cp6_face_catalogs,
    cp7_face_catalogs,
    cp_member,
    dnn_extremal_catalog,
    dnn_member,
    spn5_extremal_catalog,
    spn_member,
)
from .cones.dnn import circ_ewp_extremal, circ_psd_extremal
from .constants import DEFAULT_TOL
from .circulant import circ
from .dicke import detect_not_cp, dicke_ppt_check, dicke_sep_check, dicke_to_lcsi
from .lcsi import AbcTriple, is_ppt, is_psd, spectrum
from .reproduce import TARGETS, ray_line, run_target
from .slices import SLICES, slice_csv
from .spc import enumerate_extremal_rays
from .tcp import (
    TcpDecomposition,
    construct_ppt_entangled,
    extremal_b_hypotheses,
    extremal_b_ppt_check,
    extremal_b_sep_check,
    verify_tcp,
)

EXIT_INPUT = 3
MAX_TOL = 1e-3
CONES = ("dnn", "psd", "ewp", "cp5", "cop5", "spn5", "cp6face", "cp7face")


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    tol: float = DEFAULT_TOL
    theta_samples: int = 256
    fmt: str = "json"
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.tol <= MAX_TOL:
            raise InputError(f"tolerance must lie in (0, {MAX_TOL:g}], got {self.tol:g}")
        if self.theta_samples < 2:
            raise InputError(f"theta sample count must be at least 2, got {self.theta_samples}")


def _env_tol() -> float:
    raw = os.environ.get("CIRCONE_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise InputError(f"CIRCONE_TOL is not a number: {raw!r}") from None


# -- input ---------------------------------------------------------------------

def _load_json(src: str):
    """Parse ``src`` as inline JSON, a file path, or ``-`` for stdin."""
    if src == "-":
        text = sys.stdin.read()
    elif src.lstrip().startswith(("[", "{")):
        text = src
    else:
        try:
            text = Path(src).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {src!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {src!r}: {exc}") from None


def _load_triple(src: str) -> AbcTriple:
    obj = _load_json(src)
    if isinstance(obj, dict) and "triple" in obj:
        obj = obj["triple"]
    return AbcTriple.from_json(obj)


def _load_matrix(src: str) -> np.ndarray:
    obj = _load_json(src)
    if isinstance(obj, dict):
        obj = obj.get("matrix")
    try:
        m = np.array(obj, dtype=float)
    except (TypeError, ValueError):
        raise InputError("matrix must be a JSON list of equal-length numeric rows") from None
    if m.ndim != 2:
        raise InputError("matrix must be a JSON list of equal-length numeric rows")
    return m


def _load_vector(src: str) -> np.ndarray:
    obj = _load_json(src)
    if isinstance(obj, dict):
        obj = obj.get("vector", obj.get("a"))
    return vec_from_json(obj)


# -- output --------------------------------------------------------------------

def _emit(cfg: RunConfig, payload, table: str, csv: str | None = None) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=1))
    elif cfg.fmt == "csv" and csv is not None:
        sys.stdout.write(csv)
    else:
        print(table)


def _verdict_text(v: ConeVerdict, title: str) -> str:
    lines = [f"{title}{v.verdict.value}" + (f": {v.reason}" if v.reason else "")]
    if v.certificate is not None:
        lines.append("certificate: " + json.dumps(v.certificate.to_json()))
    return "\n".join(lines)


def _verdict_out(cfg: RunConfig, v: ConeVerdict, title: str = "") -> int:
    _emit(cfg, v.to_json(), _verdict_text(v, title))
    return v.verdict.exit_code


def _rays_out(cfg: RunConfig, header: dict, rows: list[dict], table: str) -> int:
    csv = "label,extremal,vector\n" + "".join(
        f"{r.get('label', '')},{r.get('extremal', True)},\"{' '.join(map(str, r['vector']))}\"\n" for r in rows)
    _emit(cfg, {**header, "rays": rows}, table, csv)
    return 0


# -- commands ------------------------------------------------------------------

def cmd_spectrum(cfg, args) -> int:
    sp = spectrum(_load_triple(args.triple))

    def z(x):
        x = complex(x)
        return [x.real, x.imag] if x.imag else x.real

    payload = {"circulant": vec_to_json(sp.circulant),
               "pairs": [{"k": k, "plus": z(lp), "minus": z(lm), "multiplicity": m} for k, lp, lm, m in sp.pairs],
               "eigenvalues": vec_to_json(sp.eigenvalues)}
    lines = ["circulant block: " + ", ".join(f"{x:.10g}" for x in sp.circulant)]
    lines += [f"k={k}: {lp:.10g}, {lm:.10g}  x{m}" for k, lp, lm, m in sp.pairs]
    _emit(cfg, payload, "\n".join(lines))
    return 0


def cmd_psd(cfg, args) -> int:
    return _verdict_out(cfg, is_psd(_load_triple(args.triple), cfg.tol), "psd: ")


def cmd_ppt(cfg, args) -> int:
    return _verdict_out(cfg, is_ppt(_load_triple(args.triple), cfg.tol), "ppt: ")


def sep_verdict(t: AbcTriple, cfg: RunConfig) -> ConeVerdict:
    """Separability by the first exact route that applies: PPT failure, extremal ``b``/``c``, symmetric mixture."""
    ppt = is_ppt(t, cfg.tol)
    if ppt.is_not_member:
        ppt.reason = "not PPT, hence entangled: " + ppt.reason
        return ppt
    try:
        extremal_b_hypotheses(t, cfg.tol)
    except ValueError:
        pass
    else:
        return extremal_b_sep_check(t, cfg.tol)
    a = t.a
    b0 = np.zeros_like(a)
    b0[0] = a[0]
    if np.allclose(t.c, a, atol=cfg.tol) and np.allclose(t.b, b0, atol=cfg.tol) and np.allclose(a.imag, 0):
        return dicke_sep_check(a.real, cfg.tol, theta_samples=cfg.theta_samples, seed=cfg.seed)
    return ConeVerdict(Verdict.UNDECIDED, tol=cfg.tol,
                       reason="PPT, and no exact separability test applies to this triple")


def cmd_sep(cfg, args) -> int:
    return _verdict_out(cfg, sep_verdict(_load_triple(args.triple), cfg), "sep: ")


def cmd_catalog(cfg, args) -> int:
    cone, d = args.cone, args.d
    if cone in ("dnn", "psd", "ewp") and d is None:
        raise InputError(f"--d is required for the {cone} catalog")
    if cone == "dnn":
        recs = dnn_extremal_catalog(d, cfg.tol)
        rows = [{"vector": vec_to_json(r.vector), "supp": list(r.supp), "fourier_supp": list(r.image_supp)}
                for r in recs]
        table = "\n".join(f"{str(r.supp):<20} {str(r.image_supp):<20} {np.round(r.vector, 12)}" for r in recs)
        return _rays_out(cfg, {"cone": cone, "d": d}, rows, table)
    if cone in ("psd", "ewp"):
        fn = circ_psd_extremal if cone == "psd" else circ_ewp_extremal
        vecs = [fn(d, k) for k in range(d)]
        rows = [{"label": f"{cone}{k}", "vector": vec_to_json(v)} for k, v in enumerate(vecs)]
        return _rays_out(cfg, {"cone": cone, "d": d}, rows,
                         "\n".join(" ".join(f"{z:.6g}" for z in v) for v in vecs))
    if cone == "spn5":
        rays = spn5_extremal_catalog()
    elif cone == "cop5":
        rays = cop5_extremal_catalog().rays(cfg.theta_samples)
    elif cone == "cp5":
        rays = cp5_extremal_catalog().rays(cfg.theta_samples)
    else:
        cats = cp6_face_catalogs() if cone == "cp6face" else cp7_face_catalogs()
        rays = [r for fc in cats.values() for r in fc.primal.rays(cfg.theta_samples)]
    rows = [{"label": r.label, "vector": vec_to_json(r.vector), "extremal": r.extremal} for r in rays]
    return _rays_out(cfg, {"cone": cone}, rows, "\n".join(ray_line(r) for r in rays))


def _enum_table(recs) -> str:
    lines = [f"{'supp':<24} {'supp(X a)':<24} vector"]
    lines += [f"{str(r.supp):<24} {str(r.image_supp):<24} {np.round(r.vector, 12)}" for r in recs]
    return "\n".join(lines)


def cmd_enum(cfg, args) -> int:
    recs = enumerate_extremal_rays(_load_matrix(args.matrix), cfg.tol)
    payload = [{"vector": vec_to_json(r.vector), "supp": list(r.supp), "image_supp": list(r.image_supp)} for r in recs]
    if getattr(args, "table", False):
        cfg.fmt = "table"
    csv = "supp,image_supp,vector\n" + "".join(
        f"\"{' '.join(map(str, r.supp))}\",\"{' '.join(map(str, r.image_supp))}\",\"{' '.join(f'{x:.15g}' for x in r.vector)}\"\n"
        for r in recs)
    _emit(cfg, payload, _enum_table(recs), csv)
    return 0


def cmd_project(cfg, args) -> int:
    rep = detect_not_cp(_load_matrix(args.matrix), cfg.tol)
    lines = [f"projected     {np.round(rep.projected, 12)}",
             f"projected * d {np.round(rep.scaled, 12)}",
             f"status        {rep.status}"]
    if rep.pairing is not None:
        lines.append(f"witness       {rep.verdict.certificate.vector}")
        lines.append(f"trace(W X)    {rep.pairing:.12g}")
    _emit(cfg, rep.to_json(), "\n".join(lines))
    return 1 if rep.status == "NotCP" else 2


def cmd_verify(cfg, args) -> int:
    t = _load_triple(args.triple)
    dec = TcpDecomposition.from_json(_load_json(args.decomp))
    rep = verify_tcp(t, dec, cfg.tol)
    payload = {"ok": rep.ok, "residuals": rep.residuals, "worst": rep.worst}
    _emit(cfg, payload, ("pass" if rep.ok else f"fail at {rep.worst}") + f"  residuals={rep.residuals}")
    return 0 if rep.ok else 1


def cmd_make_ppt_entangled(cfg, args) -> int:
    t = construct_ppt_entangled(args.d, args.alpha, cfg.tol)
    ppt, sep = is_ppt(t, cfg.tol), extremal_b_sep_check(t, cfg.tol)
    payload = {"triple": t.to_json(), "ppt": ppt.to_json(), "sep": sep.to_json()}
    _emit(cfg, payload, json.dumps(t.to_json()) + "\n" + _verdict_text(ppt, "ppt: ") + "\n" + _verdict_text(sep, "sep: "))
    return 0


def cmd_reproduce(cfg, args) -> int:
    if args.target != "all" and args.target not in TARGETS:
        raise InputError(f"unknown target {args.target!r}; choose from all, {', '.join(sorted(TARGETS))}")
    names = sorted(TARGETS) if args.target == "all" else [args.target]
    failed = 0
    for name in names:
        res = run_target(name)
        print(f"[{'PASS' if res.ok else 'FAIL'}] {res.target}")
        for line in res.lines:
            print("    " + line)
        if args.out:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            for fname, content in res.artifacts.items():
                (out / fname).write_text(content)
        failed += not res.ok
    return 1 if failed else 0


def cmd_cones_member(cfg, args) -> int:
    a = _load_vector(args.vec)
    if args.d is not None and a.size != args.d:
        raise InputError(f"vector has length {a.size}, expected --d {args.d}")
    if args.cone == "dnn":
        v = dnn_member(a, cfg.tol)
    elif args.cone == "cp":
        v = cp_member(a, cfg.tol, theta_samples=cfg.theta_samples, seed=cfg.seed)
    elif args.cone == "cop":
        v = cop_member(a, cfg.tol, seed=cfg.seed)
    else:
        v = spn_member(a, cfg.tol)
    return _verdict_out(cfg, v, f"{args.cone}: ")


def cmd_cones_slice(cfg, args) -> int:
    text = slice_csv(args.figure, samples=args.samples, theta_samples=cfg.theta_samples, seed=cfg.seed)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_dicke_check(cfg, args) -> int:
    p = _load_matrix(args.p)
    d = p.shape[0]
    if p.shape != (d, d):
        raise InputError(f"weight matrix must be square, got shape {p.shape}")
    a = p[0].copy()
    s = max(1.0, float(np.max(np.abs(p))))
    if np.max(np.abs(circ(a) - p)) > cfg.tol * s:
        raise InputError("weight matrix is not circulant: row i must be row 0 shifted right by i")
    if np.max(np.abs(p - p.T)) > cfg.tol * s:
        raise InputError("weight matrix is not symmetric")
    if np.min(p) < -cfg.tol * s:
        raise InputError("mixture weights must be nonnegative")
    t = dicke_to_lcsi(a, cfg.tol)
    ppt = dicke_ppt_check(a, cfg.tol)
    sep = dicke_sep_check(a, cfg.tol, theta_samples=cfg.theta_samples, seed=cfg.seed)
    payload = {"a": vec_to_json(a), "triple": t.to_json(), "ppt": ppt.to_json(), "sep": sep.to_json()}
    _emit(cfg, payload, f"a = {a}\n" + _verdict_text(ppt, "ppt: ") + "\n" + _verdict_text(sep, "sep: "))
    return sep.verdict.exit_code


def cmd_tcp_sep_check(cfg, args) -> int:
    t = _load_triple(args.triple)
    ppt = extremal_b_ppt_check(t, cfg.tol)
    sep = extremal_b_sep_check(t, cfg.tol)
    payload = {"ppt": ppt.to_json(), "sep": sep.to_json()}
    _emit(cfg, payload, _verdict_text(ppt, "ppt: ") + "\n" + _verdict_text(sep, "sep: "))
    return sep.verdict.exit_code


# -- parser --------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="tolerance (default $CIRCONE_TOL or 1e-9)")
    p.add_argument("--theta-samples", type=int, default=argparse.SUPPRESS, help="samples per curved family (256)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized searches (0)")
    p.add_argument("--format", choices=("json", "table", "csv"), default=argparse.SUPPRESS, help="output format (json)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    root = argparse.ArgumentParser(prog="circone", parents=[common],
                                   description="Circulant cones and cyclic two-party states.",
                                   epilog="exit codes: 0 member/pass, 1 not member/fail, 2 undecided, 3 input error")
    sub = root.add_subparsers(dest="command", required=True, metavar="command")

    def add(group, name, fn, help_):
        p = group.add_parser(name, help=help_, parents=[common])
        p.set_defaults(fn=fn)
        return p

    def triple(p):
        p.add_argument("--triple", required=True, help="triple JSON {a, b, c}: file, inline JSON or - for stdin")
        return p

    triple(add(sub, "spectrum", cmd_spectrum, "closed-form spectrum of a triple"))
    triple(add(sub, "psd", cmd_psd, "positive semidefiniteness of a triple"))
    triple(add(sub, "ppt", cmd_ppt, "PPT test of a triple"))
    triple(add(sub, "sep", cmd_sep, "separability where an exact test applies"))
    p = add(sub, "catalog", cmd_catalog, "extremal rays of a named cone")
    p.add_argument("--cone", required=True, choices=CONES)
    p.add_argument("--d", type=int)
    p = add(sub, "enum", cmd_enum, "extremal rays of {x >= 0 : X x >= 0}")
    p.add_argument("--matrix", required=True)
    p.add_argument("--table", action="store_true", help="three-column table instead of JSON")
    p = add(sub, "project", cmd_project, "cyclic projection and not-CP detection")
    p.add_argument("--matrix", required=True)
    p = triple(add(sub, "verify", cmd_verify, "check a separable decomposition"))
    p.add_argument("--decomp", required=True)
    p = add(sub, "make-ppt-entangled", cmd_make_ppt_entangled, "PPT entangled triple with certificates")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p = add(sub, "reproduce", cmd_reproduce, "regenerate reference tables and slices, diff against golden data")
    p.add_argument("target", help=f"one of: all, {', '.join(sorted(TARGETS))}")
    p.add_argument("--out", help="directory for CSV artifacts")

    cones = sub.add_parser("cones", help="cone membership, catalogs and slices").add_subparsers(
        dest="sub", required=True, metavar="command")
    p = add(cones, "member", cmd_cones_member, "membership test with certificate")
    p.add_argument("--cone", required=True, choices=("dnn", "cp", "cop", "spn"))
    p.add_argument("--vec", "--vector", dest="vec", required=True, help="vector JSON, file or -")
    p.add_argument("--d", type=int)
    p = add(cones, "catalog", cmd_catalog, "extremal rays")
    p.add_argument("--cone", required=True, choices=CONES)
    p.add_argument("--d", type=int)
    p = add(cones, "slice", cmd_cones_slice, "CSV slice points and boundary curves")
    p.add_argument("--figure", required=True, choices=sorted(SLICES))
    p.add_argument("--samples", type=int, default=200, help="random completely positive sample points")
    p.add_argument("--out")

    dicke = sub.add_parser("dicke", help="symmetric two-excitation mixtures").add_subparsers(
        dest="sub", required=True, metavar="command")
    p = add(dicke, "check", cmd_dicke_check, "circulant test, embedding, PPT and separability verdicts")
    p.add_argument("--p", required=True, help="circulant weight matrix JSON")
    p = add(dicke, "detect-not-cp", cmd_project, "not-CP detection by cyclic projection")
    p.add_argument("--matrix", required=True)

    tcp = sub.add_parser("tcp", help="separable decompositions").add_subparsers(
        dest="sub", required=True, metavar="command")
    p = triple(add(tcp, "verify", cmd_verify, "check a decomposition"))
    p.add_argument("--decomp", required=True)
    triple(add(tcp, "sep-check", cmd_tcp_sep_check, "extremal b (or c) family test"))
    p = add(tcp, "make-ppt-entangled", cmd_make_ppt_entangled, "PPT entangled triple with certificates")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    return root


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        tol = getattr(args, "tol", None)
        cfg = RunConfig(_env_tol() if tol is None else tol, getattr(args, "theta_samples", 256),
                        getattr(args, "format", "json"), getattr(args, "seed", 0))
        return args.fn(cfg, args)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def spc_enum_main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    return main(["enum", *argv])


if __name__ == "__main__":
    sys.exit(main())
