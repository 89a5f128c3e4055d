"""Separable decompositions of cyclic triples and the family with an extremal ``b`` (or ``c``).

A list of vector pairs ``(v_k, w_k)`` produces the triple::

    a = sum_k |v_k|^2 * reverse(|w_k|^2)
    b = sum_k (v_k w_k) * reverse(conj(v_k w_k))
    c = sum_k (v_k conj(w_k)) * reverse(conj(v_k) w_k)

(products entrywise, ``*`` cyclic convolution). This equals the cyclic and
diagonal-sign twirl of ``sum_k |v_k><v_k| (x) |w_k><w_k|`` summed over the
``d`` shifts, so any triple obtained this way is separable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .certificates import ConeVerdict, PptViolation, member, not_member, vec_from_json, vec_to_json
from .circulant import dft, hermitian_autocorr, is_hermitian
from .constants import DEFAULT_TOL
from .lcsi import AbcTriple, is_ppt


@dataclass
class TcpDecomposition:
    pairs: list[tuple[np.ndarray, np.ndarray]]
    scale: float = 1.0  # multiplies the sums above; 1/d gives the averaged twirl

    def series(self) -> AbcTriple:
        if not self.pairs:
            raise ValueError("empty decomposition")
        d = np.asarray(self.pairs[0][0]).size
        a = np.zeros(d, complex)
        b = np.zeros(d, complex)
        c = np.zeros(d, complex)
        for v, w in self.pairs:
            v, w = np.asarray(v, complex), np.asarray(w, complex)
            if v.shape != (d,) or w.shape != (d,):
                raise ValueError("all vectors in a decomposition must have the same length")
            a += hermitian_autocorr(np.abs(v) ** 2, np.abs(w) ** 2)
            x = v * w
            b += hermitian_autocorr(x, np.conj(x))
            y = v * np.conj(w)
            c += hermitian_autocorr(y, np.conj(y))
        return AbcTriple(self.scale * a, self.scale * b, self.scale * c)

    def to_json(self) -> dict:
        return {"scale": self.scale, "pairs": [{"v": vec_to_json(v), "w": vec_to_json(w)} for v, w in self.pairs]}

    @classmethod
    def from_json(cls, obj: dict) -> "TcpDecomposition":
        try:
            pairs = [(vec_from_json(p["v"]), vec_from_json(p["w"])) for p in obj["pairs"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed decomposition: {exc}") from None
        return cls(pairs, float(obj.get("scale", 1.0)))

    @classmethod
    def loads(cls, text: str) -> "TcpDecomposition":
        return cls.from_json(json.loads(text))


@dataclass
class TcpReport:
    ok: bool
    residuals: dict[str, float]
    worst: tuple[str, int] | None = None


def verify_tcp(t: AbcTriple, dec: TcpDecomposition, tol: float = DEFAULT_TOL) -> TcpReport:
    """Recompute the three series and compare with ``t`` entrywise, relative to the largest entry."""
    got = dec.series()
    if got.d != t.d:
        raise ValueError(f"decomposition has length {got.d}, triple has {t.d}")
    s = max(1.0, float(np.max(np.abs(np.concatenate([t.a, t.b, t.c])))))
    residuals, worst, worst_val = {}, None, -1.0
    for name in "abc":
        diff = np.abs(getattr(got, name) - getattr(t, name))
        residuals[name] = float(diff.max())
        if diff.max() > worst_val:
            worst_val, worst = float(diff.max()), (name, int(np.argmax(diff)))
    ok = worst_val <= tol * s
    return TcpReport(ok, residuals, None if ok else worst)


@dataclass
class SepDecomposition:
    decomposition: TcpDecomposition
    residual: float

    kind = "sep_decomposition"

    def verify(self, t: AbcTriple, tol: float) -> bool:
        return verify_tcp(t, self.decomposition, tol).ok

    def to_json(self) -> dict:
        return {"kind": self.kind, "residual": self.residual, **self.decomposition.to_json()}


def flat_modulus_check(x, tol: float = DEFAULT_TOL) -> bool:
    """True iff every cyclic autocorrelation of ``x`` has modulus ``sum |x_i|^2``."""
    x = np.asarray(x, complex)
    r = hermitian_autocorr(x, np.conj(x))
    n0 = float(np.sum(np.abs(x) ** 2))
    return bool(np.all(np.abs(np.abs(r) - n0) <= tol * max(1.0, n0)))


def phase_vector(d: int, k: float) -> np.ndarray:
    """``exp(-2 pi i j k / d)`` for ``j = 0..d-1``; ``k`` may be a half-integer."""
    return np.exp(-2j * np.pi * np.arange(d) * k / d)


def extremal_mode(b, tol: float = DEFAULT_TOL) -> int | None:
    """Mode ``k`` if ``b`` is a positive multiple of inverse-DFT column ``k``, else ``None``."""
    b = np.asarray(b, complex)
    s = max(1.0, float(np.max(np.abs(b))))
    if abs(b[0]) <= tol * s or not is_hermitian(b, tol):
        return None
    fb = dft(b)
    if np.any(np.abs(fb.imag) > tol * s) or np.any(fb.real < -tol * s):
        return None
    big = np.flatnonzero(np.abs(fb) > tol * s)
    if big.size != 1 or not flat_modulus_check(b, tol):
        return None
    return int(big[0])


def is_circ_psd(c, tol: float = DEFAULT_TOL) -> bool:
    c = np.asarray(c, complex)
    s = max(1.0, float(np.max(np.abs(c))))
    fc = dft(c)
    return bool(is_hermitian(c, tol) and np.all(np.abs(fc.imag) <= tol * s) and np.all(fc.real >= -tol * s))


@dataclass(frozen=True)
class ExtremalSetup:
    extremal: str  # "b" or "c"
    mode: int
    a: np.ndarray
    other: np.ndarray


def extremal_b_hypotheses(t: AbcTriple, tol: float = DEFAULT_TOL) -> ExtremalSetup:
    """Check the family hypotheses; raises ``ValueError`` naming the failed one.

    ``a`` real nonnegative, one of ``b``/``c`` a positive multiple of an
    inverse-DFT column, the other a PSD circulant; first entries shared.
    """
    s = max(1.0, float(np.max(np.abs(t.a))))
    if np.any(np.abs(t.a.imag) > tol * s) or np.any(t.a.real < -tol * s):
        raise ValueError("hypothesis failed: a must be real and nonnegative")
    for name, other in (("b", "c"), ("c", "b")):
        k = extremal_mode(getattr(t, name), tol)
        if k is not None and is_circ_psd(getattr(t, other), tol):
            return ExtremalSetup(name, k, t.a.real.copy(), getattr(t, other))
    raise ValueError("hypothesis failed: neither b nor c is extremal with the other positive semidefinite")


def _sep_certificate(t: AbcTriple, setup: ExtremalSetup) -> TcpDecomposition:
    d, a0 = t.d, float(t.a[0].real)
    pairs = []
    for ell in range(1, d):
        r = setup.a[ell] - a0
        if r > 0:
            pairs.append((np.sqrt(r) * np.eye(d)[ell], np.eye(d)[0]))
    gamma = np.maximum(dft(setup.other).real, 0.0) / np.sqrt(d)
    gamma[gamma <= 1e-14 * max(float(gamma.max()), 1e-300)] = 0.0  # drop rounding-level modes
    for m in range(d):
        if gamma[m] <= 0:
            continue
        kb, kc = (setup.mode, m) if setup.extremal == "b" else (m, setup.mode)
        phi = phase_vector(d, (kb + kc) / 2.0)
        chi = phase_vector(d, (kb - kc) / 2.0)
        pairs.append((np.sqrt(gamma[m] / d) * phi, chi))
    return TcpDecomposition(pairs)


def extremal_b_sep_check(t: AbcTriple, tol: float = DEFAULT_TOL) -> ConeVerdict:
    """Separability when ``b`` (or ``c``) is extremal: separable iff ``a_l >= a_0`` for every ``l``.

    ``Member`` carries an explicit decomposition re-verified against ``t``.
    """
    setup = extremal_b_hypotheses(t, tol)
    a, a0 = setup.a, setup.a[0]
    s = max(1.0, float(np.max(np.abs(a))))
    gap = a - a0
    if np.any(gap < -tol * s):
        ell = int(np.argmin(gap))
        return not_member(PptViolation("a_l >= a_0", ell, float(gap[ell]), side="separability"), tol=tol,
                          reason=f"a_{ell} < a_0, so the triple is entangled", extremal=setup.extremal)
    dec = _sep_certificate(t, setup)
    rep = verify_tcp(t, dec, max(tol, 1e-9))
    if not rep.ok:
        raise RuntimeError(f"separable decomposition failed to verify: {rep.residuals}")
    return member(SepDecomposition(dec, max(rep.residuals.values())), tol=tol,
                  reason="a_l >= a_0 for all l", extremal=setup.extremal)


def extremal_b_ppt_check(t: AbcTriple, tol: float = DEFAULT_TOL) -> ConeVerdict:
    """Under the same hypotheses: PPT iff ``a_l a_-l >= a_0^2`` for every ``l``."""
    setup = extremal_b_hypotheses(t, tol)
    a, d = setup.a, t.d
    s = max(1.0, float(np.max(np.abs(a))))
    gap = a * a[(-np.arange(d)) % d] - a[0] ** 2
    if np.any(gap < -tol * s * s):
        ell = int(np.argmin(gap))
        return not_member(PptViolation("a_l a_-l >= a_0^2", ell, float(gap[ell])), tol=tol,
                          reason=f"a_{ell} a_-{ell} < a_0^2", extremal=setup.extremal)
    return member(tol=tol, reason="a_l a_-l >= a_0^2 for all l", extremal=setup.extremal)


def construct_ppt_entangled(d: int, alpha: float, tol: float = DEFAULT_TOL) -> AbcTriple:
    """``a = (1, alpha, 1, ..., 1, 1/alpha)``, ``b = c = e``: PPT and entangled for ``alpha > 1``."""
    if d < 3:
        raise ValueError("need d >= 3 so that alpha and 1/alpha sit at distinct positions")
    if not alpha > 1:
        raise ValueError("need alpha > 1")
    a = np.ones(d)
    a[1], a[-1] = alpha, 1.0 / alpha
    t = AbcTriple(a, np.ones(d), np.ones(d))
    if not is_ppt(t, tol).is_member or not extremal_b_sep_check(t, tol).is_not_member:
        raise RuntimeError("constructed triple failed its own PPT / entanglement check")
    return t


def corr_circulant_decompose(c, tol: float = DEFAULT_TOL) -> TcpDecomposition:
    """Decomposition of ``(e, e, c)`` for a correlation circulant ``c`` (``c_0 = 1``, PSD).

    Each Fourier mode ``m`` of ``c`` contributes one pair of phase vectors with
    weight ``dft(c)[m] / sqrt(d)``; these weights sum to 1.
    """
    c = np.asarray(c, complex)
    if abs(c[0] - 1.0) > tol or not is_circ_psd(c, tol):
        raise ValueError("need c_0 = 1 and circ(c) positive semidefinite")
    d = c.size
    t = AbcTriple(np.ones(d), np.ones(d), c)
    return _sep_certificate(t, ExtremalSetup("b", 0, np.ones(d), c))


def phase_mixture(c) -> list[tuple[float, np.ndarray]]:
    """``circ(c) = sum_k weight_k z_k z_k^*`` with ``z_k`` the unnormalized phase vectors and weights summing to ``c_0``."""
    c = np.asarray(c, complex)
    d = c.size
    lam = np.sqrt(d) * dft(c)
    return [(float(lam[k].real) / d, np.conj(phase_vector(d, k))) for k in range(d)]
