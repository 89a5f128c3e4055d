"""Bipartite matrices invariant under simultaneous cyclic shifts and diagonal signs.

Such a ``d^2 x d^2`` matrix is fixed by three cyclic vectors ``(a, b, c)`` with a
shared first entry. With ``|p, q>`` stored at flat index ``p*d + q`` and
``+`` taken mod ``d``::

    X = sum_{j,k}      a_k |j+k, j  ><j+k, j|
      + sum_{j, k>=1}  b_k |j+k, j+k><j,   j|
      + sum_{j, k>=1}  c_k |j+k, j  ><j, j+k|

The diagonal-pair span ``{|jj>}`` carries ``circ(b)`` (transposed) and every
off-diagonal pair ``{|j+k, j>, |j, j+k>}`` carries the block
``[[a_k, c_k], [c_{-k}, a_{-k}]]``; the spectrum and the positivity tests below
are read off that splitting.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .certificates import PptViolation, member, not_member, vec_from_json, vec_to_json, ConeVerdict
from .circulant import as_cyc, circ_eigenvalues, dft, is_hermitian, reverse
from .constants import DEFAULT_TOL

MAX_DENSE_D = 32


@dataclass(frozen=True)
class AbcTriple:
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a, b, c = (as_cyc(v, complex) for v in (self.a, self.b, self.c))
        if not (a.size == b.size == c.size):
            raise ValueError(f"a, b, c must share a length, got {a.size}, {b.size}, {c.size}")
        scale = max(1.0, abs(a[0]))
        if abs(a[0] - b[0]) > DEFAULT_TOL * scale or abs(a[0] - c[0]) > DEFAULT_TOL * scale:
            raise ValueError(f"first entries must agree: a0={a[0]}, b0={b[0]}, c0={c[0]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def d(self) -> int:
        return self.a.size

    @classmethod
    def from_json(cls, obj: dict) -> "AbcTriple":
        try:
            a, b, c = (vec_from_json(obj[k]) for k in "abc")
        except KeyError as exc:
            raise ValueError(f"triple is missing key {exc}") from None
        t = cls(a, b, c)
        if "d" in obj and int(obj["d"]) != t.d:
            raise ValueError(f"declared d={obj['d']} but vectors have length {t.d}")
        return t

    @classmethod
    def loads(cls, text: str) -> "AbcTriple":
        return cls.from_json(json.loads(text))

    def to_json(self) -> dict:
        return {"d": self.d, "a": vec_to_json(self.a), "b": vec_to_json(self.b), "c": vec_to_json(self.c)}

    def swap_bc(self) -> "AbcTriple":
        return AbcTriple(self.a, self.c, self.b)

    def reflect(self) -> "AbcTriple":
        """Reflect all three vectors; this is the transposed index convention ``|i, i+k>``."""
        return AbcTriple(reverse(self.a), reverse(self.b), reverse(self.c))


def build_dense(t: AbcTriple) -> np.ndarray:
    d = t.d
    if d > MAX_DENSE_D:
        raise ValueError(f"dense construction is limited to d <= {MAX_DENSE_D}")
    x = np.zeros((d * d, d * d), dtype=complex)
    for j in range(d):
        for k in range(d):
            p = (j + k) % d
            x[p * d + j, p * d + j] += t.a[k]
            if k:
                x[p * d + p, j * d + j] += t.b[k]
                x[p * d + j, j * d + p] += t.c[k]
    return x


@dataclass(frozen=True)
class Spectrum:
    """Closed-form eigenvalues.

    ``circulant`` holds the ``d`` eigenvalues of the diagonal-pair block; each
    entry of ``pairs`` is ``(k, lam_plus, lam_minus, multiplicity)`` for
    ``1 <= k <= d // 2``.
    """

    circulant: np.ndarray
    pairs: tuple[tuple[int, complex, complex, int], ...]

    @property
    def eigenvalues(self) -> np.ndarray:
        vals = [self.circulant]
        for _, lp, lm, mult in self.pairs:
            vals.append(np.full(mult, lp))
            vals.append(np.full(mult, lm))
        return np.concatenate(vals)


def pair_block_eigenvalues(t: AbcTriple, k: int) -> tuple[complex, complex]:
    d = t.d
    ak, am = t.a[k], t.a[(-k) % d]
    disc = np.sqrt(complex((ak - am) ** 2 + 4.0 * t.c[(-k) % d] * t.c[k]))
    return (ak + am + disc) / 2.0, (ak + am - disc) / 2.0


def spectrum(t: AbcTriple) -> Spectrum:
    d = t.d
    pairs = []
    for k in range(1, d // 2 + 1):
        lp, lm = pair_block_eigenvalues(t, k)
        mult = d // 2 if 2 * k == d else d
        pairs.append((k, lp, lm, mult))
    return Spectrum(circ_eigenvalues(t.b), tuple(pairs))


def partial_transpose(t: AbcTriple) -> AbcTriple:
    """Transpose on the second factor; in parameters this exchanges ``b`` and ``c``."""
    return t.swap_bc()


def dense_partial_transpose(x: np.ndarray, d: int) -> np.ndarray:
    return x.reshape(d, d, d, d).transpose(0, 3, 2, 1).reshape(d * d, d * d)


def _scale(t: AbcTriple) -> float:
    return max(1.0, float(np.max(np.abs(np.concatenate([t.a, t.b, t.c])))))


def _psd_violation(t: AbcTriple, tol: float) -> PptViolation | None:
    d = t.d
    s = _scale(t)
    if np.any(np.abs(t.a.imag) > tol * s):
        i = int(np.argmax(np.abs(t.a.imag)))
        return PptViolation("a is real", i, float(t.a.imag[i]), side="")
    a = t.a.real
    if np.any(a < -tol * s):
        i = int(np.argmin(a))
        return PptViolation("a >= 0", i, float(a[i]), side="")
    fb = dft(t.b)
    if np.any(np.abs(fb.imag) > tol * s) or np.any(fb.real < -tol * s):
        i = int(np.argmin(fb.real - np.abs(fb.imag)))
        return PptViolation("dft(b) >= 0", i, float(fb.real[i]), side="")
    if not is_hermitian(t.c, tol):
        i = int(np.argmax(np.abs(t.c - np.conj(reverse(t.c)))))
        return PptViolation("c == conj(reverse(c))", i, float(abs(t.c[i] - np.conj(t.c[(-i) % d]))), side="")
    gap = a * a[(-np.arange(d)) % d] - np.abs(t.c) ** 2
    if np.any(gap < -tol * s * s):
        i = int(np.argmin(gap))
        return PptViolation("a_i a_-i >= |c_i|^2", i, float(gap[i]), side="")
    return None


def is_psd(t: AbcTriple, tol: float = DEFAULT_TOL) -> ConeVerdict:
    """Closed-form positive-semidefiniteness test.

    PSD iff ``a >= 0``, ``dft(b) >= 0``, ``c`` is Hermitian and
    ``a_i * a_{-i} >= |c_i|^2`` for all ``i``. A failure returns the violated
    condition as the certificate.
    """
    v = _psd_violation(t, tol)
    if v is None:
        return member(tol=tol, reason="closed-form conditions hold")
    return not_member(v, tol=tol, reason=f"violates {v.condition} at index {v.index}")


def is_ppt(t: AbcTriple, tol: float = DEFAULT_TOL) -> ConeVerdict:
    v = _psd_violation(t, tol)
    if v is not None:
        v.side = "matrix"
        return not_member(v, tol=tol, reason=f"not positive semidefinite: {v.condition} at index {v.index}")
    v = _psd_violation(partial_transpose(t), tol)
    if v is not None:
        v.side = "partial_transpose"
        cond = v.condition.replace("dft(b)", "dft(c)").replace("|c_i|", "|b_i|").replace("c ==", "b ==")
        v.condition = cond
        return not_member(v, tol=tol, reason=f"partial transpose fails {cond} at index {v.index}")
    return member(tol=tol, reason="matrix and partial transpose are positive semidefinite")


def dense_min_eigenvalue(x: np.ndarray) -> float:
    h = (x + x.conj().T) / 2.0
    return float(np.linalg.eigvalsh(h)[0])
