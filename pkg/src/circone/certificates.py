"""Verdicts and the certificates that back them.

Every ``Member`` or ``NotMember`` answer carries a certificate that can be
re-checked independently of the routine that produced it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .circulant import hermitian_autocorr


class Verdict(enum.Enum):
    MEMBER = "Member"
    NOT_MEMBER = "NotMember"
    UNDECIDED = "Undecided"

    @property
    def exit_code(self) -> int:
        return {"Member": 0, "NotMember": 1, "Undecided": 2}[self.value]


def vec_to_json(v) -> list:
    """Real vectors as plain numbers, complex ones as ``[re, im]`` pairs."""
    v = np.asarray(v)
    if np.iscomplexobj(v) and np.any(v.imag != 0):
        return [[float(z.real), float(z.imag)] for z in v]
    return [float(x) for x in np.real(v)]


def vec_from_json(obj) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise ValueError("vector must be a non-empty JSON list")
    out = []
    for x in obj:
        if isinstance(x, list):
            if len(x) != 2:
                raise ValueError(f"complex entries are [re, im], got {x}")
            out.append(complex(float(x[0]), float(x[1])))
        elif isinstance(x, (int, float)) and not isinstance(x, bool):
            out.append(float(x))
        else:
            raise ValueError(f"non-numeric vector entry {x!r}")
    arr = np.array(out)
    return arr if np.iscomplexobj(arr) else arr.astype(float)


@dataclass
class Witness:
    """A copositive (or otherwise dual-cone) vector whose pairing with the target is negative."""

    vector: np.ndarray
    pairing: float
    label: str = ""

    kind = "witness"

    def verify(self, target, tol: float) -> bool:
        p = float(np.real(np.vdot(self.vector, np.asarray(target))))
        return p < -tol and abs(p - self.pairing) <= 1e-6 * max(1.0, abs(p))

    def to_json(self) -> dict[str, Any]:
        out = {"kind": self.kind, "vector": vec_to_json(self.vector), "pairing": float(self.pairing)}
        if self.label:
            out["label"] = self.label
        return out


@dataclass
class Decomposition:
    """``target ~= sum_k weight_k * (v_k * reverse(v_k))`` with ``v_k >= 0``."""

    generators: list[tuple[np.ndarray, float]]
    residual: float

    kind = "decomposition"

    def reconstruct(self, d: int) -> np.ndarray:
        total = np.zeros(d)
        for v, w in self.generators:
            total += w * np.real(hermitian_autocorr(v, v))
        return total

    def verify(self, target, tol: float) -> bool:
        target = np.asarray(target, dtype=float)
        if any(w < 0 or np.any(np.asarray(v) < 0) for v, w in self.generators):
            return False
        err = float(np.max(np.abs(self.reconstruct(target.size) - target)))
        return err <= tol

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "generators": [{"v": vec_to_json(v), "weight": float(w)} for v, w in self.generators],
            "residual": float(self.residual),
        }


@dataclass
class PptViolation:
    """A failed closed-form condition of the positivity test on the triple or its partial transpose."""

    condition: str
    index: int
    value: float
    side: str = "partial_transpose"

    kind = "ppt_witness"

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "side": self.side,
            "condition": self.condition,
            "index": int(self.index),
            "value": float(self.value),
        }


@dataclass
class ConeVerdict:
    verdict: Verdict
    certificate: Any = None
    tol: float = 0.0
    reason: str = ""
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def is_member(self) -> bool:
        return self.verdict is Verdict.MEMBER

    @property
    def is_not_member(self) -> bool:
        return self.verdict is Verdict.NOT_MEMBER

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verdict": self.verdict.value, "tol": self.tol}
        if self.reason:
            out["reason"] = self.reason
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.details:
            out["details"] = _jsonable(self.details)
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return vec_to_json(obj) if obj.ndim == 1 else [_jsonable(r) for r in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, enum.Enum):
        return obj.value
    return obj


def member(cert=None, tol: float = 0.0, reason: str = "", **details) -> ConeVerdict:
    return ConeVerdict(Verdict.MEMBER, cert, tol, reason, details)


def not_member(cert=None, tol: float = 0.0, reason: str = "", **details) -> ConeVerdict:
    return ConeVerdict(Verdict.NOT_MEMBER, cert, tol, reason, details)


def undecided(tol: float = 0.0, reason: str = "", **details) -> ConeVerdict:
    return ConeVerdict(Verdict.UNDECIDED, None, tol, reason, details)
