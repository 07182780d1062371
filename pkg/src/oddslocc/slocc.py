"""Local invertible (SLOCC) transformations and the covariance check for ``Z^k``.

For ``psi' = (A_1 x ... x A_n) psi`` every invariant obeys

    Z^k(psi') = Z^k(psi) * (det A_1 * ... * det A_n)**2

because ``A^T T A = det(A) T`` for the spin flip ``T`` and the
``X, Z, I`` slot terms combine into a determinant-weighted quadratic form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._validation import check_odd, check_slot
from .invariants import z_invariant
from .pauli import apply_matrix
from .qstate import QubitState

__all__ = [
    "MIN_ABS_DET",
    "MAX_ENTRY",
    "LocalTransform",
    "random_invertible",
    "random_transform",
    "apply_transform",
    "apply_transform_array",
    "det_product",
    "covariance_residual",
    "modulus_residual",
    "parse_transform",
    "serialize_transform",
]

MIN_ABS_DET = 0.1
MAX_ENTRY = 10.0
MAX_ATTEMPTS = 1000


@dataclass(frozen=True, eq=False)
class LocalTransform:
    """One invertible 2x2 complex matrix per qubit, slot 1 first."""

    matrices: tuple[np.ndarray, ...]

    def __post_init__(self):
        mats = []
        for m, a in enumerate(self.matrices, start=1):
            a = np.array(a, dtype=np.complex128)
            if a.shape != (2, 2):
                raise ValueError(f"matrix for qubit {m} has shape {a.shape}, expected (2, 2)")
            if not np.all(np.isfinite(a)):
                raise ValueError(f"matrix for qubit {m} has non-finite entries")
            if abs(np.linalg.det(a)) == 0:
                raise ValueError(f"matrix for qubit {m} is singular")
            a.setflags(write=False)
            mats.append(a)
        object.__setattr__(self, "matrices", tuple(mats))

    @property
    def n(self) -> int:
        return len(self.matrices)

    @classmethod
    def identity(cls, n: int) -> "LocalTransform":
        return cls(tuple(np.eye(2) for _ in range(n)))

    def determinants(self) -> np.ndarray:
        return np.array([np.linalg.det(a) for a in self.matrices])


def _as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_invertible(seed, kind: str = "gl") -> np.ndarray:
    """Sample a conditioned random 2x2 complex matrix.

    Entries are iid standard complex Gaussian, resampled until ``|det| >= 0.1``
    and every ``|entry| <= 10``.  ``kind="sl"`` rescales by the principal square
    root of the determinant so that ``det == 1``.  ``seed`` may be an int or a
    :class:`numpy.random.Generator`.
    """
    if kind not in ("gl", "sl"):
        raise ValueError(f"kind must be 'gl' or 'sl', got {kind!r}")
    rng = _as_generator(seed)
    for _ in range(MAX_ATTEMPTS):
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        det = np.linalg.det(a)
        if abs(det) >= MIN_ABS_DET and np.abs(a).max() <= MAX_ENTRY:
            break
    else:
        raise RuntimeError(f"no well-conditioned matrix after {MAX_ATTEMPTS} draws")
    if kind == "sl":
        a = a / np.sqrt(det)
    return a


def random_transform(n: int, seed, kind: str = "gl") -> LocalTransform:
    rng = _as_generator(seed)
    return LocalTransform(tuple(random_invertible(rng, kind) for _ in range(n)))


def apply_transform_array(amps: np.ndarray, t: LocalTransform) -> np.ndarray:
    n = amps.shape[-1].bit_length() - 1
    if t.n != n:
        raise ValueError(f"transform acts on {t.n} qubits, state has {n}")
    out = amps
    for k, a in enumerate(t.matrices, start=1):
        out = apply_matrix(out, n, k, a)
    return out


def apply_transform(s: QubitState, t: LocalTransform) -> QubitState:
    return QubitState(s.n, apply_transform_array(s.amplitudes, t))


def det_product(t: LocalTransform) -> complex:
    return complex(np.prod(t.determinants()))


_EPS = 1e-300


def covariance_residual(s: QubitState, t: LocalTransform, k: int) -> float:
    """Relative residual of ``Z^k(t psi) = Z^k(psi) * det_product(t)**2``."""
    check_odd(s.n)
    check_slot(k, s.n)
    expected = z_invariant(s, k) * det_product(t) ** 2
    got = z_invariant(apply_transform(s, t), k)
    return abs(got - expected) / max(abs(expected), _EPS)


def modulus_residual(s: QubitState, t: LocalTransform, k: int) -> float:
    """Relative residual of ``tau_k(t psi) = tau_k(psi) * |det_product(t)|**2``."""
    check_odd(s.n)
    check_slot(k, s.n)
    expected = abs(z_invariant(s, k)) * abs(det_product(t)) ** 2
    got = abs(z_invariant(apply_transform(s, t), k))
    return abs(got - expected) / max(expected, _EPS)


def serialize_transform(t: LocalTransform) -> str:
    """JSON list of ``n`` matrices, each ``[[[re, im], [re, im]], [[re, im], [re, im]]]``."""
    doc = [
        [[[float(z.real), float(z.imag)] for z in row] for row in a] for a in t.matrices
    ]
    return json.dumps(doc)


def parse_transform(text: str) -> LocalTransform:
    try:
        doc = json.loads(text)
        mats: Sequence = [
            [[complex(re, im) for re, im in row] for row in a] for a in doc
        ]
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed transform JSON: {exc}") from exc
    return LocalTransform(tuple(mats))
