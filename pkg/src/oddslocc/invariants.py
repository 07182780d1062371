"""The degree-4 invariant family ``Z^k`` for odd ``n`` and its reference oracles.

For slot ``k`` let ``O_k(P)`` be the operator string carrying ``P`` on slot
``k`` and ``T = i*sigma_y`` on every other slot.  Then

    Z^k = B(O_k(X))**2 + B(O_k(Z))**2 - B(O_k(I))**2

with ``B`` the unconjugated bilinear pairing of :mod:`oddslocc.pauli`.
Under a local invertible map ``A_1 x ... x A_n`` each ``Z^k`` picks up the
factor ``(det A_1 ... det A_n)**2``.

This evaluation is the canonical normalization.  It reproduces the printed
three-qubit closed forms exactly and is four times the printed five-qubit
ones; :func:`z5_explicit` rescales accordingly.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_amplitudes, check_odd, check_slot
from .pauli import I, T, X, Z, apply_matrix
from .printed import ClosedForm, closed_forms
from .qstate import QubitState

__all__ = [
    "DEFAULT_TOL_EQ",
    "DEFAULT_TOL_INEQ",
    "InvariantReport",
    "z_values",
    "z_invariant",
    "z_all",
    "tau_k",
    "pairwise_gaps",
    "closed_form_values",
    "z3_explicit",
    "z5_explicit",
    "three_tangle_ckw",
    "three_tangle_values",
]

DEFAULT_TOL_EQ = 1e-10
DEFAULT_TOL_INEQ = 1e-6


def _forms(amps: np.ndarray, n: int, k: int):
    """Return ``B(O_k(X)), B(O_k(Z)), B(O_k(I))`` over the batch axes of ``amps``."""
    flipped = amps
    for m in range(1, n + 1):
        if m != k:
            flipped = apply_matrix(flipped, n, m, T.matrix)
    bx = np.sum(amps * apply_matrix(flipped, n, k, X.matrix), axis=-1)
    bz = np.sum(amps * apply_matrix(flipped, n, k, Z.matrix), axis=-1)
    bi = np.sum(amps * flipped, axis=-1)
    return bx, bz, bi


def z_values(amps, n: int | None = None) -> np.ndarray:
    """Vectorized ``Z^1..Z^n`` for amplitude arrays shaped ``(..., 2**n)``.

    Returns a complex array shaped ``(..., n)``.
    """
    amps = check_amplitudes(amps, n)
    n = amps.shape[-1].bit_length() - 1
    check_odd(n)
    out = np.empty(amps.shape[:-1] + (n,), dtype=np.complex128)
    for k in range(1, n + 1):
        bx, bz, bi = _forms(amps, n, k)
        out[..., k - 1] = bx * bx + bz * bz - bi * bi
    return out


def z_invariant(s: QubitState, k: int) -> complex:
    check_odd(s.n)
    k = check_slot(k, s.n)
    bx, bz, bi = _forms(s.amplitudes, s.n, k)
    return complex(bx * bx + bz * bz - bi * bi)


def tau_k(s: QubitState, k: int) -> float:
    """``|Z^k|`` for the state as given; callers normalize if they want the tangle."""
    return abs(z_invariant(s, k))


def pairwise_gaps(z: np.ndarray) -> np.ndarray:
    """``|Z^i - Z^j|`` for all ``i < j`` along the last axis."""
    z = np.asarray(z)
    pairs = list(itertools.combinations(range(z.shape[-1]), 2))
    i, j = (np.array(p) for p in zip(*pairs))
    return np.abs(z[..., i] - z[..., j])


@dataclass(frozen=True)
class InvariantReport:
    n: int
    z: tuple[complex, ...]
    tau: tuple[float, ...]
    spread: float
    equal_within: float = DEFAULT_TOL_EQ
    min_gap: float = field(default=0.0)

    @property
    def all_equal(self) -> bool:
        return self.spread <= self.equal_within

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "z": [[float(v.real), float(v.imag)] for v in self.z],
            "tau": [float(t) for t in self.tau],
            "spread": float(self.spread),
            "equal_within": float(self.equal_within),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def z_all(s: QubitState, equal_within: float = DEFAULT_TOL_EQ) -> InvariantReport:
    z = z_values(s.amplitudes, s.n)
    gaps = pairwise_gaps(z)
    return InvariantReport(
        n=s.n,
        z=tuple(complex(v) for v in z),
        tau=tuple(float(abs(v)) for v in z),
        spread=float(gaps.max()),
        equal_within=equal_within,
        min_gap=float(gaps.min()),
    )


def _linear(amps: np.ndarray, terms) -> np.ndarray:
    sign = np.array([t[0] for t in terms], dtype=float)
    i = np.array([t[1] for t in terms])
    j = np.array([t[2] for t in terms])
    return np.sum(sign * amps[..., i] * amps[..., j], axis=-1)


def _evaluate(form: ClosedForm, amps: np.ndarray) -> np.ndarray:
    bracket = _linear(amps, form.bracket)
    return form.lead * (
        bracket * bracket + 4 * _linear(amps, form.left) * _linear(amps, form.right)
    )


def closed_form_values(amps, n: int, corrected: bool = True) -> np.ndarray:
    """Evaluate the transcribed closed forms as printed (no rescaling), shape ``(..., n)``."""
    amps = check_amplitudes(amps, n)
    return np.stack([_evaluate(f, amps) for f in closed_forms(n, corrected)], axis=-1)


def z3_explicit(s: QubitState) -> tuple[complex, complex, complex]:
    """Three-qubit ``Z^1, Z^2, Z^3`` from their closed-form polynomials."""
    if s.n != 3:
        raise ValueError(f"z3_explicit needs a 3-qubit state, got n={s.n}")
    return tuple(complex(v) for v in closed_form_values(s.amplitudes, 3))


def z5_explicit(s: QubitState, corrected: bool = True) -> tuple[complex, ...]:
    """Five-qubit ``Z^1..Z^5`` from the closed forms, scaled by 4 to the canonical normalization.

    ``corrected=False`` evaluates the k = 3 form with its misprinted cofactor.
    """
    if s.n != 5:
        raise ValueError(f"z5_explicit needs a 5-qubit state, got n={s.n}")
    return tuple(complex(4 * v) for v in closed_form_values(s.amplitudes, 5, corrected))


def three_tangle_values(amps) -> np.ndarray:
    """Coffman-Kundu-Wootters residual tangle ``4 |d1 - 2 d2 + 4 d3|`` over batch axes."""
    amps = check_amplitudes(amps, 3)
    a = amps.reshape(amps.shape[:-1] + (2, 2, 2))

    def c(i, j, k):
        return a[..., i, j, k]

    d1 = (
        c(0, 0, 0) ** 2 * c(1, 1, 1) ** 2
        + c(0, 0, 1) ** 2 * c(1, 1, 0) ** 2
        + c(0, 1, 0) ** 2 * c(1, 0, 1) ** 2
        + c(1, 0, 0) ** 2 * c(0, 1, 1) ** 2
    )
    d2 = (
        c(0, 0, 0) * c(1, 1, 1) * c(0, 1, 1) * c(1, 0, 0)
        + c(0, 0, 0) * c(1, 1, 1) * c(1, 0, 1) * c(0, 1, 0)
        + c(0, 0, 0) * c(1, 1, 1) * c(1, 1, 0) * c(0, 0, 1)
        + c(0, 1, 1) * c(1, 0, 0) * c(1, 0, 1) * c(0, 1, 0)
        + c(0, 1, 1) * c(1, 0, 0) * c(1, 1, 0) * c(0, 0, 1)
        + c(1, 0, 1) * c(0, 1, 0) * c(1, 1, 0) * c(0, 0, 1)
    )
    d3 = (
        c(0, 0, 0) * c(1, 1, 0) * c(1, 0, 1) * c(0, 1, 1)
        + c(1, 1, 1) * c(0, 0, 1) * c(0, 1, 0) * c(1, 0, 0)
    )
    return 4 * np.abs(d1 - 2 * d2 + 4 * d3)


def three_tangle_ckw(s: QubitState) -> float:
    if s.n != 3:
        raise ValueError(f"the 3-tangle needs a 3-qubit state, got n={s.n}")
    return float(three_tangle_values(s.amplitudes))
