"""Single-qubit operators, slot-wise application and the bilinear pairing.

Conjugation convention
----------------------
Matrix elements written ``<psi| O |psi*>`` in the literature are evaluated
here as the *unconjugated* pairing

    B(O) = sum_ij a_i O_ij a_j = a^T (O a)

which is the complex conjugate of ``<psi| O |psi*>``.  This pairing
reproduces the explicit amplitude polynomials for three and five qubits
term by term.  Equality, inequality and moduli of the resulting invariants
are unaffected by a global conjugation.

All operators are applied matrix-free: a 2x2 matrix acting on slot ``k``
mixes amplitude pairs whose indices differ only in bit ``n - k``, so a full
operator string costs ``O(n * 2**n)``.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from ._validation import check_slot
from .qstate import QubitState

__all__ = [
    "SingleQubitOp",
    "I",
    "X",
    "Z",
    "T",
    "OPS",
    "OperatorString",
    "apply_single",
    "apply_matrix",
    "apply_string",
    "bilinear_form",
]


class SingleQubitOp(NamedTuple):
    label: str
    matrix: np.ndarray

    def __repr__(self) -> str:
        return f"SingleQubitOp({self.label!r})"


def _op(label, rows):
    m = np.array(rows, dtype=np.complex128)
    m.setflags(write=False)
    return SingleQubitOp(label, m)


I = _op("I", [[1, 0], [0, 1]])
X = _op("X", [[0, 1], [1, 0]])
Z = _op("Z", [[1, 0], [0, -1]])
T = _op("T", [[0, 1], [-1, 0]])  # i * sigma_y

OPS = {op.label: op for op in (I, X, Z, T)}


class OperatorString(tuple):
    """Tensor product of single-qubit operators, slot 1 first.

    Built from a label string such as ``"XTTTT"`` or from a sequence of
    :class:`SingleQubitOp`.
    """

    def __new__(cls, ops):
        if isinstance(ops, str):
            try:
                ops = [OPS[c] for c in ops]
            except KeyError as exc:
                raise ValueError(f"unknown operator label {exc.args[0]!r}") from None
        ops = tuple(ops)
        for op in ops:
            if not isinstance(op, SingleQubitOp):
                raise TypeError(f"expected SingleQubitOp, got {type(op).__name__}")
        return super().__new__(cls, ops)

    @property
    def labels(self) -> str:
        return "".join(op.label for op in self)

    def __repr__(self) -> str:
        return f"OperatorString({self.labels!r})"

    def __str__(self) -> str:
        return self.labels


def apply_matrix(amps: np.ndarray, n: int, k: int, matrix) -> np.ndarray:
    """Apply a 2x2 ``matrix`` to slot ``k`` of amplitude arrays shaped ``(..., 2**n)``.

    Leading axes are batch axes.  Returns a new array.
    """
    batch = amps.shape[:-1]
    view = amps.reshape(batch + (1 << (k - 1), 2, 1 << (n - k)))
    out = np.einsum("ij,...ajb->...aib", np.asarray(matrix), view)
    return out.reshape(amps.shape)


def apply_single(s: QubitState, k: int, op: SingleQubitOp) -> QubitState:
    """Return ``(I x ... x op_k x ... x I) |s>``."""
    k = check_slot(k, s.n)
    return QubitState(s.n, apply_matrix(s.amplitudes, s.n, k, op.matrix))


def apply_string(amps: np.ndarray, n: int, ops: Sequence[SingleQubitOp]) -> np.ndarray:
    """Apply every factor of ``ops`` to amplitude arrays shaped ``(..., 2**n)``."""
    if len(ops) != n:
        raise ValueError(f"operator string has {len(ops)} factors, state has {n} qubits")
    out = amps
    for k, op in enumerate(ops, start=1):
        if op.label != "I":
            out = apply_matrix(out, n, k, op.matrix)
    return out


def _pair(amps: np.ndarray, image: np.ndarray) -> np.ndarray:
    return np.sum(amps * image, axis=-1)


def bilinear_form(s: QubitState, ops) -> complex:
    """Unconjugated pairing ``a^T (O a)`` for an operator string ``O``."""
    ops = OperatorString(ops)
    image = apply_string(s.amplitudes, s.n, ops)
    return complex(_pair(s.amplitudes, image))
