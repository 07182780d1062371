"""Pure-state vectors, the JSON state format and a small catalog of standard states.

Basis index ``i`` encodes the bitstring ``b1 b2 ... bn`` with qubit 1 as the
most significant bit, i.e. ``i = sum_m b_m * 2**(n - m)``.  Internally an
amplitude vector reshaped to ``(2,) * n`` therefore has qubit ``m`` on axis
``m - 1``.

States are not required to be normalized: every invariant computed by this
package is a homogeneous polynomial in the amplitudes.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._validation import check_amplitudes

__all__ = [
    "QubitState",
    "parse_state",
    "serialize_state",
    "norm",
    "normalize",
    "standard_state",
    "random_state",
    "random_states",
    "permute_qubits",
    "inverse_permutation",
]


@dataclass(frozen=True, eq=False)
class QubitState:
    """An ``n``-qubit state given by its ``2**n`` computational-basis amplitudes."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = check_amplitudes(self.amplitudes, int(self.n)).reshape(-1).copy()
        amps.setflags(write=False)
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "QubitState":
        amps = check_amplitudes(amplitudes).reshape(-1)
        return cls(amps.size.bit_length() - 1, amps)

    @property
    def dim(self) -> int:
        return 1 << self.n

    def norm(self) -> float:
        return norm(self)

    def __mul__(self, c) -> "QubitState":
        return QubitState(self.n, complex(c) * self.amplitudes)

    __rmul__ = __mul__

    def __add__(self, other: "QubitState") -> "QubitState":
        if other.n != self.n:
            raise ValueError("cannot add states with different qubit counts")
        return QubitState(self.n, self.amplitudes + other.amplitudes)

    def __repr__(self) -> str:
        return f"QubitState(n={self.n}, norm={self.norm():.6g})"


def parse_state(text: str) -> QubitState:
    """Parse the canonical JSON state format ``{"n": N, "amplitudes": [[re, im], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed state JSON: {exc}") from exc
    if not isinstance(doc, dict) or "amplitudes" not in doc:
        raise ValueError('state JSON must be an object with an "amplitudes" field')
    pairs = doc["amplitudes"]
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in pairs
    ):
        raise ValueError("amplitudes must be a list of [re, im] pairs")
    try:
        amps = np.array([complex(float(re), float(im)) for re, im in pairs])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"non-numeric amplitude: {exc}") from exc
    state = QubitState.from_amplitudes(amps)
    if "n" in doc and doc["n"] != state.n:
        raise ValueError(
            f"declared n={doc['n']} but {amps.size} amplitudes imply n={state.n}"
        )
    if state.n < 3 or state.n % 2 == 0:
        warnings.warn(
            f"n={state.n}: odd-n invariants are undefined for this state",
            stacklevel=2,
        )
    return state


def _float_repr(x: float) -> float:
    # repr() of a Python float is the shortest string that round-trips exactly;
    # -0.0 is folded to 0.0 so the output is canonical.
    return 0.0 if x == 0 else float(x)


def serialize_state(s: QubitState) -> str:
    """Emit the canonical JSON text for ``s`` (round-trips bit-exactly)."""
    pairs = [[_float_repr(a.real), _float_repr(a.imag)] for a in s.amplitudes]
    return json.dumps({"amplitudes": pairs, "n": s.n}, sort_keys=True)


def norm(s: QubitState) -> float:
    return float(np.linalg.norm(s.amplitudes))


def normalize(s: QubitState) -> QubitState:
    r = norm(s)
    if r == 0:
        raise ValueError("cannot normalize the zero vector")
    return QubitState(s.n, s.amplitudes / r)


def standard_state(name: str, n: int) -> QubitState:
    """Build a named state: ``ghz``, ``w``, ``product-zero`` or ``basis:i``."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    dim = 1 << n
    amps = np.zeros(dim, dtype=np.complex128)
    if name == "ghz":
        amps[0] = amps[-1] = math.sqrt(0.5)
    elif name == "w":
        for m in range(n):
            amps[1 << m] = 1 / math.sqrt(n)
    elif name == "product-zero":
        amps[0] = 1
    elif name.startswith("basis:"):
        try:
            idx = int(name.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad basis index in {name!r}") from None
        if not 0 <= idx < dim:
            raise ValueError(f"basis index {idx} out of range for n={n}")
        amps[idx] = 1
    else:
        raise ValueError(f"unknown standard state {name!r}")
    return QubitState(n, amps)


def random_state(n: int, seed: int) -> QubitState:
    """Haar-random unit vector: iid standard complex Gaussian amplitudes, normalized.

    Deterministic in ``(n, seed)``.
    """
    rng = np.random.default_rng(seed)
    dim = 1 << int(n)
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return QubitState(n, amps / np.linalg.norm(amps))


def random_states(n: int, count: int, seed: int) -> np.ndarray:
    """Stack ``random_state(n, seed + t)`` for ``t = 0..count-1`` into a ``(count, 2**n)`` array."""
    return np.stack([random_state(n, seed + t).amplitudes for t in range(count)])


def _check_permutation(perm, n: int) -> tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    return perm


def permute_qubits(s: QubitState, perm) -> QubitState:
    """Relabel qubits so that qubit ``m`` of ``s`` becomes qubit ``perm[m-1]`` of the result."""
    perm = _check_permutation(perm, s.n)
    tensor = s.amplitudes.reshape((2,) * s.n)
    # output axis perm[m]-1 takes input axis m
    src = [0] * s.n
    for m, target in enumerate(perm):
        src[target - 1] = m
    return QubitState(s.n, np.transpose(tensor, src).reshape(-1))


def inverse_permutation(perm) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for m, target in enumerate(perm, start=1):
        inv[target - 1] = m
    return tuple(inv)
