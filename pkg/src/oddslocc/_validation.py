"""Input validation helpers shared by the state, invariant and estimator layers."""

from __future__ import annotations

import numpy as np

MAX_QUBITS = 15


def qubit_count(dim: int) -> int:
    """Return ``n`` such that ``dim == 2**n``; raise ``ValueError`` otherwise."""
    dim = int(dim)
    if dim < 2 or dim & (dim - 1):
        raise ValueError(f"amplitude count {dim} is not a power of two >= 2")
    n = dim.bit_length() - 1
    if n > MAX_QUBITS:
        raise ValueError(f"{n} qubits exceeds the supported maximum of {MAX_QUBITS}")
    return n


def check_amplitudes(amplitudes, n: int | None = None) -> np.ndarray:
    """Coerce to a complex128 array whose last axis holds ``2**n`` finite amplitudes."""
    arr = np.asarray(amplitudes, dtype=np.complex128)
    if arr.ndim == 0:
        raise ValueError("amplitudes must be at least one-dimensional")
    found = qubit_count(arr.shape[-1])
    if n is not None and found != n:
        raise ValueError(f"expected {2 ** n} amplitudes for n={n}, got {arr.shape[-1]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("amplitudes contain NaN or Inf")
    return arr


def check_state_array(X) -> np.ndarray:
    """Validate a batch of states shaped ``(n_samples, 2**n)``.

    Mirrors :func:`sklearn.utils.check_array` but keeps complex dtype, which
    scikit-learn's helper rejects.
    """
    X = check_amplitudes(X)
    if X.ndim == 1:
        raise ValueError(
            "Expected 2D array of shape (n_samples, 2**n), got 1D array instead; "
            "reshape with X.reshape(1, -1) for a single state"
        )
    if X.ndim != 2:
        raise ValueError(f"Expected 2D array, got {X.ndim}D array instead")
    if X.shape[0] == 0:
        raise ValueError("Found array with 0 samples")
    return X


def check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"the Z invariants are defined for odd n >= 3, got n={n}")


def check_slot(k: int, n: int) -> int:
    k = int(k)
    if not 1 <= k <= n:
        raise ValueError(f"qubit slot {k} out of range 1..{n}")
    return k
