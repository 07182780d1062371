"""scikit-learn compatible front end: states in, invariant features out."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_odd, check_state_array, qubit_count
from .invariants import DEFAULT_TOL_EQ, pairwise_gaps, z_values

__all__ = ["ZInvariantTransformer"]

_OUTPUTS = ("z", "tau", "realimag")


class ZInvariantTransformer(TransformerMixin, BaseEstimator):
    """Map each state (row of amplitudes) to its invariants ``Z^1 .. Z^n``.

    Parameters
    ----------
    output : {"z", "tau", "realimag"}, default="z"
        ``"z"`` returns the complex values, ``"tau"`` their moduli, and
        ``"realimag"`` the real parts followed by the imaginary parts as a
        real ``(n_samples, 2 * n)`` array for downstream real-valued steps.
    normalize : bool, default=False
        Scale every state to unit norm before evaluating.
    tol_eq : float, default=1e-10
        Spread below which :meth:`predict` calls the invariants equal.

    Attributes
    ----------
    n_qubits_ : int
    n_features_in_ : int
        ``2 ** n_qubits_``.
    """

    def __init__(self, output="z", normalize=False, tol_eq=DEFAULT_TOL_EQ):
        self.output = output
        self.normalize = normalize
        self.tol_eq = tol_eq

    def fit(self, X, y=None):
        """Validate the shape of ``X`` and record the qubit count; nothing is learned."""
        if self.output not in _OUTPUTS:
            raise ValueError(f"output must be one of {_OUTPUTS}, got {self.output!r}")
        if not self.tol_eq > 0:
            raise ValueError("tol_eq must be positive")
        X = check_state_array(X)
        n = qubit_count(X.shape[1])
        check_odd(n)
        self.n_qubits_ = n
        self.n_features_in_ = X.shape[1]
        return self

    def _check(self, X) -> np.ndarray:
        check_is_fitted(self, "n_qubits_")
        X = check_state_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, but {type(self).__name__} "
                f"is expecting {self.n_features_in_} features as input"
            )
        if self.normalize:
            norms = np.linalg.norm(X, axis=1, keepdims=True)
            if np.any(norms == 0):
                raise ValueError("cannot normalize an all-zero state")
            X = X / norms
        return X

    def transform(self, X):
        z = z_values(self._check(X), self.n_qubits_)
        if self.output == "tau":
            return np.abs(z)
        if self.output == "realimag":
            return np.hstack([z.real, z.imag])
        return z

    def spread(self, X) -> np.ndarray:
        """Largest pairwise ``|Z^i - Z^j|`` per state."""
        return pairwise_gaps(z_values(self._check(X), self.n_qubits_)).max(axis=-1)

    def predict(self, X) -> np.ndarray:
        """``True`` where all ``n`` invariants coincide within ``tol_eq``."""
        return self.spread(X) <= self.tol_eq

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_qubits_")
        ks = range(1, self.n_qubits_ + 1)
        if self.output == "realimag":
            names = [f"re_z{k}" for k in ks] + [f"im_z{k}" for k in ks]
        else:
            names = [f"{self.output}{k}" for k in ks]
        return np.asarray(names, dtype=object)
