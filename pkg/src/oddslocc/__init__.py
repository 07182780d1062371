"""Odd-n SLOCC polynomial invariants of multiqubit pure states."""

from .estimator import ZInvariantTransformer
from .invariants import (
    InvariantReport,
    tau_k,
    three_tangle_ckw,
    z3_explicit,
    z5_explicit,
    z_all,
    z_invariant,
    z_values,
)
from .pauli import OperatorString, apply_single, bilinear_form
from .qstate import (
    QubitState,
    norm,
    normalize,
    parse_state,
    permute_qubits,
    random_state,
    serialize_state,
    standard_state,
)
from .slocc import (
    LocalTransform,
    apply_transform,
    covariance_residual,
    det_product,
    random_invertible,
    random_transform,
)
from .symbolic import Polynomial, eq4_polynomial, eq5_polynomial, expand_bilinear, expand_z, poly_equal

__version__ = "0.1.0"

__all__ = [
    "ZInvariantTransformer",
    "InvariantReport",
    "tau_k",
    "three_tangle_ckw",
    "z3_explicit",
    "z5_explicit",
    "z_all",
    "z_invariant",
    "z_values",
    "OperatorString",
    "apply_single",
    "bilinear_form",
    "QubitState",
    "norm",
    "normalize",
    "parse_state",
    "permute_qubits",
    "random_state",
    "serialize_state",
    "standard_state",
    "LocalTransform",
    "apply_transform",
    "covariance_residual",
    "det_product",
    "random_invertible",
    "random_transform",
    "Polynomial",
    "eq4_polynomial",
    "eq5_polynomial",
    "expand_bilinear",
    "expand_z",
    "poly_equal",
]
