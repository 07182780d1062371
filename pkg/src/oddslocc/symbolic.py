"""Exact integer polynomials in the amplitude indeterminates ``a_0 .. a_{2^n - 1}``.

Only what the invariant expansions need: sparse ``+``, ``-``, ``*``, exact
comparison with a witness monomial, and evaluation.  Monomials are sorted
index tuples, so ``a0*a7*a3*a4`` and ``a3*a4*a0*a7`` are the same key and a
square is a repeated index.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from ._validation import check_odd, check_slot
from .pauli import OPS, T, OperatorString
from .printed import closed_form

__all__ = [
    "Monomial",
    "Polynomial",
    "PolyDiff",
    "expand_bilinear",
    "expand_z",
    "eq4_polynomial",
    "eq5_polynomial",
    "poly_equal",
]

Monomial = tuple[int, ...]


def monomial(*indices: int) -> Monomial:
    return tuple(sorted(int(i) for i in indices))


class Polynomial:
    """Sparse polynomial with exact integer coefficients; zero terms are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        acc: dict[Monomial, int] = defaultdict(int)
        for mono, coef in (terms or {}).items():
            if isinstance(coef, (bool, float, complex)) or int(coef) != coef:
                raise TypeError(f"coefficients must be integers, got {coef!r}")
            acc[monomial(*mono)] += int(coef)
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = {m: c for m, c in terms.items() if c}
        return p

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __getitem__(self, mono) -> int:
        return self._terms.get(monomial(*mono), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial._raw(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out[tuple(sorted(m1 + m2))] += c1 * c2
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def evaluate(self, amps) -> np.ndarray | complex:
        """Evaluate at amplitude arrays shaped ``(..., 2**n)``."""
        amps = np.asarray(amps, dtype=np.complex128)
        total = np.zeros(amps.shape[:-1], dtype=np.complex128)
        for mono, coef in self._terms.items():
            term = np.full(amps.shape[:-1], coef, dtype=np.complex128)
            for i in mono:
                term = term * amps[..., i]
            total = total + term
        return total if total.ndim else complex(total)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coef in sorted(self._terms.items()):
            factors = "*".join(f"a{i}" for i in mono)
            parts.append(f"{coef:+d}*{factors}" if factors else f"{coef:+d}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({len(self)} terms, degree {self.degree()})"


def _linear_pairs(terms) -> Polynomial:
    return Polynomial({(i, j): sign for sign, i, j in terms})


def expand_bilinear(n: int, ops) -> Polynomial:
    """Exact expansion of ``sum_ij a_i O_ij a_j`` for an operator string of I/X/Z/T."""
    ops = OperatorString(ops)
    if len(ops) != n:
        raise ValueError(f"operator string has {len(ops)} factors, expected {n}")
    entries = []
    for op in ops:
        if OPS.get(op.label) is not op:
            raise ValueError(f"label {op.label!r} has no exact integer expansion")
        entries.append([[int(op.matrix[r, c].real) for c in (0, 1)] for r in (0, 1)])
    terms: dict[Monomial, int] = defaultdict(int)
    dim = 1 << n
    for i in range(dim):
        # the tensor product has exactly one nonzero column per row for these labels
        j = 0
        coef = 1
        for m in range(n):
            bit = (i >> (n - 1 - m)) & 1
            row = entries[m][bit]
            col = 0 if row[0] else 1
            if not row[col]:
                coef = 0
                break
            coef *= row[col]
            j |= col << (n - 1 - m)
        if coef:
            terms[monomial(i, j)] += coef
    return Polynomial._raw(terms)


def expand_z(n: int, k: int) -> Polynomial:
    """Exact degree-4 expansion of ``Z^k`` in the canonical normalization."""
    check_odd(n)
    k = check_slot(k, n)

    def string(label):
        return OperatorString([OPS[label] if m == k else T for m in range(1, n + 1)])

    bx, bz, bi = (expand_bilinear(n, string(c)) for c in "XZI")
    return bx * bx + bz * bz - bi * bi


def _closed_form_polynomial(n: int, k: int, corrected: bool) -> Polynomial:
    form = closed_form(n, k, corrected)
    bracket = _linear_pairs(form.bracket)
    inner = bracket * bracket + 4 * (_linear_pairs(form.left) * _linear_pairs(form.right))
    return form.lead * inner


def eq4_polynomial(k: int) -> Polynomial:
    """Transcribed three-qubit closed form of ``Z^k``, including its leading factor 4."""
    return _closed_form_polynomial(3, k, corrected=False)


def eq5_polynomial(k: int, corrected: bool = True) -> Polynomial:
    """Transcribed five-qubit closed form of ``Z^k`` (printed without the leading 4).

    ``corrected=False`` keeps the misprinted k = 3 cofactor verbatim.
    """
    return _closed_form_polynomial(5, k, corrected)


class PolyDiff(NamedTuple):
    equal: bool
    monomial: Monomial | None = None
    left: int = 0
    right: int = 0
    n_differing: int = 0

    def __bool__(self) -> bool:
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return "equal"
        factors = "*".join(f"a{i}" for i in self.monomial)
        return (
            f"differ at {factors}: {self.left} vs {self.right} "
            f"({self.n_differing} differing monomials)"
        )


def poly_equal(p: Polynomial, q: Polynomial) -> PolyDiff:
    """Exact comparison; on mismatch report the lexicographically first differing monomial."""
    diff = (p - q).terms
    if not diff:
        return PolyDiff(True)
    first = min(diff)
    return PolyDiff(False, first, p[first], q[first], len(diff))
