"""Transcribed closed forms of the three- and five-qubit invariants.

Every closed form has the shape

    Z^k = lead * (bracket**2 + 4 * left * right)

where ``bracket``, ``left`` and ``right`` are signed sums of amplitude
products ``a_i a_j``.  The three-qubit forms carry ``lead = 4``; the
five-qubit forms are printed without it (``lead = 1``) and are therefore a
quarter of the operator-string evaluation.

The tables are literal transcriptions.  One misprint is known and kept out
of the literal data: in the first cofactor of the k = 3 five-qubit form the
products ``-a4 a19 + a5 a18`` must read ``-a8 a19 + a9 a18`` (both factors of
every cofactor product share bit value 0 on qubit 3, and 4, 5 do not).
``corrected=True`` applies it; see :data:`ERRATA`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

__all__ = ["ClosedForm", "ERRATA", "closed_form", "closed_forms"]

Pair = tuple[int, int, int]  # (sign, i, j) for sign * a_i * a_j


def _terms(text: str) -> tuple[Pair, ...]:
    out = []
    for tok in text.split():
        sign = 1 if tok[0] == "+" else -1
        i, j = tok[1:].split("*")
        out.append((sign, int(i), int(j)))
    return tuple(out)


@dataclass(frozen=True)
class ClosedForm:
    n: int
    k: int
    lead: int
    bracket: tuple[Pair, ...]
    left: tuple[Pair, ...]
    right: tuple[Pair, ...]


_THREE = {
    1: ("+0*7 -1*6 -2*5 +3*4", "+0*3 -1*2", "+5*6 -4*7"),
    2: ("+0*7 -1*6 +2*5 -3*4", "+0*5 -1*4", "+3*6 -2*7"),
    3: ("+0*7 +1*6 -2*5 -3*4", "+0*6 -2*4", "+3*5 -1*7"),
}

_FIVE = {
    1: (
        "+0*31 -1*30 -2*29 +3*28 -4*27 +5*26 +6*25 -7*24"
        " -8*23 +9*22 +10*21 -11*20 +12*19 -13*18 -14*17 +15*16",
        "+0*15 -1*14 -2*13 +3*12 -4*11 +5*10 +6*9 -7*8",
        "-16*31 +17*30 +18*29 -19*28 +20*27 -21*26 -22*25 +23*24",
    ),
    2: (
        "+0*31 -1*30 -2*29 +3*28 -4*27 +5*26 +6*25 -7*24"
        " +8*23 -9*22 -10*21 +11*20 -12*19 +13*18 +14*17 -15*16",
        "+0*23 -1*22 -2*21 +3*20 -4*19 +5*18 +6*17 -7*16",
        "-8*31 +9*30 +10*29 -11*28 +12*27 -13*26 -14*25 +15*24",
    ),
    3: (
        "+0*31 -1*30 -2*29 +3*28 +4*27 -5*26 -6*25 +7*24"
        " -8*23 +9*22 +10*21 -11*20 -12*19 +13*18 +14*17 -15*16",
        "+0*27 -1*26 -2*25 +3*24 -4*19 +5*18 +10*17 -11*16",
        "-4*31 +5*30 +6*29 -7*28 +12*23 -13*22 -14*21 +15*20",
    ),
    4: (
        "+0*31 -1*30 +2*29 -3*28 -4*27 +5*26 -6*25 +7*24"
        " -8*23 +9*22 -10*21 +11*20 +12*19 -13*18 +14*17 -15*16",
        "+0*29 -1*28 -4*25 +5*24 -8*21 +9*20 +12*17 -13*16",
        "-2*31 +3*30 +6*27 -7*26 +10*23 -11*22 -14*19 +15*18",
    ),
    5: (
        "+0*31 +1*30 -2*29 -3*28 -4*27 -5*26 +6*25 +7*24"
        " -8*23 -9*22 +10*21 +11*20 +12*19 +13*18 -14*17 -15*16",
        "+0*30 -2*28 -4*26 +6*24 -8*22 +10*20 +12*18 -14*16",
        "-1*31 +3*29 +5*27 -7*25 +9*23 -11*21 -13*19 +15*17",
    ),
}

# (n, k, part) -> {printed pair: corrected pair}
ERRATA: dict[tuple[int, int, str], dict[Pair, Pair]] = {
    (5, 3, "left"): {(-1, 4, 19): (-1, 8, 19), (1, 5, 18): (1, 9, 18)},
}


def _literal(n: int, k: int) -> ClosedForm:
    if n == 3:
        table, lead = _THREE, 4
    elif n == 5:
        table, lead = _FIVE, 1
    else:
        raise ValueError(f"closed forms are transcribed for n=3 and n=5 only, got n={n}")
    if k not in table:
        raise ValueError(f"k={k} out of range 1..{n}")
    bracket, left, right = (_terms(t) for t in table[k])
    return ClosedForm(n, k, lead, bracket, left, right)


def closed_form(n: int, k: int, corrected: bool = True) -> ClosedForm:
    """Return the transcribed closed form for ``Z^k`` on ``n`` qubits."""
    form = _literal(n, k)
    if not corrected:
        return form
    for (en, ek, part), fixes in ERRATA.items():
        if (en, ek) == (n, k):
            terms = tuple(fixes.get(t, t) for t in getattr(form, part))
            form = replace(form, **{part: terms})
    return form


def closed_forms(n: int, corrected: bool = True) -> list[ClosedForm]:
    return [closed_form(n, k, corrected) for k in range(1, n + 1)]
