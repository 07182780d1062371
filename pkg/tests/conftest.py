import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oddslocc.qstate import QubitState  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20071001)


def complex_vectors(rng, n, count):
    dim = 1 << n
    return rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))


@pytest.fixture
def make_state(rng):
    def make(n):
        v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
        return QubitState(n, v)

    return make
