import numpy as np
import pytest

from gaspin.core import EUCLIDEAN4, MINKOWSKI12, PAULI3, SPACETIME13, Multivector

ALL_SIGNATURES = (EUCLIDEAN4, SPACETIME13, PAULI3, MINKOWSKI12)


def random_mv(rng, signature, integer=False, scale=1.0):
    if integer:
        coeffs = rng.integers(-3, 4, size=signature.dim).astype(float)
    else:
        coeffs = rng.uniform(-scale, scale, size=signature.dim)
    return Multivector(signature, coeffs)


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)
