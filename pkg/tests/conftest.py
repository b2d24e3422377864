from fractions import Fraction

import pytest

from lscrystal.cartan import LAMBDA, CartanMatrix, Weight
from lscrystal.paths import LSPath, straight


@pytest.fixture
def cm33():
    return CartanMatrix(3, 3)


@pytest.fixture
def pi_lambda(cm33):
    return straight(cm33, LAMBDA, LAMBDA)


@pytest.fixture
def two_segment(cm33):
    """<(5,-2),(-1,2); 0,1/2,1> in B(lambda) for A=(3,3)."""
    return LSPath(cm33, LAMBDA, (Weight(5, -2), Weight(-1, 2)), (Fraction(0), Fraction(1, 2), Fraction(1)))
