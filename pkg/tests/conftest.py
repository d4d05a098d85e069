import random

import pytest

from hlgysin import Polynomial


def build(arity, *terms):
    """build(2, (3, (1, 0), 2)) -> 3 * x1 * t^2."""
    out = Polynomial.zero(arity)
    for coeff, x_exponents, t_exponent in terms:
        out = out + Polynomial.monomial(arity, x_exponents, t_exponent, coeff)
    return out


@pytest.fixture
def poly():
    return build


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture
def random_poly(rng):
    def make(arity, n_terms=6, max_exp=3, max_t=2):
        out = Polynomial.zero(arity)
        for _ in range(n_terms):
            x_exponents = tuple(rng.randrange(max_exp + 1) for _ in range(arity))
            coeff = rng.randint(-5, 5) or 1
            out = out + Polynomial.monomial(
                arity, x_exponents, rng.randrange(max_t + 1), coeff
            )
        return out

    return make
