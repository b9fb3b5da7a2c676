import random

import pytest

from apolar import DualPolynomial, monomials


def random_form(rng: random.Random, num_vars: int, degree: int, lo=-3, hi=3) -> DualPolynomial:
    """Random nonzero form with small integer coefficients."""
    while True:
        terms = {e: rng.randint(lo, hi) for e in monomials(num_vars, degree)}
        G = DualPolynomial(num_vars, terms)
        if not G.is_zero():
            return G


def random_polynomial(rng: random.Random, num_vars: int, degrees) -> DualPolynomial:
    """Sum of random homogeneous components in the listed degrees."""
    out = DualPolynomial.zero(num_vars)
    for d in degrees:
        terms = {e: rng.randint(-3, 3) for e in monomials(num_vars, d)}
        out = out + DualPolynomial(num_vars, terms)
    return out


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
