"""
Shared fixtures and hypothesis profiles
"""
import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from processing.exactq import QMatrix
from processing.pentad import CartanPentad

settings.register_profile("default", max_examples=50, deadline=None)
settings.register_profile("fast", max_examples=10, deadline=None)
settings.register_profile(
    "ci", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def rationals(max_abs: int = 3, max_den: int = 4):
    """Rationals p/q with |p/q| <= max_abs and q <= max_den"""
    return st.builds(
        lambda num, den: Fraction(num, den),
        st.integers(-max_abs * max_den, max_abs * max_den),
        st.integers(1, max_den),
    ).filter(lambda q: abs(q) <= max_abs)


def square_matrices(max_n: int = 3, **kwargs):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(rationals(**kwargs), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(QMatrix)
    )


def symmetric_matrices(max_n: int = 3, **kwargs):
    def symmetrize(m: QMatrix) -> QMatrix:
        n = m.rows
        return QMatrix([[m[min(i, j), max(i, j)] for j in range(n)] for i in range(n)])

    return square_matrices(max_n, **kwargs).map(symmetrize)


@pytest.fixture
def km_affine_pentad():
    """(3, 2; A, D, (4, 4)) with Cartan matrix [[2, -2], [-2, 2]]"""
    return CartanPentad.create(
        A=[["1/8", 0, 0], [0, 0, 1], [0, 1, 0]],
        D=[[2, -2], [0, 0], [0, 1]],
        gamma=[4, 4],
    )


@pytest.fixture
def sl2_pentad():
    return CartanPentad.create(A=[["1/8"]], D=[[2]], gamma=[4])


@pytest.fixture
def a2():
    return QMatrix([[2, -1], [-1, 2]])


@pytest.fixture
def b2():
    return QMatrix([[2, -1], [-2, 2]])


@pytest.fixture
def affine_a1():
    return QMatrix([[2, -2], [-2, 2]])


def loop_table(max_degree: int, degree0: int = 1):
    """Dimensions of C[t, t^-1] (x) sl2 in the principal grading"""
    return {k: degree0 if k == 0 else (2 if k % 2 else 1) for k in range(-max_degree, max_degree + 1)}


def nonzero(dims):
    return {k: v for k, v in dims.items() if v}
