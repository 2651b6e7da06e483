"""Shared fixtures: small algebras built once per session."""

import pytest

from superalgebra.algebra import direct_sum
from superalgebra.constructors import build_glmn, build_odd_symplectic, build_ospm2n, build_slmn


@pytest.fixture(scope="session")
def sl2():
    return build_slmn(2, 0)


@pytest.fixture(scope="session")
def sl3():
    return build_slmn(3, 0)


@pytest.fixture(scope="session")
def gl11():
    return build_glmn(1, 1)


@pytest.fixture(scope="session")
def gl21():
    return build_glmn(2, 1)


@pytest.fixture(scope="session")
def sl21():
    return build_slmn(2, 1)


@pytest.fixture(scope="session")
def osp12():
    return build_ospm2n(1, 1)


@pytest.fixture(scope="session")
def c02():
    return build_odd_symplectic(1)


@pytest.fixture(scope="session")
def sl2_sum_split(sl2):
    """sl(2) + sl(2) with the second form doubled: two Casimir eigenvalues."""
    return direct_sum(sl2, sl2.rescaled(2), name="sl(2)+2sl(2)")
