import pytest

from lincat.groups import (
    cyclic_group,
    direct_product,
    subgroup_embedding,
    symmetric_group,
    trivial_group,
)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def v4():
    return direct_product(cyclic_group(2), cyclic_group(2))


@pytest.fixture(scope="session")
def one():
    return trivial_group()


@pytest.fixture(scope="session")
def z2_in_s3(s3):
    sub, incl = subgroup_embedding(s3, [0, 2], name="Z2")
    return incl


@pytest.fixture(scope="session")
def z3_in_s3(s3):
    sub, incl = subgroup_embedding(s3, [0, 3, 4], name="Z3")
    return incl
