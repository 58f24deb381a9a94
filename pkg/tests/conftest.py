"""
Shared fixtures: catalog groups are built once per test session
"""

import pytest

from src.catalog import build_named


@pytest.fixture(scope="session")
def trivial_group():
    return build_named("C1")


@pytest.fixture(scope="session")
def c6():
    return build_named("C6")


@pytest.fixture(scope="session")
def c12():
    return build_named("C12")


@pytest.fixture(scope="session")
def s3():
    return build_named("S3")


@pytest.fixture(scope="session")
def s4():
    return build_named("S4")


@pytest.fixture(scope="session")
def a4():
    return build_named("A4")


@pytest.fixture(scope="session")
def d4():
    return build_named("D4")


@pytest.fixture(scope="session")
def q8():
    return build_named("Q8")


@pytest.fixture(scope="session")
def q8_c3():
    return build_named("Q8:C3")


@pytest.fixture(scope="session")
def c4_x_s3():
    return build_named("C4xS3")


@pytest.fixture(scope="session")
def elementary_2_3():
    return build_named("C2^3")
