import pytest

from frobetti import make_ring, quotient_module

R5_QUADRICS = [
    "x^2",
    "x*z",
    "z^2",
    "x*u",
    "z*v",
    "u^2",
    "v^2",
    "z*u + x*v + u*v",
    "y*u",
    "y*v",
    "y*x - z*u",
    "y*z - x*v",
]


def fixture_rings(p):
    """The two-variable standard fixtures re-instantiated at characteristic p."""
    return {
        "R1": make_ring(p, ["x", "y"], ["x^2", "x*y"]),
        "R2": make_ring(p, ["x"], []),
        "R3": make_ring(p, ["x", "y"], ["x*y"]),
        "R4": make_ring(p, ["x", "y"], ["x^2"]),
    }


def residue_field(ring):
    return quotient_module(ring, list(ring.variables))


@pytest.fixture(scope="session")
def R1():
    return make_ring(5, ["x", "y"], ["x^2", "x*y"])


@pytest.fixture(scope="session")
def R2():
    return make_ring(5, ["x"], [])


@pytest.fixture(scope="session")
def R3():
    return make_ring(5, ["x", "y"], ["x*y"])


@pytest.fixture(scope="session")
def R4():
    return make_ring(5, ["x", "y"], ["x^2"])


@pytest.fixture(scope="session")
def R5():
    return make_ring(101, list("xyzuv"), R5_QUADRICS)


@pytest.fixture(scope="session")
def K1(R1):
    return residue_field(R1)


@pytest.fixture(scope="session")
def K2(R2):
    return residue_field(R2)


@pytest.fixture(scope="session")
def K3(R3):
    return residue_field(R3)


@pytest.fixture(scope="session")
def K4(R4):
    return residue_field(R4)
