import pytest

from qconic import Conic, validate_arrangement, pencil_members


@pytest.fixture(scope="session")
def generic_pair():
    """Two conics meeting transversally at the four rational points
    (+-1 : +-1 : 1): four nodes."""
    return validate_arrangement([Conic((1, 1, -2, 0, 0, 0)),
                                 Conic((1, 2, -3, 0, 0, 0))])


@pytest.fixture(scope="session")
def tangent_pair():
    """x^2+y^2-z^2 and x^2+2y^2-z^2: tacnodes at (1 : 0 : +-1)."""
    return validate_arrangement([Conic((1, 1, -1, 0, 0, 0)),
                                 Conic((1, 2, -1, 0, 0, 0))])


def _pencil(params):
    return pencil_members(Conic((1, 1, -2, 0, 0, 0)),
                          Conic((1, -1, 0, 0, 0, 0)), params)


@pytest.fixture(scope="session")
def pencil3():
    """Three members of a pencil with base locus (+-1 : +-1 : 1):
    four ordinary triple points."""
    return _pencil([0, 2, 3])


@pytest.fixture(scope="session")
def pencil4():
    """Four members of the same pencil: four ordinary quadruple points."""
    return _pencil([0, 2, 3, 4])


@pytest.fixture(scope="session")
def five_circles():
    """Five circles through the origin with an ordinary quintuple point
    at (0 : 0 : 1); the canonical non-quasi-homogeneous example."""
    return validate_arrangement([
        Conic((1, 1, 0, 0, -6, -8)),    # (x-3z)^2 + (y-4z)^2 - 25 z^2
        Conic((1, 1, 0, 0, -8, -6)),    # (x-4z)^2 + (y-3z)^2 - 25 z^2
        Conic((1, 1, 0, 0, 6, -8)),     # (x+3z)^2 + (y-4z)^2 - 25 z^2
        Conic((1, 1, 0, 0, 8, -6)),     # (x+4z)^2 + (y-3z)^2 - 25 z^2
        Conic((1, 1, 0, 0, -10, 0)),    # (x-5z)^2 + y^2 - 25 z^2
    ])


@pytest.fixture(scope="session")
def q_fixtures(generic_pair, tangent_pair, pencil3, pencil4):
    return {
        "generic_pair": generic_pair,
        "tangent_pair": tangent_pair,
        "pencil3": pencil3,
        "pencil4": pencil4,
    }
