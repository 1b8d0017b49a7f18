import numpy as np
import pytest

from lsv.energy import energy_curve
from lsv.flag import build_sigma
from lsv.mesh import SphereMesh
from lsv.sun import MatrixLieAlgebra


@pytest.fixture(scope="session")
def mesh_small() -> SphereMesh:
    return SphereMesh(32, 64)


@pytest.fixture(scope="session")
def su2() -> MatrixLieAlgebra:
    return MatrixLieAlgebra(2)


@pytest.fixture(scope="session")
def su3() -> MatrixLieAlgebra:
    return MatrixLieAlgebra(3)


@pytest.fixture(scope="session")
def flag_su2_deg1(su2, mesh_small):
    return build_sigma(su2, 1, mesh_small)


@pytest.fixture(scope="session")
def report_su2_deg1(flag_su2_deg1):
    return energy_curve(flag_su2_deg1)


@pytest.fixture(scope="session")
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
