import numpy as np

from lsv.energy import SampledMap, harmonicity_residual, map_at, perturbed_map
from lsv.flag import build_sigma
from lsv.mesh import SphereMesh


def test_constant_map_residual_is_zero(su2, mesh_small):
    shape = mesh_small.shape
    values = np.broadcast_to(np.eye(2, dtype=complex), shape + (2, 2)).copy()
    zeros = np.zeros_like(values)
    smap = SampledMap(algebra=su2, mesh=mesh_small, values=values, d_frame=(zeros, zeros))
    assert harmonicity_residual(smap) == 0.0


def _residuals(su2, sizes, degree=1):
    out = []
    for n in sizes:
        mesh = SphereMesh(n, 2 * n)
        flag = build_sigma(su2, degree, mesh)
        out.append(harmonicity_residual(map_at(flag, np.pi)))
    return out


def test_flag_transformation_residual_converges(su2):
    res = _residuals(su2, (24, 48, 96))
    orders = [np.log2(a / b) for a, b in zip(res, res[1:])]
    assert min(orders) >= 2.0
    assert res[-1] < 1e-4


def test_perturbed_map_residual_stays_positive(su2):
    floors = []
    for n in (24, 48, 96):
        mesh = SphereMesh(n, 2 * n)
        flag = build_sigma(su2, 1, mesh)
        floors.append(harmonicity_residual(perturbed_map(flag, 0.3)))
    assert min(floors) > 0.5
    assert max(floors) / min(floors) < 1.5  # converges to a nonzero limit
