import numpy as np
import pytest

try:
    from scipy.special import sph_harm_y
except ImportError:  # older scipy exposes the (m, l, phi, theta) order
    from scipy.special import sph_harm

    def sph_harm_y(ell, m, theta, phi):
        return sph_harm(m, ell, phi, theta)

from lsv.mesh import SphereMesh, d_dphi, d_dtheta, fd_weights


@pytest.mark.parametrize("n_theta,n_phi", [(8, 16), (32, 64), (128, 256)])
def test_weights_sum_to_sphere_area(n_theta, n_phi):
    mesh = SphereMesh(n_theta, n_phi)
    assert abs(mesh.integrate(np.ones(mesh.shape)) - 4 * np.pi) < 1e-12


def test_mesh_validation():
    with pytest.raises(ValueError):
        SphereMesh(1, 64)
    with pytest.raises(ValueError):
        SphereMesh(16, 2)
    mesh = SphereMesh(8, 16)
    with pytest.raises(ValueError):
        mesh.integrate(np.ones((4, 4)))


def test_poles_excluded():
    mesh = SphereMesh(16, 32)
    assert np.all(mesh.theta > 0) and np.all(mesh.theta < np.pi)
    assert np.all(np.diff(mesh.theta) > 0)


@pytest.mark.parametrize("n_theta,n_phi", [(8, 16), (16, 24)])
def test_spherical_harmonics_integrate_exactly(n_theta, n_phi):
    mesh = SphereMesh(n_theta, n_phi)
    th, ph = mesh.grids()
    for ell in range(mesh.exact_degree + 1):
        for m in range(-ell, ell + 1):
            val = mesh.integrate(sph_harm_y(ell, m, th, ph).real)
            expected = np.sqrt(4 * np.pi) if ell == 0 else 0.0
            assert abs(val - expected) < 1e-12, (ell, m)


def test_stereographic_coordinate_is_holomorphic():
    mesh = SphereMesh(16, 32)
    th, ph = mesh.grids()
    z, (dz_th, dz_ph) = mesh.stereographic()
    assert np.allclose(np.abs(z), np.tan(th / 2.0), atol=1e-13)
    assert np.allclose(dz_ph, 1j * dz_th, atol=1e-13)
    zbar, (dzb_th, dzb_ph) = mesh.stereographic(conjugate=True)
    assert np.allclose(zbar, np.conj(z), atol=1e-13)
    assert np.allclose(dzb_ph, -1j * dzb_th, atol=1e-13)


def test_stereographic_frame_derivative_against_fd():
    # z blows up toward the south pole, so compare relatively on the band
    # theta < 2 where the finite differences are well resolved
    mesh = SphereMesh(48, 96)
    z, (dz_th, dz_ph) = mesh.stereographic()
    th = mesh.theta[:, None]
    band = mesh.theta < 2.0
    fd_th = d_dtheta(mesh, z)
    fd_ph = d_dphi(mesh, z) / np.sin(th)
    rel_th = np.abs(fd_th - dz_th) / (1.0 + np.abs(dz_th))
    rel_ph = np.abs(fd_ph - dz_ph) / (1.0 + np.abs(dz_ph))
    assert np.max(rel_th[band]) < 1e-4
    assert np.max(rel_ph[band]) < 1e-4


def test_fd_weights_reproduce_uniform_stencil():
    h = 0.25
    w = fd_weights(np.array([-2 * h, -h, 0.0, h, 2 * h]), 0.0)
    assert np.allclose(w * 12 * h, [1, -8, 0, 8, -1], atol=1e-12)


def test_derivatives_are_high_order():
    errors = []
    for n in (16, 32, 64):
        mesh = SphereMesh(n, 2 * n)
        th, ph = mesh.grids()
        f = np.sin(3 * th) * np.cos(2 * ph)
        e_th = np.max(np.abs(d_dtheta(mesh, f) - 3 * np.cos(3 * th) * np.cos(2 * ph)))
        e_ph = np.max(np.abs(d_dphi(mesh, f) + 2 * np.sin(3 * th) * np.sin(2 * ph)))
        errors.append(max(e_th, e_ph))
    assert np.log2(errors[0] / errors[1]) > 1.5
    assert np.log2(errors[1] / errors[2]) > 2.5
