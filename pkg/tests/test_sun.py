import numpy as np
import pytest
import scipy.linalg

from lsv.killing import canonical_norm_sq
from lsv.roots import DynkinType, enumerate_roots
from lsv.sun import (
    MatrixLieAlgebra,
    RodriguesOrbitFamily,
    UnitaryExpFamily,
    adjoint,
    exp_su2,
    exp_unitary,
)


def random_su(rng, n, shape=()):
    a = rng.standard_normal(shape + (n, n)) + 1j * rng.standard_normal(shape + (n, n))
    x = a - adjoint(a)
    tr = np.trace(x, axis1=-2, axis2=-1) / n
    return x - tr[..., None, None] * np.eye(n)


def test_invalid_size():
    with pytest.raises(ValueError):
        MatrixLieAlgebra(1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_xi1_norm_matches_combinatorics(n):
    alg = MatrixLieAlgebra(n)
    xi = alg.xi1()
    assert alg.membership_defect(xi) < 1e-15
    exact = canonical_norm_sq(enumerate_roots(DynkinType("A", n - 1)), {1})
    assert abs(alg.norm_sq(xi) - exact) < 1e-12
    assert exact == 2 * (n - 1)


def test_inner_is_minus_killing_trace(rng):
    alg = MatrixLieAlgebra(3)
    X = random_su(rng, 3)
    Y = random_su(rng, 3)
    expected = -2 * 3 * np.trace(X @ Y).real
    assert abs(alg.inner(X, Y) - expected) < 1e-12
    assert alg.norm_sq(X) > 0


def test_exp_su2_matches_scipy(rng):
    X = random_su(rng, 2, shape=(6,))
    ours = exp_su2(X)
    for k in range(6):
        ref = scipy.linalg.expm(X[k])
        assert np.max(np.abs(ours[k] - ref)) < 1e-12


@pytest.mark.parametrize("n", [2, 3, 4])
def test_exp_unitary_matches_scipy(rng, n):
    X = random_su(rng, n, shape=(4,))
    ours = exp_unitary(X)
    for k in range(4):
        ref = scipy.linalg.expm(X[k])
        assert np.max(np.abs(ours[k] - ref)) < 1e-11
        assert np.max(np.abs(adjoint(ours[k]) @ ours[k] - np.eye(n))) < 1e-12


@pytest.mark.parametrize("n", [2, 3])
def test_family_derivative_matches_finite_differences(rng, n):
    # a one-parameter spatial family X(s); compare d/ds exp(t X(s)) at s=0
    X0 = random_su(rng, n)
    dX = random_su(rng, n)
    t = 1.3
    fam = UnitaryExpFamily(X0, (dX,))
    _, (analytic,) = fam.at(t)
    h = 1e-6
    fd = (exp_unitary(t * (X0 + h * dX)) - exp_unitary(t * (X0 - h * dX))) / (2 * h)
    assert np.max(np.abs(analytic - fd)) < 1e-8


def test_family_derivative_handles_degenerate_spectrum(rng):
    # projector-type spectrum: eigenvalue -1/n repeated n-1 times
    n = 4
    alg = MatrixLieAlgebra(n)
    X0 = alg.xi1()
    dX = random_su(rng, n)
    fam = UnitaryExpFamily(X0, (dX,))
    t = 0.9
    _, (analytic,) = fam.at(t)
    h = 1e-6
    fd = (exp_unitary(t * (X0 + h * dX)) - exp_unitary(t * (X0 - h * dX))) / (2 * h)
    assert np.max(np.abs(analytic - fd)) < 1e-8


def test_rodrigues_family_matches_eigendecomposition(rng):
    # sigma on the su(2) orbit: i(v v^* - I/2); derivative directions must be
    # orbit-tangent, i.e. of the form [W, sigma]
    v = rng.standard_normal((5, 2)) + 1j * rng.standard_normal((5, 2))
    v /= np.linalg.norm(v, axis=-1, keepdims=True)
    P = v[..., :, None] * np.conj(v[..., None, :])
    sigma = 1j * (P - np.eye(2) / 2)
    W = random_su(rng, 2, shape=(5,))
    dsig = W @ sigma - sigma @ W
    rod = RodriguesOrbitFamily(sigma, (dsig,))
    eig = UnitaryExpFamily(sigma, (dsig,))
    for t in (0.0, 0.7, np.pi, 5.1):
        pr, (dr,) = rod.at(t)
        pe, (de,) = eig.at(t)
        assert np.max(np.abs(pr - pe)) < 1e-12
        assert np.max(np.abs(dr - de)) < 1e-10


def test_rodrigues_rejects_off_orbit(rng):
    sigma = random_su(rng, 2, shape=(3,))
    with pytest.raises(ValueError):
        RodriguesOrbitFamily(sigma, (sigma,))


def test_rodrigues_rejects_non_tangent_directions(rng):
    alg = MatrixLieAlgebra(2)
    sigma = np.broadcast_to(alg.xi1(), (3, 2, 2))
    bad = np.broadcast_to(alg.xi1(), (3, 2, 2))  # radial, not tangent
    with pytest.raises(ValueError):
        RodriguesOrbitFamily(sigma, (bad,))


def test_membership_defect_flags_bad_input(rng):
    alg = MatrixLieAlgebra(2)
    good = random_su(rng, 2)
    assert alg.membership_defect(good) < 1e-12
    assert alg.membership_defect(good + 0.1 * np.eye(2)) > 0.05
