"""Flag factors: sphere maps into the adjoint orbit of a canonical element.

The orbit of xi_1 = i (e_1 e_1^* - I/n) in su(n) is the projective space
CP^{n-1}, embedded as sigma([v]) = i (v v^* - I/n) for unit vectors v.  A
degree-d rational curve z -> [1 : z^d : 0 : ...] in the holomorphic
coordinate of the mesh produces a flag factor whose analytic tangent
derivatives are carried along with the samples.

ad(sigma(x)) has eigenvalues {0, +-i}; its +-i eigenbundles are
g_{+1} = { v w^* : w perp v } and g_{-1} = its adjoint, so graded components
reduce to projector algebra with P = v v^*.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mesh import SphereMesh
from .roots import DynkinType
from .sun import MatrixLieAlgebra, adjoint


@dataclass(frozen=True)
class FlagFactorMap:
    """A sampled orbit map sigma with analytic frame derivatives."""

    algebra: MatrixLieAlgebra
    mesh: SphereMesh
    degree: int
    sigma: np.ndarray                      # (n_theta, n_phi, n, n)
    d_sigma: tuple[np.ndarray, np.ndarray]  # derivatives along (e_theta, e_phihat)
    projector: np.ndarray                  # P = v v^* over the mesh
    orbit_dynkin: DynkinType               # type of the ambient algebra, A_{n-1}
    orbit_norm_sq: int                     # exact Killing norm of the base point
    antiholomorphic: bool = False

    @property
    def base_point(self) -> np.ndarray:
        return self.algebra.xi1()


def build_sigma(
    algebra: MatrixLieAlgebra,
    degree: int,
    mesh: SphereMesh,
    antiholomorphic: bool = False,
) -> FlagFactorMap:
    """Sample sigma = i (v v^* - I/n) along the degree-d curve [1 : z^d : 0 : ...]."""
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    n = algebra.n
    z, (dz_th, dz_ph) = mesh.stereographic(conjugate=antiholomorphic)
    shape = z.shape

    vt = np.zeros(shape + (n,), dtype=complex)
    vt[..., 0] = 1.0
    vt_prime = np.zeros_like(vt)
    if degree > 0:
        vt[..., 1] = z**degree
        vt_prime[..., 1] = degree * z ** (degree - 1)

    norm_sq = np.sum(np.abs(vt) ** 2, axis=-1)
    P = vt[..., :, None] * np.conj(vt[..., None, :]) / norm_sq[..., None, None]
    sigma = 1j * (P - np.eye(n) / n)

    d_sigma = []
    for dz in (dz_th, dz_ph):
        dvt = vt_prime * dz[..., None]
        dP_raw = dvt[..., :, None] * np.conj(vt[..., None, :]) + vt[..., :, None] * np.conj(
            dvt[..., None, :]
        )
        dnorm = 2.0 * np.sum(vt * np.conj(dvt), axis=-1).real
        dP = dP_raw / norm_sq[..., None, None] - P * (dnorm / norm_sq)[..., None, None]
        d_sigma.append(1j * dP)

    return FlagFactorMap(
        algebra=algebra,
        mesh=mesh,
        degree=degree,
        sigma=sigma,
        d_sigma=(d_sigma[0], d_sigma[1]),
        projector=P,
        orbit_dynkin=DynkinType("A", n - 1),
        orbit_norm_sq=2 * (n - 1),
        antiholomorphic=antiholomorphic,
    )


def norm_sq_field(flag: FlagFactorMap) -> np.ndarray:
    return flag.algebra.norm_sq(flag.sigma)

def norm_spread(flag: FlagFactorMap) -> float:
    f = norm_sq_field(flag)
    return float(np.max(f) - np.min(f))


def ad_spectrum_deviation(flag: FlagFactorMap) -> float:
    """Max distance of the ad(sigma) eigenvalues from {0, +-i} over all nodes.

    The eigenvalues of ad(sigma) are i (m_a - m_b) for eigenvalues i m of
    sigma, so it suffices to check pairwise differences of the Hermitian
    spectrum of -i sigma against {-1, 0, 1}.
    """
    m = np.linalg.eigvalsh(-1j * flag.sigma)
    diffs = m[..., :, None] - m[..., None, :]
    dist = np.min(np.abs(diffs[..., None] - np.array([-1.0, 0.0, 1.0])), axis=-1)
    return float(np.max(dist))


def grade_components(
    flag: FlagFactorMap, X: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split a matrix field into (g_{-1}, g_0, g_{+1}) components of ad(sigma)."""
    P = flag.projector
    PX = P @ X
    XP = X @ P
    up = PX - PX @ P      # P X Q, eigenvalue +i
    down = XP - P @ XP    # Q X P, eigenvalue -i
    return down, X - up - down, up


def check_orbit_invariants(flag: FlagFactorMap, tol: float = 1e-8) -> None:
    spread = norm_spread(flag)
    spectrum = ad_spectrum_deviation(flag)
    if spread > tol or spectrum > tol:
        raise ValueError(
            f"orbit invariants violated: norm spread {spread:.3e}, "
            f"ad spectrum deviation {spectrum:.3e}, tol {tol:.1e}"
        )


def recover_beta(
    flag: FlagFactorMap, tol: float = 1e-8
) -> tuple[tuple[np.ndarray, np.ndarray], float]:
    """Pullback one-form of the orbit, as [sigma, d sigma], plus its residual.

    d sigma = [beta, sigma] with beta valued in g_{-1} + g_1 where
    ad(sigma)^2 = -id, so beta = [sigma, d sigma] inverts that relation; the
    reported residual is the max Frobenius defect of d sigma - [beta, sigma].
    """
    check_orbit_invariants(flag, tol)
    betas = []
    residual = 0.0
    for ds in flag.d_sigma:
        beta = flag.sigma @ ds - ds @ flag.sigma
        back = beta @ flag.sigma - flag.sigma @ beta
        residual = max(residual, float(np.max(np.abs(ds - back))))
        betas.append(beta)
    return (betas[0], betas[1]), residual


def beta_norm_sq_field(flag: FlagFactorMap) -> np.ndarray:
    """Pointwise |sigma^* beta|^2 summed over the orthonormal frame."""
    (b_th, b_ph), _ = recover_beta(flag)
    return flag.algebra.norm_sq(b_th) + flag.algebra.norm_sq(b_ph)


def holomorphy_residual(flag: FlagFactorMap) -> float:
    """Max norm of the g_{-1} and g_0 parts of (d sigma)^{0,1} over the mesh.

    Zero (to rounding) exactly when the curve is holomorphic for the mesh
    orientation, which is the flag-factor condition for a constant base map.
    """
    b = 0.5 * (flag.d_sigma[0] + 1j * flag.d_sigma[1])  # (0,1) coefficient
    down, zero, _ = grade_components(flag, b)
    bad = flag.algebra.norm_sq(down) + flag.algebra.norm_sq(zero)
    return float(np.sqrt(np.max(bad)))
