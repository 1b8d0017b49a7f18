"""Tensor quadrature grid on the unit two-sphere.

Nodes are Gauss-Legendre in cos(theta) crossed with a uniform azimuth, so the
poles are never sampled and integrals of band-limited integrands are exact:
single spherical harmonics integrate exactly up to degree
min(2 n_theta - 1, n_phi - 1).

The complex coordinate z = tan(theta/2) e^{i phi} is holomorphic for the
orientation in which the (0,1) part of a one-form w has coefficient
(w(e_theta) + i w(e_phihat)) / 2 in the orthonormal frame
(e_theta, e_phihat = (1/sin theta) d/dphi).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


@dataclass(frozen=True, eq=False)
class SphereMesh:
    n_theta: int
    n_phi: int
    theta: np.ndarray = field(init=False, repr=False)
    phi: np.ndarray = field(init=False, repr=False)
    weights: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.n_theta < 2 or self.n_phi < 4:
            raise ValueError(f"mesh too small: {self.n_theta} x {self.n_phi}")
        mu, w_mu = np.polynomial.legendre.leggauss(self.n_theta)
        order = np.argsort(-mu)  # theta ascending from the north pole
        theta = np.arccos(mu[order])
        phi = 2.0 * np.pi * np.arange(self.n_phi) / self.n_phi
        weights = np.outer(w_mu[order], np.full(self.n_phi, 2.0 * np.pi / self.n_phi))
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "weights", weights)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_theta, self.n_phi)

    @property
    def exact_degree(self) -> int:
        """Largest L with all spherical harmonics of degree <= L integrated exactly."""
        return min(2 * self.n_theta - 1, self.n_phi - 1)

    def grids(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.theta, self.phi, indexing="ij")

    def integrate(self, f: np.ndarray) -> float:
        """Quadrature of a scalar field sampled on the mesh (fixed node order)."""
        if f.shape != self.weights.shape:
            raise ValueError(f"field shape {f.shape} does not match mesh {self.weights.shape}")
        return float(np.sum(self.weights * f))

    def stereographic(self, conjugate: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """The coordinate z and its frame derivative (dz(e_theta), dz(e_phihat)).

        dz(e_phihat) = i dz(e_theta) exactly, which is what makes z holomorphic.
        With conjugate=True returns zbar and its frame derivative instead.
        """
        th, ph = self.grids()
        z = np.tan(th / 2.0) * np.exp(1j * ph)
        dz_theta = 0.5 / np.cos(th / 2.0) ** 2 * np.exp(1j * ph)
        if conjugate:
            return np.conj(z), (np.conj(dz_theta), np.conj(1j * dz_theta))
        return z, (dz_theta, 1j * dz_theta)


def fd_weights(x: np.ndarray, x0: float, order: int = 1) -> np.ndarray:
    """Finite-difference weights for the given derivative at x0 on arbitrary nodes.

    Fornberg's recursion; exact for polynomials of degree < len(x), so a
    five-point stencil differentiates at fourth order.
    """
    n = len(x)
    c = np.zeros((n, order + 1))
    c1, c4 = 1.0, x[0] - x0
    c[0, 0] = 1.0
    for i in range(1, n):
        mn = min(i, order)
        c2, c5, c4 = 1.0, c4, x[i] - x0
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, order]


_STENCIL = 5


@lru_cache(maxsize=16)
def _theta_diff_operator(mesh: SphereMesh) -> tuple[np.ndarray, np.ndarray]:
    """Per-row five-point stencils (indices, weights) for d/dtheta on the mesh."""
    x = mesh.theta
    n = len(x)
    width = min(_STENCIL, n)
    idx = np.empty((n, width), dtype=int)
    wts = np.empty((n, width))
    for i in range(n):
        lo = min(max(i - width // 2, 0), n - width)
        idx[i] = np.arange(lo, lo + width)
        wts[i] = fd_weights(x[idx[i]], x[i])
    return idx, wts


def d_dtheta(mesh: SphereMesh, f: np.ndarray) -> np.ndarray:
    """Fourth-order first derivative along theta (axis 0) on the nonuniform grid."""
    idx, wts = _theta_diff_operator(mesh)
    gathered = f[idx]  # (n_theta, stencil, ...)
    w = wts.reshape(wts.shape + (1,) * (f.ndim - 1))
    return np.sum(w * gathered, axis=1)


def d_dphi(mesh: SphereMesh, f: np.ndarray) -> np.ndarray:
    """Fourth-order centered periodic first derivative along phi (axis 1)."""
    dphi = 2.0 * np.pi / mesh.n_phi
    return (
        -np.roll(f, -2, axis=1)
        + 8.0 * np.roll(f, -1, axis=1)
        - 8.0 * np.roll(f, 1, axis=1)
        + np.roll(f, 2, axis=1)
    ) / (12.0 * dphi)
