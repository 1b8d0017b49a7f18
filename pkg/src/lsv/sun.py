"""Numerical su(n) with the Killing metric, exponentials and their derivatives.

Fields are numpy arrays of shape (..., n, n) over mesh nodes.  The metric is
<X, Y> = -2n tr(XY) on anti-Hermitian traceless matrices, i.e. 2n times the
real Frobenius product, which matches the exact combinatorial norms of the
canonical elements (su(2): |xi_1|^2 = 2).

Exponentials: a Rodrigues closed form for su(2), and a unitary
eigendecomposition of the Hermitian matrix -sqrt(-1) X in general.  Spatial
derivatives of exp(t X(x)) use the eigendecomposition's divided-difference
(Daleckii-Krein) formula, so the measured energies never rely on the
closed-form identities they are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def adjoint(X: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(X, -1, -2))


@dataclass(frozen=True)
class MatrixLieAlgebra:
    """su(n) with the Killing normalization."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"su(n) needs n >= 2, got {self.n}")

    @property
    def killing_scale(self) -> float:
        return 2.0 * self.n

    def inner(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Pointwise <X, Y>, real, over the last two axes."""
        return self.killing_scale * np.sum(X * np.conj(Y), axis=(-2, -1)).real

    def norm_sq(self, X: np.ndarray) -> np.ndarray:
        return self.killing_scale * np.sum(np.abs(X) ** 2, axis=(-2, -1))

    def xi1(self) -> np.ndarray:
        """Canonical element of the first simple root: i (e_1 e_1^* - I/n)."""
        p = np.zeros((self.n, self.n), dtype=complex)
        p[0, 0] = 1.0
        return 1j * (p - np.eye(self.n) / self.n)

    def membership_defect(self, X: np.ndarray) -> float:
        """Max deviation from anti-Hermitian traceless, for validation."""
        anti = np.max(np.abs(X + adjoint(X)))
        trace = np.max(np.abs(np.trace(X, axis1=-2, axis2=-1)))
        return float(max(anti, trace))


def exp_su2(X: np.ndarray) -> np.ndarray:
    """Rodrigues closed form of exp on su(2): cos(w) I + sinc(w) X, w^2 = det X."""
    if X.shape[-2:] != (2, 2):
        raise ValueError("exp_su2 expects 2x2 matrices")
    det = (X[..., 0, 0] * X[..., 1, 1] - X[..., 0, 1] * X[..., 1, 0]).real
    w = np.sqrt(np.maximum(det, 0.0))
    eye = np.eye(2, dtype=complex)
    return np.cos(w)[..., None, None] * eye + np.sinc(w / np.pi)[..., None, None] * X


def exp_unitary(X: np.ndarray) -> np.ndarray:
    """exp of an anti-Hermitian field via eigendecomposition of -i X."""
    lam, U = np.linalg.eigh(-1j * X)
    return (U * np.exp(1j * lam)[..., None, :]) @ adjoint(U)


class UnitaryExpFamily:
    """exp(t X(x)) with spatial derivatives, for a fixed anti-Hermitian field X.

    The Hermitian matrix H = -i X is diagonalized once; for each t the value
    is U e^{i t L} U^* and the derivative in a spatial direction with
    dH = -i dX is the divided-difference formula

        d exp = U (F ∘ (U^* dH U)) U^*,   F_ab = (g(l_a) - g(l_b)) / (l_a - l_b)

    with g(l) = e^{i t l} and g'(l) on the diagonal (and for eigenvalue
    clusters closer than a tolerance).
    """

    def __init__(self, X: np.ndarray, dXs: tuple[np.ndarray, ...], degenerate_tol: float = 1e-9):
        self.lam, self.U = np.linalg.eigh(-1j * X)
        Uh = adjoint(self.U)
        self._E = tuple(Uh @ (-1j * dX) @ self.U for dX in dXs)
        self._delta = self.lam[..., :, None] - self.lam[..., None, :]
        self._near = np.abs(self._delta) < degenerate_tol
        self._delta_safe = np.where(self._near, 1.0, self._delta)

    def value(self, t: float) -> np.ndarray:
        return (self.U * np.exp(1j * t * self.lam)[..., None, :]) @ adjoint(self.U)

    def derivatives(self, t: float) -> tuple[np.ndarray, ...]:
        g = np.exp(1j * t * self.lam)
        ratio = (g[..., :, None] - g[..., None, :]) / self._delta_safe
        limit = 1j * t * 0.5 * (g[..., :, None] + g[..., None, :])
        F = np.where(self._near, limit, ratio)
        return tuple(self.U @ (F * E) @ adjoint(self.U) for E in self._E)

    def at(self, t: float) -> tuple[np.ndarray, tuple[np.ndarray, ...]]:
        return self.value(t), self.derivatives(t)


class RodriguesOrbitFamily:
    """exp(t s(x)) for su(2) fields on the orbit with s^2 = -I/4.

    There exp(t s) = cos(t/2) I + 2 sin(t/2) s, which is linear in s, so the
    spatial derivative is simply 2 sin(t/2) ds.
    """

    def __init__(self, sigma: np.ndarray, d_sigmas: tuple[np.ndarray, ...], tol: float = 1e-10):
        if sigma.shape[-2:] != (2, 2):
            raise ValueError("Rodrigues orbit family expects su(2) fields")
        eye = np.eye(2, dtype=complex)
        defect = np.max(np.abs(sigma @ sigma + 0.25 * eye))
        if defect > tol:
            raise ValueError(f"field is not on the su(2) orbit (s^2 + I/4 defect {defect:.3e})")
        scale = max(float(np.max(np.abs(ds))) for ds in d_sigmas) if d_sigmas else 0.0
        for ds in d_sigmas:
            # derivative directions must be orbit-tangent: s ds + ds s = 0
            tangency = np.max(np.abs(sigma @ ds + ds @ sigma))
            if tangency > tol * max(1.0, scale):
                raise ValueError(f"derivative is not tangent to the orbit (defect {tangency:.3e})")
        self.sigma = sigma
        self.d_sigmas = d_sigmas
        self._eye = eye

    def value(self, t: float) -> np.ndarray:
        return np.cos(t / 2.0) * self._eye + 2.0 * np.sin(t / 2.0) * self.sigma

    def derivatives(self, t: float) -> tuple[np.ndarray, ...]:
        return tuple(2.0 * np.sin(t / 2.0) * ds for ds in self.d_sigmas)

    def at(self, t: float) -> tuple[np.ndarray, tuple[np.ndarray, ...]]:
        return self.value(t), self.derivatives(t)
