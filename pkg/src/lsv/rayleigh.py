"""Discrete Hardy-type Rayleigh quotient on a radial grid.

Minimizes  R[psi] = int psi'(r)^2 r^n dr / int psi(r)^2 r^{n-2} dr  over
piecewise-linear psi vanishing at both ends of the grid support, via the
generalized eigenproblem K psi = lambda M psi on the interior hat functions.
Every admissible psi extends by zero to a valid trial function on (0, inf),
so the discrete minimum is always >= (n-1)^2/4, and it converges down to
that constant as the support widens (logarithmically) and the grid refines.

Per-cell integrals are evaluated in closed form; the helper works for exact
Fraction inputs as well as floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse
import scipy.sparse.linalg

def hardy_target(n: int):
    """The sharp constant (n-1)^2/4 the discrete infimum converges down to."""
    return (n - 1) ** 2 / 4

DEFAULT_DECADES = (-8, 8)
DEFAULT_CELLS_PER_DECADE = 256


@dataclass(frozen=True)
class RadialGrid:
    """Strictly increasing nodes in (0, inf); trial functions vanish at both ends."""

    nodes: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.nodes) < 17:
            raise ValueError(f"grid needs at least 16 cells, got {len(self.nodes) - 1}")
        if self.nodes[0] <= 0:
            raise ValueError("grid support must lie in (0, inf)")
        if any(b <= a for a, b in zip(self.nodes, self.nodes[1:])):
            raise ValueError("grid nodes must be strictly increasing")

    @property
    def cells(self) -> int:
        return len(self.nodes) - 1


def log_grid(decades: tuple[int, int] = DEFAULT_DECADES,
             cells_per_decade: int = DEFAULT_CELLS_PER_DECADE) -> RadialGrid:
    """Log-spaced grid 10^(k / cpd) for integer k, so widened grids nest exactly."""
    lo, hi = decades
    if hi <= lo:
        raise ValueError(f"empty decade range {decades}")
    ks = range(lo * cells_per_decade, hi * cells_per_decade + 1)
    return RadialGrid(tuple(10.0 ** (k / cells_per_decade) for k in ks))


def _moment(k: int, a, b):
    """int_a^b r^k dr, closed form (k >= 0 throughout since n >= 2)."""
    return (b ** (k + 1) - a ** (k + 1)) / (k + 1)


def _cell_contributions(n: int, a, b):
    """Moments m_k = int_a^b r^{n-2+k} dr of one cell, k = 0, 1, 2.

    The 2x2 blocks for the hat pair (left, right) on the cell assemble as
        K = (m2 / h^2) [[1, -1], [-1, 1]],
        M = (1/h^2) [[b^2 m0 - 2 b m1 + m2,  -a b m0 + (a+b) m1 - m2],
                     [symmetric,              a^2 m0 - 2 a m1 + m2]].
    """
    return _moment(n - 2, a, b), _moment(n - 1, a, b), _moment(n, a, b)


def trial_quotient(n: int, grid, values: Sequence):
    """Rayleigh quotient of one piecewise-linear trial function.

    grid is a RadialGrid or a bare increasing node sequence; values holds psi
    at every node and must vanish at both ends.  Exact (Fraction) nodes and
    values give an exact quotient.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    nodes = grid.nodes if isinstance(grid, RadialGrid) else tuple(grid)
    if len(values) != len(nodes):
        raise ValueError("values must match the grid nodes")
    if values[0] != 0 or values[-1] != 0:
        raise ValueError("trial function must vanish at the ends of the support")
    num = 0
    den = 0
    for a, b, pa, pb in zip(nodes, nodes[1:], values, values[1:]):
        h = b - a
        m0, m1, m2 = _cell_contributions(n, a, b)
        num += (pb - pa) ** 2 * m2 / h**2
        den += (
            pa**2 * (b**2 * m0 - 2 * b * m1 + m2)
            + 2 * pa * pb * (-a * b * m0 + (a + b) * m1 - m2)
            + pb**2 * (a**2 * m0 - 2 * a * m1 + m2)
        ) / h**2
    if den == 0:
        raise ValueError("trial function is identically zero")
    return num / den


def _assemble(n: int, grid: RadialGrid):
    nodes = np.asarray(grid.nodes)
    a, b = nodes[:-1], nodes[1:]
    h = b - a
    m0, m1, m2 = _cell_contributions(n, a, b)
    k_diag = m2 / h**2
    m_ll = (b**2 * m0 - 2 * b * m1 + m2) / h**2
    m_lr = (-a * b * m0 + (a + b) * m1 - m2) / h**2
    m_rr = (a**2 * m0 - 2 * a * m1 + m2) / h**2

    N = grid.cells - 1  # interior nodes
    K_main = k_diag[:-1] + k_diag[1:]
    K_off = -k_diag[1:-1]
    M_main = m_rr[:-1] + m_ll[1:]
    M_off = m_lr[1:-1]

    def tridiag(main, off):
        return scipy.sparse.diags((off, main, off), (-1, 0, 1), shape=(N, N), format="csc")

    return tridiag(K_main, K_off), tridiag(M_main, M_off)


def rayleigh_infimum(n: int, grid: RadialGrid) -> float:
    """Smallest generalized eigenvalue of the discrete quotient; >= (n-1)^2/4."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    K, M = _assemble(n, grid)
    # Symmetric diagonal rescaling: equalizes the huge dynamic range of a
    # wide radial grid without changing the generalized eigenvalues.
    d = 1.0 / np.sqrt(M.diagonal())
    D = scipy.sparse.diags(d, format="csc")
    Ks, Ms = D @ K @ D, D @ M @ D
    v0 = np.ones(K.shape[0])  # fixed start vector keeps runs byte-identical
    vals = scipy.sparse.linalg.eigsh(
        Ks, k=1, M=Ms, sigma=0.0, which="LM", v0=v0, return_eigenvectors=False
    )
    return float(vals[0])


def support_widening_study(
    n: int,
    decades: tuple[int, int] = DEFAULT_DECADES,
    cells_per_decade: int = DEFAULT_CELLS_PER_DECADE,
    steps: int = 3,
    step_decades: int = 2,
) -> list[dict]:
    """Infima on a nested sequence of widening log grids (same spacing).

    Because each grid's hat space contains the previous one's (extension by
    zero), the computed infimum is nonincreasing along the sequence.
    """
    rows = []
    lo, hi = decades
    for k in range(steps):
        g = log_grid((lo - k * step_decades, hi + k * step_decades), cells_per_decade)
        rows.append(
            {
                "rmin": g.nodes[0],
                "rmax": g.nodes[-1],
                "cells": g.cells,
                "infimum": rayleigh_infimum(n, g),
                "target": hardy_target(n),
            }
        )
    return rows
