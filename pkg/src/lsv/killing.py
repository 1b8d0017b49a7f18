"""Exact Killing-form norms of canonical elements and the 8 n_G case analysis.

On the Cartan subalgebra the Killing form is B(x, y) = sum over all roots of
alpha(x) alpha(y).  The canonical element xi_I dual to an index set I of
simple roots satisfies alpha(xi_I) = sqrt(-1) n_I(alpha), so in the metric -B

    |xi_I|^2 = sum over all roots of n_I(alpha)^2,

an integer.  n_G is realized as the reciprocal of the dual-metric norm of
the highest root (an exact rational that turns out to be the dual Coxeter
number for every simple type), and the per-index stability verdict compares
|xi_i|^2 against 8 n_G.

All arithmetic is exact: integers and fractions.Fraction throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .roots import (
    DynkinType,
    RootSystem,
    _check_index_set,
    cominuscule_indices,
    enumerate_roots,
    highest_root,
    n_I,
    parabolic_grading,
)


def canonical_norm_sq(rs: RootSystem, I: Iterable[int]) -> int:
    """Killing norm squared of the canonical element xi_I, as an exact integer."""
    idx = _check_index_set(I, rs.rank)
    return 2 * sum(n_I(r, idx) ** 2 for r in rs.positive_roots)


@dataclass(frozen=True)
class CanonicalElementSpec:
    """An index set of simple roots with its derived grading and norm data."""

    dynkin: DynkinType
    I: frozenset[int]
    norm_sq: int
    grading_keys: frozenset[int]


def canonical_element(rs: RootSystem, I: Iterable[int]) -> CanonicalElementSpec:
    idx = _check_index_set(I, rs.rank)
    grading = parabolic_grading(rs, idx)
    return CanonicalElementSpec(
        dynkin=rs.dynkin,
        I=idx,
        norm_sq=canonical_norm_sq(rs, idx),
        grading_keys=frozenset(grading),
    )


@dataclass(frozen=True)
class KillingGram:
    """Gram matrix M_ij = sum_alpha n_i(alpha) n_j(alpha) with exact inverse."""

    M: tuple[tuple[int, ...], ...]
    M_inv: tuple[tuple[Fraction, ...], ...]


def _invert_exact(m: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """Gauss-Jordan inverse over the rationals; raises on singular input."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def killing_gram(rs: RootSystem) -> KillingGram:
    n = rs.rank
    m = [[0] * n for _ in range(n)]
    for r in rs.all_roots:
        for i in range(n):
            ci = r.coeffs[i]
            if ci:
                for j in range(n):
                    m[i][j] += ci * r.coeffs[j]
    M = tuple(tuple(row) for row in m)
    return KillingGram(M=M, M_inv=_invert_exact(M))


def dual_norm_sq(gram: KillingGram, c: Sequence[int]) -> Fraction:
    """Dual-metric norm squared c^T M^{-1} c, exact."""
    n = len(gram.M)
    if len(c) != n:
        raise ValueError(f"coefficient vector has length {len(c)}, expected {n}")
    total = Fraction(0)
    for i in range(n):
        if c[i]:
            total += c[i] * sum(gram.M_inv[i][j] * c[j] for j in range(n) if c[j])
    return total


def compute_n_G(dynkin: DynkinType) -> Fraction:
    """Reciprocal of the dual Killing norm squared of the highest root.

    Integral for every simple type; validated against closed forms in the
    test suite rather than trusted.
    """
    rs = enumerate_roots(dynkin)
    val = dual_norm_sq(killing_gram(rs), highest_root(rs).coeffs)
    return 1 / val


def n_g_closed_form(dynkin: DynkinType) -> int:
    """Textbook closed form of n_G (the dual Coxeter number) per family."""
    n = dynkin.rank
    fam = dynkin.family
    if fam == "A":
        return n + 1        # SU(n+1)
    if fam == "B":
        return 2 * n - 1    # Spin(2n+1)
    if fam == "C":
        return n + 1        # Sp(n)
    if fam == "D":
        return 2 * n - 2    # Spin(2n)
    if fam == "E":
        return {6: 12, 7: 18, 8: 30}[n]
    return 9 if fam == "F" else 4


def group_name(dynkin: DynkinType) -> str:
    """Compact-group name of the simply connected form."""
    n = dynkin.rank
    return {
        "A": f"SU({n + 1})",
        "B": f"Spin({2 * n + 1})",
        "C": f"Sp({n})",
        "D": f"Spin({2 * n})",
        "E": f"E{n}",
        "F": "F4",
        "G": "G2",
    }[dynkin.family]


@dataclass(frozen=True)
class StabilityVerdict:
    """Whether |xi_i|^2 >= 8 n_G holds at one simple-root index."""

    index: int
    norm_sq: int
    holds_8nG: bool
    margin: int  # norm_sq - 8 n_G; >= 0 means the condition holds


def stability_condition(dynkin: DynkinType, i: int) -> StabilityVerdict:
    rs = enumerate_roots(dynkin)
    norm_sq = canonical_norm_sq(rs, {i})
    eight_ng = 8 * compute_n_G(dynkin)
    if eight_ng.denominator != 1:
        raise AssertionError(f"non-integral 8 n_G for {dynkin}: {eight_ng}")
    margin = norm_sq - int(eight_ng)
    return StabilityVerdict(index=i, norm_sq=norm_sq, holds_8nG=margin >= 0, margin=margin)


@dataclass(frozen=True)
class GroupClassification:
    """Full per-type report: cominuscule indices, verdicts, witness."""

    dynkin: DynkinType
    is_type_H: bool
    n_G: int
    cominuscule: frozenset[int]
    verdicts: tuple[StabilityVerdict, ...]
    lemma_witness: Optional[int]

    @property
    def failing_indices(self) -> tuple[int, ...]:
        return tuple(v.index for v in self.verdicts if not v.holds_8nG)


def classify(dynkin: DynkinType) -> GroupClassification:
    """Evaluate the stability condition at every cominuscule index.

    The witness, when some cominuscule index violates |xi_i|^2 >= 8 n_G, is
    the violating index of minimal norm (ties broken by smallest index); all
    violating indices remain listed in the verdicts.
    """
    rs = enumerate_roots(dynkin)
    comin = cominuscule_indices(rs)
    n_g = compute_n_G(dynkin)
    if n_g.denominator != 1:
        raise AssertionError(f"non-integral n_G for {dynkin}: {n_g}")
    verdicts = tuple(stability_condition(dynkin, i) for i in sorted(comin))
    failing = [v for v in verdicts if not v.holds_8nG]
    witness = min(failing, key=lambda v: (v.norm_sq, v.index)).index if failing else None
    return GroupClassification(
        dynkin=dynkin,
        is_type_H=bool(comin),
        n_G=int(n_g),
        cominuscule=comin,
        verdicts=verdicts,
        lemma_witness=witness,
    )
