"""Exact root systems of the complex simple Lie algebras.

Roots are stored as integer coefficient vectors over a fixed set of simple
roots.  The numbering of the simple roots follows the L-basis conventions
for the classical families:

    A_n : alpha_i = L_i - L_{i+1}
    B_n : alpha_i = L_i - L_{i+1},  alpha_n = L_n
    C_n : alpha_i = L_i - L_{i+1},  alpha_n = 2 L_n
    D_n : alpha_i = L_i - L_{i+1},  alpha_n = L_{n-1} + L_n

and Bourbaki numbering for E_6, E_7, E_8, F_4, G_2.  The Cartan matrix is
row-normalized: entry (i, j) equals 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).

All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class DynkinType:
    """A simple Lie algebra family tag plus rank, e.g. DynkinType('C', 8)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.family == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError(f"E-family rank must be 6, 7 or 8, got {self.rank}")
            return
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f">= {lo}" if hi is None else f"= {lo}" if lo == hi else f"in [{lo}, {hi}]"
            raise ValueError(f"{self.family}-family rank must be {bound}, got {self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(label: str) -> "DynkinType":
        """Parse labels like 'A3', 'E8' or 'C 8'."""
        label = label.strip().replace(" ", "")
        if not label or label[0].upper() not in FAMILIES:
            raise ValueError(f"cannot parse Dynkin type from {label!r}")
        try:
            rank = int(label[1:])
        except ValueError as exc:
            raise ValueError(f"cannot parse rank from {label!r}") from exc
        return DynkinType(label[0].upper(), rank)


@dataclass(frozen=True)
class Root:
    """A root as an integer coefficient vector over the simple roots."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not any(self.coeffs):
            raise ValueError("the zero vector is not a root")
        pos = any(c > 0 for c in self.coeffs)
        neg = any(c < 0 for c in self.coeffs)
        if pos and neg:
            raise ValueError(f"mixed-sign coefficient vector is not a root: {self.coeffs}")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def sort_key(self) -> tuple:
        return (self.height, self.coeffs)


def _root_order(roots: Iterable[Root]) -> tuple[Root, ...]:
    """Canonical (height, lexicographic) ordering, for deterministic output."""
    return tuple(sorted(roots, key=Root.sort_key))


@dataclass(frozen=True)
class RootSystem:
    """All roots of a simple Lie algebra, plus its Cartan matrix."""

    dynkin: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    all_roots: tuple[Root, ...] = field(init=False)

    def __post_init__(self) -> None:
        negatives = tuple(-r for r in self.positive_roots)
        object.__setattr__(self, "all_roots", _root_order(negatives) + self.positive_roots)

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        """The height-1 roots, ordered alpha_1 .. alpha_rank."""
        units = [r for r in self.positive_roots if r.height == 1]
        return tuple(sorted(units, key=lambda r: r.coeffs.index(1)))

    def root_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.coeffs for r in self.all_roots)


def cartan_matrix(dynkin: DynkinType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of a simple type under the declared numbering.

    Row-normalized convention: entry (i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
    so the pairing of a root with the i-th coroot is row i dotted with the
    root's coefficient vector.
    """
    n = dynkin.rank
    fam = dynkin.family
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2

    def bond(i: int, j: int, down: int = -1, up: int = -1) -> None:
        # zero-based; down = entry (i, j), up = entry (j, i)
        m[i][j] = down
        m[j][i] = up

    if fam in ("A", "B", "C", "D"):
        chain = n - 1 if fam in ("A", "B", "C") else n - 2
        for i in range(chain):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            # alpha_{n-1} long, alpha_n short
            bond(n - 2, n - 1, down=-1, up=-2)
        elif fam == "C" and n >= 2:
            # alpha_{n-1} short, alpha_n long
            bond(n - 2, n - 1, down=-2, up=-1)
        elif fam == "D":
            bond(n - 3, n - 1)
    elif fam == "E":
        # Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4
        for i, j in zip((0, 2, 3, 4, 5, 6), (2, 3, 4, 5, 6, 7)):
            if j < n:
                bond(i, j)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, down=-1, up=-2)  # alpha_2 long, alpha_3 short
        bond(2, 3)
    else:  # G
        bond(0, 1, down=-3, up=-1)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in m)


def _coroot_pairing(cartan: tuple[tuple[int, ...], ...], coeffs: tuple[int, ...], i: int) -> int:
    """Pairing <beta, alpha_i^vee> of beta (given by coeffs) with the i-th coroot."""
    return sum(a * c for a, c in zip(cartan[i], coeffs))


@lru_cache(maxsize=None)
def enumerate_roots(dynkin: DynkinType) -> RootSystem:
    """Enumerate all roots by height-ascending closure with root strings.

    Starting from the simple roots, beta + alpha_i is a root iff the alpha_i
    string through beta goes further up, i.e. p - <beta, alpha_i^vee> > 0
    where p counts how far the string descends inside the positive roots.
    One pass per height level covers every simple type uniformly.
    """
    n = dynkin.rank
    cartan = cartan_matrix(dynkin)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known: set[tuple[int, ...]] = set(simple)
    frontier = list(simple)
    while frontier:
        next_frontier: list[tuple[int, ...]] = []
        for beta in frontier:
            for i in range(n):
                if beta == simple[i]:
                    continue  # 2 alpha_i is never a root in a reduced system
                p = 0
                down = beta
                while True:
                    down = tuple(c - s for c, s in zip(down, simple[i]))
                    if down in known:
                        p += 1
                    else:
                        break
                if p - _coroot_pairing(cartan, beta, i) > 0:
                    up = tuple(c + s for c, s in zip(beta, simple[i]))
                    if up not in known:
                        known.add(up)
                        next_frontier.append(up)
        frontier = next_frontier
    positives = _root_order(Root(c) for c in known)
    return RootSystem(dynkin=dynkin, cartan=cartan, positive_roots=positives)


def highest_root(rs: RootSystem) -> Root:
    """The unique positive root dominating every other one coefficientwise."""
    top = rs.positive_roots[-1]  # canonical order puts maximal height last
    for r in rs.positive_roots:
        if any(c > t for c, t in zip(r.coeffs, top.coeffs)):
            raise AssertionError(f"no coefficientwise-maximal root in {rs.dynkin}")
    return top


def n_I(root: Root, I: Iterable[int]) -> int:
    """Sum of the root's coefficients over the (1-based) index set I."""
    idx = _check_index_set(I, len(root.coeffs))
    return sum(root.coeffs[i - 1] for i in idx)


def _check_index_set(I: Iterable[int], rank: int) -> frozenset[int]:
    idx = frozenset(I)
    for i in idx:
        if not 1 <= i <= rank:
            raise ValueError(f"index {i} out of range 1..{rank}")
    return idx


def parabolic_grading(rs: RootSystem, I: Iterable[int]) -> dict[int, tuple[Root, ...]]:
    """Partition all roots by their n_I value.

    Returns {level: roots at that level}; level 0 is always present (it also
    houses the Cartan subalgebra, which is not listed as roots).
    """
    idx = _check_index_set(I, rs.rank)
    levels: dict[int, list[Root]] = {0: []}
    for r in rs.all_roots:
        levels.setdefault(n_I(r, idx), []).append(r)
    return {k: _root_order(v) for k, v in sorted(levels.items())}


def cominuscule_indices(rs: RootSystem) -> frozenset[int]:
    """1-based simple-root indices with coefficient exactly 1 in the highest root."""
    top = highest_root(rs)
    return frozenset(i + 1 for i, c in enumerate(top.coeffs) if c == 1)


def simple_types(max_rank: int, families: Iterable[str] = FAMILIES) -> list[DynkinType]:
    """All valid simple types with rank <= max_rank, deterministically ordered."""
    if max_rank < 1:
        raise ValueError(f"max_rank must be >= 1, got {max_rank}")
    out: list[DynkinType] = []
    for fam in FAMILIES:
        if fam not in families:
            continue
        if fam == "E":
            ranks: Iterable[int] = (r for r in (6, 7, 8) if r <= max_rank)
        else:
            lo, hi = _RANK_BOUNDS[fam]
            ranks = range(lo, min(max_rank, hi if hi is not None else max_rank) + 1)
        out.extend(DynkinType(fam, r) for r in ranks)
    return out
