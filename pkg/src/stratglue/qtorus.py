"""Quantum tori at a non-root-of-unity parameter and their centers.

Generators ``x_1..x_n`` satisfy ``x_i x_j = q^{M_ij} x_j x_i`` for an integer
skew-symmetric matrix ``M``.  A monomial ``x^v`` commutes with ``x_i`` up to the
factor ``q^{(Mv)_i}``, so with ``q`` not a root of unity it is central exactly
when ``Mv = 0``.  The center is the span of those monomials, a Laurent
polynomial ring on a basis of the integer kernel of ``M``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

IntMatrix = Tuple[Tuple[int, ...], ...]


def _as_matrix(M) -> IntMatrix:
    rows = tuple(tuple(int(x) for x in row) for row in M)
    for row, orig in zip(rows, M):
        if any(int(x) != x for x in orig):
            raise ValueError("matrix entries must be integers")
    return rows


def check_skew(M) -> bool:
    """True iff ``M`` is skew-symmetric with zero diagonal.

    Raises ValueError for a non-square matrix.
    """
    rows = _as_matrix(M)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError(f"matrix is not square: {[len(r) for r in rows]} columns for {n} rows")
    return all(rows[i][j] == -rows[j][i] for i in range(n) for j in range(n))


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows: echelon form, positive pivots, entries above each
    pivot reduced into ``[0, pivot)``.  Two row sets span the same lattice iff
    their HNFs agree.
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out: List[List[int]] = []
    col = 0
    while A and col < ncols:
        nz = [r for r in A if r[col] != 0]
        if not nz:
            col += 1
            continue
        # Euclid on column `col` among the remaining rows
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for k in range(ncols):
                    r[k] -= q * piv[k]
            nz = [r for r in nz if r[col] != 0]
        piv = nz[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        out.append(piv)
        A = [r for r in A if r is not piv and any(r)]
        col += 1
    # reduce above pivots
    for i, row in enumerate(out):
        p = next(k for k, x in enumerate(row) if x)
        for above in out[:i]:
            q = above[p] // row[p]
            if q:
                for k in range(ncols):
                    above[k] -= q * row[k]
    return [tuple(r) for r in out]


def integer_kernel(M) -> List[Tuple[int, ...]]:
    """Basis of ``{v in Z^n : M v = 0}``.

    Row-reduces ``[M^T | I]`` with unimodular integer operations; the identity
    parts of rows whose ``M^T`` part vanishes span the kernel.  The kernel of
    an integer matrix is always a saturated sublattice.
    """
    rows = _as_matrix(M)
    n = len(rows[0]) if rows else 0
    m = len(rows)
    aug = [[rows[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    done: List[List[int]] = []
    for col in range(m):
        nz = [r for r in aug if r[col] != 0]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for k in range(len(r)):
                    r[k] -= q * piv[k]
            nz = [r for r in nz if r[col] != 0]
        if nz:
            done.append(nz[0])
            aug = [r for r in aug if r is not nz[0]]
    return [tuple(r[m:]) for r in aug]


@dataclass(frozen=True)
class QTorus:
    matrix: IntMatrix
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        M = _as_matrix(self.matrix)
        object.__setattr__(self, "matrix", M)
        names = tuple(self.names) or tuple(f"x{i + 1}" for i in range(len(M)))
        object.__setattr__(self, "names", names)
        if len(names) != len(M):
            raise ValueError(f"{len(names)} names for a rank-{len(M)} torus")
        if not check_skew(M):
            raise ValueError("commutation matrix must be skew-symmetric with zero diagonal")

    @property
    def rank(self) -> int:
        return len(self.matrix)


def is_central_monomial(T: QTorus, v: Sequence[int]) -> bool:
    if len(v) != T.rank:
        raise ValueError(f"exponent vector of length {len(v)} for a rank-{T.rank} torus")
    return all(sum(a * b for a, b in zip(row, v)) == 0 for row in T.matrix)


@dataclass(frozen=True)
class CenterLattice:
    basis: Tuple[Tuple[int, ...], ...]
    names: Tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        """Integer-span membership, by reduction against the HNF basis."""
        v = list(v)
        for row in self.basis:
            p = next(k for k, x in enumerate(row) if x)
            if v[p] % row[p]:
                return False
            q = v[p] // row[p]
            v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def same_lattice(self, vectors: Sequence[Sequence[int]]) -> bool:
        """Unimodular equality with the lattice spanned by ``vectors``."""
        return tuple(hermite_normal_form(vectors)) == self.basis

    def monomials(self) -> List[str]:
        return [monomial_string(v, self.names) for v in self.basis]

    def to_json(self) -> dict:
        return {"names": list(self.names), "basis": [list(v) for v in self.basis],
                "monomials": self.monomials()}


def monomial_string(v: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for k, name in zip(v, names):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts) or "1"


def center_lattice(T: QTorus) -> CenterLattice:
    """Exponent lattice of the center of ``T``, as an HNF basis."""
    if not check_skew(T.matrix):
        raise ValueError("commutation matrix must be skew-symmetric")
    kernel = integer_kernel(T.matrix) if T.rank else []
    return CenterLattice(tuple(hermite_normal_form(kernel)), T.names)
