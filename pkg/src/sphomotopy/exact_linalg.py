"""Deterministic exact linear algebra over the rationals.

Every kernel, image, complement and splitting in the package funnels
through the reduced row echelon form computed here. RREF is unique, so
all outputs are canonical: identical inputs give bit-identical results,
which is what makes the downstream constructions reproducible.

Matrices are stored sparsely (one ``{col: Fraction}`` dict per row); the
elimination itself runs in an integer kernel with a compiled variant,
selected at import.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

from .errors import NotInImage

if os.environ.get("SPHOMOTOPY_PURE"):
    from ._elim_py import echelon as _echelon

    BACKEND = "python"
else:  # compiled kernel is optional
    try:
        from ._elim_cy import echelon as _echelon

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build environment
        from ._elim_py import echelon as _echelon

        BACKEND = "python"


_ZERO = Fraction(0)


class RationalMatrix:
    """Sparse matrix with exact rational entries, acting on column vectors."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [{} for _ in range(nrows)]

    @classmethod
    def from_rows(cls, dense_rows, ncols=None):
        rows = []
        width = ncols
        for r in dense_rows:
            if isinstance(r, dict):
                rows.append({c: Fraction(v) for c, v in r.items() if v})
            else:
                r = list(r)
                width = len(r) if width is None else width
                rows.append({c: Fraction(v) for c, v in enumerate(r) if v})
        if width is None:
            raise ValueError("ncols required for dict rows")
        return cls(len(rows), width, rows)

    @classmethod
    def from_columns(cls, columns, nrows: int):
        rows = [{} for _ in range(nrows)]
        ncols = 0
        for j, col in enumerate(columns):
            ncols = j + 1
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                if v:
                    rows[i][j] = Fraction(v)
        return cls(nrows, ncols, rows)

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i].get(j, _ZERO)

    def to_dense(self):
        return [
            [self.rows[i].get(j, _ZERO) for j in range(self.ncols)]
            for i in range(self.nrows)
        ]

    def apply(self, vec) -> tuple:
        """Matrix times column vector."""
        out = []
        for row in self.rows:
            s = _ZERO
            for c, v in row.items():
                x = vec[c]
                if x:
                    s += v * x
            out.append(s)
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols}, nnz={sum(len(r) for r in self.rows)})"


def _int_rows(rows):
    """Clear denominators rowwise; kernel input. Stored zeros are dropped."""
    out = []
    for row in rows:
        cols = sorted(c for c in row if row[c])
        if not cols:
            continue
        den = lcm(*(row[c].denominator for c in cols))
        nums = [int(row[c] * den) for c in cols]
        out.append((cols, nums))
    return out


def _echelon_rows(rows):
    return _echelon(_int_rows(rows))


def rref(m: RationalMatrix):
    """Reduced row echelon form and its pivot columns.

    Zero rows are dropped from the result; ``len(pivots)`` is the rank.
    """
    pivots, rows = _echelon_rows(m.rows)
    return RationalMatrix(len(rows), m.ncols, rows), pivots


def rank(m: RationalMatrix) -> int:
    return len(_echelon_rows(m.rows)[0])


def kernel_basis(m: RationalMatrix):
    """Canonical null-space basis: one vector per free column, free entry 1.

    Empty list iff the matrix is injective on columns.
    """
    pivots, rows = _echelon_rows(m.rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        vec = [_ZERO] * m.ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v = rows[i].get(f)
            if v:
                vec[p] = -v
        basis.append(tuple(vec))
    return basis


def cokernel_complement_indices(image_gens, ambient_dim: int):
    """Non-pivot positions of the RREF of ``span(image_gens)``."""
    rows = []
    for g in image_gens:
        items = g.items() if isinstance(g, dict) else enumerate(g)
        rows.append({c: Fraction(v) for c, v in items if v})
    pivots, _ = _echelon_rows(rows)
    pivot_set = set(pivots)
    return [j for j in range(ambient_dim) if j not in pivot_set]


def cokernel_complement(image_gens, ambient_dim: int):
    """Standard basis vectors spanning a canonical complement of the image.

    The complement both represents the cokernel and splits the projection
    onto it.
    """
    out = []
    for j in cokernel_complement_indices(image_gens, ambient_dim):
        vec = [_ZERO] * ambient_dim
        vec[j] = Fraction(1)
        out.append(tuple(vec))
    return out


def _solve_augmented(m: RationalMatrix, bs):
    """RREF of [m | b_0 ... b_{k-1}]; returns (pivots, rows)."""
    rows = [dict(r) for r in m.rows]
    for k, b in enumerate(bs):
        col = m.ncols + k
        items = b.items() if isinstance(b, dict) else enumerate(b)
        for i, v in items:
            if v:
                if i >= m.nrows:
                    raise ValueError("right side longer than matrix height")
                rows[i][col] = Fraction(v)
    return _echelon_rows(rows)


def preimage_many(m: RationalMatrix, bs):
    """Solve ``m x = b`` for several right sides with one elimination.

    Free variables are set to zero, so the solution is canonical.
    Raises NotInImage if any right side is outside the column space.
    """
    bs = list(bs)
    pivots, rows = _solve_augmented(m, bs)
    # a row whose matrix part vanished expresses a functional that kills
    # the column space: any right side it touches is inconsistent
    null_rows = [i for i, p in enumerate(pivots) if p >= m.ncols]
    sols = []
    for k in range(len(bs)):
        col = m.ncols + k
        for i in null_rows:
            if rows[i].get(col):
                raise NotInImage(f"vector {k} not in the column space")
        vec = [_ZERO] * m.ncols
        for i, p in enumerate(pivots):
            if p < m.ncols:
                v = rows[i].get(col)
                if v:
                    vec[p] = v
        sols.append(tuple(vec))
    return sols


def preimage(m: RationalMatrix, b):
    """Canonical solution of ``m x = b`` (free variables zero)."""
    return preimage_many(m, [b])[0]
