"""Exact linear algebra over a :class:`~grpder.field.FieldSpec`.

Matrices are 2-D numpy arrays: ``int64`` residues for small primes, object
arrays of ``Fraction`` (or big residues) otherwise.  Row reduction is the
textbook Gauss-Jordan sweep with the first nonzero row as pivot, so the
output is the canonical reduced row echelon form.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .field import FieldSpec


class DimensionMismatch(ValueError):
    pass


def as_matrix(m, fld: FieldSpec) -> np.ndarray:
    arr = m if isinstance(m, np.ndarray) else np.array(m, dtype=object)
    if arr.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    return fld.reduce(arr)


def _rref_generic(a: np.ndarray, fld: FieldSpec) -> tuple[np.ndarray, list[int]]:
    rows, cols = a.shape
    mat = [list(a[i]) for i in range(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = next((i for i in range(r, rows) if not fld.is_zero(mat[i][c])), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = fld.inv(mat[r][c])
        prow = mat[r]
        support = [k for k in range(c, cols) if not fld.is_zero(prow[k])]
        for k in support:
            prow[k] = fld.mul(prow[k], inv)
        for i in range(rows):
            if i == r:
                continue
            f = mat[i][c]
            if fld.is_zero(f):
                continue
            row = mat[i]
            for k in support:
                row[k] = fld.sub(row[k], fld.mul(f, prow[k]))
        pivots.append(c)
        r += 1
    out = fld.zeros((rows, cols))
    for i in range(rows):
        for k in range(cols):
            out[i, k] = mat[i][k]
    return out, pivots


def rref_with_pivots(m, fld: FieldSpec) -> tuple[np.ndarray, list[int]]:
    a = as_matrix(m, fld)
    if a.size == 0:
        return a.copy(), []
    if fld.fast:
        reduced, piv = _kernels.rref_mod_p(a, fld.p)
        return reduced, [int(c) for c in piv]
    return _rref_generic(a, fld)


def rref(m, fld: FieldSpec) -> np.ndarray:
    """Canonical reduced row echelon form (same shape as ``m``)."""
    return rref_with_pivots(m, fld)[0]


def rank(m, fld: FieldSpec) -> int:
    return len(rref_with_pivots(m, fld)[1])


def kernel(m, fld: FieldSpec) -> "Subspace":
    """Right null space ``{v : m v = 0}`` as a canonical subspace."""
    a = as_matrix(m, fld)
    cols = a.shape[1]
    reduced, pivots = rref_with_pivots(a, fld)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = fld.zeros((len(free), cols))
    for t, f in enumerate(free):
        basis[t, f] = fld.one
        for r, pc in enumerate(pivots):
            basis[t, pc] = fld.neg(reduced[r, f])
    # free-column vectors are already independent; rref gives canonical order
    return Subspace.from_rows(basis, fld, cols)


@dataclass(frozen=True, eq=False)
class Subspace:
    """Row space of ``basis``, kept in canonical RREF with no zero rows."""

    field: FieldSpec
    ambient_dim: int
    basis: np.ndarray = dc_field(repr=False)
    pivots: tuple[int, ...] = ()

    @classmethod
    def from_rows(cls, rows, fld: FieldSpec, ambient_dim: int) -> "Subspace":
        if isinstance(rows, np.ndarray) and rows.ndim == 2:
            a = rows
        else:
            rows = list(rows)
            a = fld.zeros((len(rows), ambient_dim))
            for i, v in enumerate(rows):
                v = v if isinstance(v, np.ndarray) else np.array(v, dtype=object)
                if v.shape != (ambient_dim,):
                    raise DimensionMismatch(f"vector of length {v.shape} in ambient dimension {ambient_dim}")
                a[i] = fld.reduce(v)
        if a.shape[0] == 0:
            return cls(fld, ambient_dim, fld.zeros((0, ambient_dim)), ())
        if a.shape[1] != ambient_dim:
            raise DimensionMismatch(f"rows of width {a.shape[1]} in ambient dimension {ambient_dim}")
        reduced, pivots = rref_with_pivots(a, fld)
        basis = reduced[: len(pivots)].copy()
        basis.setflags(write=False)
        return cls(fld, ambient_dim, basis, tuple(pivots))

    @classmethod
    def zero(cls, fld: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls.from_rows([], fld, ambient_dim)

    @classmethod
    def full(cls, fld: FieldSpec, ambient_dim: int) -> "Subspace":
        eye = fld.zeros((ambient_dim, ambient_dim))
        for i in range(ambient_dim):
            eye[i, i] = fld.one
        return cls.from_rows(eye, fld, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def _check(self, other_dim: int) -> None:
        if other_dim != self.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions differ: {self.ambient_dim} vs {other_dim}")

    def coordinates(self, v) -> list | None:
        """Coefficients of ``v`` in the basis rows, or None if ``v`` is outside."""
        fld = self.field
        v = v if isinstance(v, np.ndarray) else np.array(v, dtype=object)
        self._check(v.shape[0])
        w = fld.reduce(v)
        # against an RREF basis, the coordinates are the pivot entries
        coords = [w[c] for c in self.pivots]
        residual = w.copy()
        for r, cf in enumerate(coords):
            if fld.is_zero(cf):
                continue
            if fld.fast:
                residual = (residual - cf * self.basis[r]) % fld.p
            else:
                residual = np.array([fld.sub(x, fld.mul(cf, y)) for x, y in zip(residual, self.basis[r])], dtype=object)
        if any(not fld.is_zero(x) for x in residual):
            return None
        return [fld(c) for c in coords]

    def member(self, v) -> bool:
        return self.coordinates(v) is not None

    __contains__ = member

    def _check_peer(self, other: "Subspace") -> None:
        self._check(other.ambient_dim)
        if self.field != other.field:
            raise ValueError(f"subspaces over different fields: {self.field} vs {other.field}")

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check_peer(other)
        return all(other.member(row) for row in self.basis)

    def equals(self, other: "Subspace") -> bool:
        """Identical canonical bases."""
        self._check_peer(other)
        if self.pivots != other.pivots:
            return False
        return bool(np.array_equal(self.basis, other.basis))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.field == other.field and self.equals(other)

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.pivots))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_peer(other)
        return Subspace.from_rows(list(self.basis) + list(other.basis), self.field, self.ambient_dim)

    def __repr__(self) -> str:
        return f"Subspace({self.field}, dim={self.dim}, ambient={self.ambient_dim})"


def member(s: Subspace, v) -> bool:
    return s.member(v)


def subspace_equal(s1: Subspace, s2: Subspace) -> bool:
    return s1.equals(s2)


def span(vectors: Iterable[Sequence], fld: FieldSpec, ambient_dim: int) -> Subspace:
    return Subspace.from_rows(list(vectors), fld, ambient_dim)


def solve(m, rhs, fld: FieldSpec):
    """Canonical solution of ``m x = rhs`` (free variables set to zero), or None."""
    a = as_matrix(m, fld)
    rows, cols = a.shape
    b = fld.reduce(rhs)
    aug = fld.zeros((rows, cols + 1))
    aug[:, :cols] = a
    aug[:, cols] = b
    reduced, pivots = rref_with_pivots(aug, fld)
    if cols in pivots:
        return None
    x = fld.zeros(cols)
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r, cols]
    return x
