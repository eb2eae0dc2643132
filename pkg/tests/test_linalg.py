import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from grpder.field import FieldSpec
from grpder.linalg import (
    DimensionMismatch,
    Subspace,
    kernel,
    member,
    rank,
    rref,
    rref_with_pivots,
    solve,
    span,
    subspace_equal,
)

Q, F3, F5 = FieldSpec(0), FieldSpec(3), FieldSpec(5)
BIG = FieldSpec(2**61 - 1)


def sympy_rref(rows, p):
    m = sympy.Matrix(rows)
    if p == 0:
        r, piv = m.rref()
        return [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in row]
                for row in r.tolist()], list(piv)
    dm = sympy.polys.matrices.DomainMatrix.from_list_sympy(*m.shape, m.tolist()).convert_to(sympy.GF(p))
    r, piv = dm.rref()
    return [[int(x) % p for x in row] for row in r.to_Matrix().tolist()], list(piv)


def matrices(p, max_rows=6, max_cols=6):
    entry = st.integers(-4, 4) if p == 0 else st.integers(0, p - 1)
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


# -- worked examples --------------------------------------------------------


def test_rref_examples():
    assert rref([[0]], Q).tolist() == [[0]]
    assert rref([[1, 0], [0, 1]], Q).tolist() == [[1, 0], [0, 1]]
    assert rref([[2, 4], [1, 2]], Q).tolist() == [[1, 2], [0, 0]]


def test_kernel_examples():
    assert kernel(np.zeros((2, 3), dtype=object), Q).dim == 3
    assert kernel(np.eye(3, dtype=np.int64), Q).dim == 0
    k = kernel([[1, 2]], F3)
    assert k.dim == 1 and k.basis.tolist() == [[1, 1]]


def test_member_examples():
    s = span([[1, 0]], Q, 2)
    assert member(s, [0, 0])
    assert not member(s, [0, 1])
    assert member(span([[1, 1]], F3, 2), [2, 2])


def test_subspace_equal_examples():
    s = span([[1, 0]], Q, 2)
    assert subspace_equal(s, s)
    assert not subspace_equal(s, span([[0, 1]], Q, 2))
    assert subspace_equal(span([[1, 1], [1, 2]], Q, 2), Subspace.full(Q, 2))


# -- against sympy --------------------------------------------------------


@pytest.mark.parametrize("p", [0, 3, 5])
@given(data=st.data())
def test_rref_matches_sympy(p, data):
    rows = data.draw(matrices(p))
    fld = FieldSpec(p)
    ours, piv = rref_with_pivots(rows, fld)
    theirs, their_piv = sympy_rref(rows, p)
    assert [[fld(x) for x in row] for row in ours.tolist()] == theirs
    assert piv == their_piv


@pytest.mark.parametrize("p", [0, 3, 7, 2**61 - 1])
@given(data=st.data())
def test_rank_nullity(p, data):
    fld = FieldSpec(p)
    rows = data.draw(matrices(min(p, 50) if p else 0))
    ncols = len(rows[0])
    k = kernel(rows, fld)
    assert rank(rows, fld) + k.dim == ncols
    m = fld.array(rows)
    for v in k.basis:
        prod = m.dot(v) if not fld.fast else (m @ v) % fld.p
        assert all(fld.is_zero(x) for x in prod)


@pytest.mark.parametrize("p", [0, 5])
@given(data=st.data())
def test_rref_idempotent_and_canonical(p, data):
    fld = FieldSpec(p)
    rows = data.draw(matrices(p))
    r = rref(rows, fld)
    assert r.tolist() == rref(r, fld).tolist()
    # row operations do not change the canonical form
    rng = random.Random(len(rows))
    mixed = [list(row) for row in rows]
    if len(mixed) > 1:
        mixed[0] = [x + 2 * y for x, y in zip(mixed[0], mixed[1])]
    rng.shuffle(mixed)
    assert rref(mixed, fld).tolist() == r.tolist()


@pytest.mark.parametrize("p", [0, 3, 2**61 - 1])
@given(data=st.data())
def test_solve(p, data):
    fld = FieldSpec(p)
    rows = data.draw(matrices(min(p, 50) if p else 0))
    ncols = len(rows[0])
    entry = st.integers(-3, 3)
    x = [fld(v) for v in data.draw(st.lists(entry, min_size=ncols, max_size=ncols))]
    m = fld.array(rows)
    rhs = [sum((fld.mul(fld(m[i, j]), x[j]) for j in range(ncols)), fld.zero) for i in range(len(rows))]
    rhs = [fld(v) for v in rhs]
    sol = solve(rows, rhs, fld)
    assert sol is not None
    got = [fld(sum((fld.mul(fld(m[i, j]), sol[j]) for j in range(ncols)), fld.zero)) for i in range(len(rows))]
    assert got == rhs


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], [0, 1], Q) is None
    assert solve([[1, 1], [1, 1]], [0, 1], F3) is None


def test_solve_canonical_free_variables_zero():
    sol = solve([[1, 1]], [2], Q)
    assert list(sol) == [2, 0]


def test_subspace_sum_and_containment():
    a = span([[1, 0, 0]], Q, 3)
    b = span([[0, 1, 0]], Q, 3)
    s = a + b
    assert s.dim == 2 and a.is_subspace_of(s) and not s.is_subspace_of(a)
    assert [1, 5, 0] in s and [0, 0, 1] not in s
    assert s.coordinates([3, 4, 0]) == [3, 4]
    assert s.coordinates([0, 0, 1]) is None
    assert hash(s) == hash(span([[1, 1, 0], [1, -1, 0]], Q, 3))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        subspace_equal(Subspace.zero(Q, 2), Subspace.zero(Q, 3))
    with pytest.raises(DimensionMismatch):
        span([[1, 2, 3]], Q, 2)


def test_field_mismatch_is_rejected():
    with pytest.raises(ValueError):
        subspace_equal(Subspace.full(Q, 2), Subspace.full(F3, 2))


def test_large_prime_uses_exact_objects():
    p = 2**61 - 1
    r = rref([[p - 1, 2], [3, 4]], BIG)
    assert r.tolist() == [[1, 0], [0, 1]]
    assert kernel([[1, p - 1]], BIG).basis.tolist() == [[1, 1]]
