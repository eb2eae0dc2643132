"""The closed-form listings against the computed objects.

Known discrepancies are pinned down exactly so that a change in either the
listings or the solvers shows up here.
"""

import pytest

from grpder.algebra import GroupAlgebra
from grpder.derivation import derivation_space_oracle, inner_span, is_derivation_pair, listed_basis
from grpder.explicit import (
    coprime_listing,
    coprime_listing_parity_split,
    expected_class_count,
    listed_inner_generators,
    modular_listing,
)
from grpder.field import FieldSpec
from grpder.group import GroupParams
from grpder.linalg import Subspace
from grpder.verify import _swap_reading

COPRIME = [(1, 0), (3, 0), (5, 0), (2, 0), (4, 0), (6, 0), (2, 3), (3, 5), (4, 7)]
MODULAR = [(3, 3), (5, 5), (6, 3)]


def span_of(pairs, field, dim):
    return Subspace.from_rows([p.images.to_vector() if hasattr(p, "images") else p.to_vector() for p in pairs],
                              field, 2 * dim)


@pytest.mark.parametrize("n", range(1, 7))
def test_class_count_formula(n):
    assert expected_class_count(n) == (2 * n + 6 if n % 2 == 0 else 2 * n + 3)


@pytest.mark.parametrize("n,p", COPRIME)
def test_coprime_listing_vectors_are_derivations(n, p):
    params, field = GroupParams(n), FieldSpec(p)
    checked = listed_basis(params, field)
    assert all(c.valid for c in checked)
    oracle = derivation_space_oracle(params, field).space
    assert len(checked) == oracle.dim
    assert span_of(checked, field, params.order).is_subspace_of(oracle)


@pytest.mark.parametrize("n,p", COPRIME)
def test_coprime_listing_repeats_one_vector_per_b3_index(n, p):
    # the second B3 pair equals the second B2 pair with the same k
    params, field = GroupParams(n), FieldSpec(p)
    alg = GroupAlgebra(params, field)
    listing = coprime_listing(alg)
    b2 = {lp.k: lp for lp in listing if lp.family == "B2" and lp.slot == 2}
    b3 = {lp.k: lp for lp in listing if lp.family == "B3" and lp.slot == 2}
    for k, lp in b3.items():
        assert (lp.da, lp.db) == (b2[k].da, b2[k].db)
    rank = span_of(listed_basis(params, field), field, params.order).dim
    assert rank == len(listing) - len(b3)


@pytest.mark.parametrize("n,p", COPRIME)
def test_parity_split_listing_spans_oracle(n, p):
    params, field = GroupParams(n), FieldSpec(p)
    split = listed_basis(params, field, source="parity_split")
    oracle = derivation_space_oracle(params, field).space
    assert all(c.valid for c in split)
    assert len(split) == oracle.dim
    assert span_of(split, field, params.order) == oracle


@pytest.mark.parametrize("n,p", MODULAR)
def test_modular_listing_known_failures(n, p):
    params, field = GroupParams(n), FieldSpec(p)
    checked = listed_basis(params, field)
    failed = [c for c in checked if not c.valid]
    assert [(c.listed.family, c.listed.slot) for c in failed] == [("B2'", 1)] * ((n + 1) // 2)
    for c in failed:
        assert c.failing == ("a^2n", "(ba)^2", "(b^-1a)^2")
    oracle = derivation_space_oracle(params, field).space
    assert len(checked) == oracle.dim
    valid = [c for c in checked if c.valid]
    assert span_of(valid, field, params.order).is_subspace_of(oracle)


@pytest.mark.parametrize("n,p", MODULAR)
def test_modular_listing_with_b_placement_swapped(n, p):
    params, field = GroupParams(n), FieldSpec(p)
    alg = GroupAlgebra(params, field)
    repaired = [_swap_reading(c, alg) if not c.valid else c.images for c in listed_basis(params, field)]
    assert all(is_derivation_pair(r) for r in repaired)
    oracle = derivation_space_oracle(params, field).space
    assert span_of(repaired, field, params.order) == oracle


@pytest.mark.parametrize("n", range(1, 7))
def test_listed_inner_generators_span_inner_space(n):
    params = GroupParams(n)
    for p in (0, 3):
        field = FieldSpec(p)
        gens = listed_inner_generators(params)
        assert len(gens) == inner_span(params, field).dim
        assert inner_span(params, field, gens) == inner_span(params, field)


def test_listing_sizes_follow_index_ranges():
    for n in range(1, 7):
        alg = GroupAlgebra(GroupParams(n), FieldSpec(0))
        size = 6 * ((n - 1) // 2) + 2 * ((n + 1) // 2) + 2 * (n // 2) + n
        assert len(coprime_listing(alg)) == size
        assert len(coprime_listing_parity_split(alg)) == (3 * (2 * n - 1) if n % 2 else 6 * (n - 1))
        mod = GroupAlgebra(GroupParams(n), FieldSpec(3))
        assert len(modular_listing(mod)) == 8 * ((n - 1) // 2) + 2 * ((n + 1) // 2) + 2 * (n // 2) + 2 * n
