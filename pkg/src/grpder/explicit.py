"""Closed-form sets for the order-8n group, transcribed term by term.

Nothing here is trusted: conjugacy classes, anti-centralizers and derivation
spaces are all recomputed elsewhere, and these listings are compared against
the computed objects.  Index ranges (floors and ceilings) are kept exactly
as written, and negative exponents are reduced to normal form on
construction.  A listed vector that turns out to be wrong is still returned;
the verification layer reports it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import AlgebraElement, GroupAlgebra
from .field import FieldSpec
from .group import GroupElement, GroupParams


def _floor_half(m: int) -> int:
    return m // 2


def _ceil_half(m: int) -> int:
    return -(-m // 2)


# ---------------------------------------------------------------------------
# conjugacy classes
# ---------------------------------------------------------------------------


def listed_conjugacy_classes(params: GroupParams) -> list[frozenset]:
    """Explicit class lists, split on the parity of ``n``."""
    n = params.n
    e = params.element
    out: list[set[GroupElement]] = [{e(0, 0)}]
    if n % 2 == 0:
        out += [{e(n, 0)}, {e(0, 2)}, {e(n, 2)}]
        out += [{e(2 * k, 0), e(-2 * k, 0)} for k in range(1, n // 2)]
        out += [{e(2 * k - 1, 0), e(-2 * k + 1, 2)} for k in range(1, n + 1)]
        out += [{e(2 * k, 2), e(-2 * k, 2)} for k in range(1, n // 2)]
        ks = range(1, n // 2 + 1)
        out.append({e(4 * k, 1) for k in ks} | {e(4 * k + 2, -1) for k in ks})
        out.append({e(4 * k + 1, 1) for k in ks} | {e(4 * k + 3, -1) for k in ks})
        out.append({e(4 * k + 2, 1) for k in ks} | {e(4 * k, -1) for k in ks})
        out.append({e(4 * k + 3, 1) for k in ks} | {e(4 * k + 1, -1) for k in ks})
    else:
        out.append({e(0, 2)})
        out += [{e(2 * k, 0), e(-2 * k, 0)} for k in range(1, (n - 1) // 2 + 1)]
        out += [{e(2 * k - 1, 0), e(-2 * k + 1, 2)} for k in range(1, n + 1)]
        out += [{e(2 * k, 2), e(-2 * k, 2)} for k in range(1, (n - 1) // 2 + 1)]
        ks = range(1, n + 1)
        out.append({e(2 * k, 1) for k in ks} | {e(2 * k, -1) for k in ks})
        out.append({e(2 * k + 1, 1) for k in ks} | {e(2 * k + 1, -1) for k in ks})
    return [frozenset(c) for c in out]


def expected_class_count(n: int) -> int:
    return 2 * n + 6 if n % 2 == 0 else 2 * n + 3


# ---------------------------------------------------------------------------
# anti-centralizer bases
# ---------------------------------------------------------------------------


class _Terms:
    """Shorthand ``t(i, j)`` for the basis element ``a^i b^j``."""

    def __init__(self, alg: GroupAlgebra):
        self.alg = alg

    def __call__(self, i: int, j: int = 0) -> AlgebraElement:
        return self.alg.basis_element(i, j)


def anticentralizer_basis_b(alg: GroupAlgebra) -> list[AlgebraElement]:
    """Listed basis of the anti-centralizer of ``b``."""
    n, t = alg.params.n, _Terms(alg)
    out = []
    for k in range(1, _floor_half(n - 1) + 1):
        for j in range(4):
            out.append((t(2 * k) - t(-2 * k)) * t(0, j))
    for k in range(1, _floor_half(n + 1) + 1):
        x = t(2 * k - 1) - t(-(2 * k - 1), 2)
        out += [x, x * t(0, 1)]
    for k in range(1, _ceil_half(n - 1) + 1):
        x = t(-(2 * k - 1)) - t(2 * k - 1, 2)
        out += [x, x * t(0, 1)]
    return out


def anticentralizer_basis_a_inv_b(alg: GroupAlgebra) -> list[AlgebraElement]:
    """Listed basis of the anti-centralizer of ``a^-1 b``."""
    n, t = alg.params.n, _Terms(alg)
    out = []
    for k in range(1, _floor_half(n - 1) + 1):
        even = t(2 * k) - t(-2 * k)
        odd = t(2 * k - 1) - t(-(2 * k + 1))
        out += [even, even * t(0, 2), odd * t(0, 1), odd * t(0, 3)]
    for k in range(1, n + 1):
        out += [t(2 * k - 1) - t(-(2 * k - 1), 2), (t(2 * k - 2) - t(-2 * k, 2)) * t(0, 1)]
    return out


ANTICENTRALIZER_BASES: dict[str, Callable[[GroupAlgebra], list[AlgebraElement]]] = {
    "b": anticentralizer_basis_b,
    "a_inv_b": anticentralizer_basis_a_inv_b,
}


def listed_anticentralizer_basis(which: str, params: GroupParams, field: FieldSpec) -> list[AlgebraElement]:
    """Listed anti-centralizer basis for ``which`` in {"b", "a_inv_b"}."""
    try:
        build = ANTICENTRALIZER_BASES[which]
    except KeyError:
        raise ValueError(f"which must be one of {sorted(ANTICENTRALIZER_BASES)}, got {which!r}") from None
    return build(GroupAlgebra(params, field))


# ---------------------------------------------------------------------------
# derivation bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ListedPair:
    """One listed generator-image pair with its position in the listing."""

    family: str
    k: int
    slot: int
    da: AlgebraElement
    db: AlgebraElement

    @property
    def label(self) -> str:
        return f"{self.family}[k={self.k},#{self.slot}]"


def _collect(family: str, k: int, pairs, sink: list[ListedPair]) -> None:
    for slot, (da, db) in enumerate(pairs, start=1):
        sink.append(ListedPair(family, k, slot, da, db))


def coprime_listing(alg: GroupAlgebra) -> list[ListedPair]:
    """Pairs B1..B4 for characteristic 0 or p not dividing n."""
    n, t, z = alg.params.n, _Terms(alg), alg.zero
    b, b2, b3 = t(0, 1), t(0, 2), t(0, 3)
    out: list[ListedPair] = []
    for k in range(1, _floor_half(n - 1) + 1):
        ev = t(2 * k) - t(-2 * k)
        ev_neg = t(-2 * k) - t(2 * k)
        od = t(2 * k - 1) - t(-(2 * k + 1))
        _collect("B1", k, [
            (ev_neg * b, z),
            (od * b, ev),
            (ev_neg * b3, z),
            (od * b3, ev * b2),
            (z, ev * b),
            (z, ev * b3),
        ], out)
    for k in range(1, _floor_half(n + 1) + 1):
        _collect("B2", k, [
            ((t(2 * k - 2) - t(-2 * k, 2)) * b, t(2 * k - 1) - t(-(2 * k - 1), 2)),
            (z, (t(-(2 * k - 1)) - t(2 * k - 1, 2)) * b),
        ], out)
    for k in range(1, _ceil_half(n - 1) + 1):
        _collect("B3", k, [
            ((t(-2 * k) - t(2 * k - 2, 2)) * b, t(-(2 * k - 1)) - t(2 * k - 1, 2)),
            (z, (t(-(2 * k - 1)) - t(2 * k - 1, 2)) * b),
        ], out)
    for k in range(1, n + 1):
        _collect("B4", k, [((t(-(2 * k - 1)) - t(2 * k - 1, 2)) * b, z)], out)
    return out


def coprime_listing_parity_split(alg: GroupAlgebra) -> list[ListedPair]:
    """The coprime-case basis regrouped by the parity of n (families Bo*/Be*).

    It differs from :func:`coprime_listing` in the second B2 pair, whose
    ``d(b)`` is ``(a^(2k-1) - a^-(2k-1) b^2) b`` here.
    """
    n, t, z = alg.params.n, _Terms(alg), alg.zero
    b, b2, b3 = t(0, 1), t(0, 2), t(0, 3)
    out: list[ListedPair] = []

    def six(k: int):
        ev = t(2 * k) - t(-2 * k)
        ev_neg = t(-2 * k) - t(2 * k)
        od = t(2 * k - 1) - t(-(2 * k + 1))
        return [(ev_neg * b, z), (od * b, ev), (ev_neg * b3, z), (od * b3, ev * b2), (z, ev * b), (z, ev * b3)]

    def plus_pair(k: int):
        return ((t(2 * k - 2) - t(-2 * k, 2)) * b, t(2 * k - 1) - t(-(2 * k - 1), 2))

    def minus_pair(k: int):
        return ((t(-2 * k) - t(2 * k - 2, 2)) * b, t(-(2 * k - 1)) - t(2 * k - 1, 2))

    def plus_b(k: int):
        return (z, (t(2 * k - 1) - t(-(2 * k - 1), 2)) * b)

    def minus_b(k: int):
        return (z, (t(-(2 * k - 1)) - t(2 * k - 1, 2)) * b)

    if n % 2:
        for k in range(1, (n - 1) // 2 + 1):
            _collect("Bo1", k, six(k) + [minus_pair(k), minus_b(k)], out)
        for k in range(1, (n + 1) // 2 + 1):
            _collect("Bo2", k, [plus_pair(k), plus_b(k)], out)
        family = "Bo3"
    else:
        for k in range(1, n // 2):
            _collect("Be1", k, six(k), out)
        for k in range(1, n // 2 + 1):
            _collect("Be2", k, [plus_pair(k), minus_pair(k), plus_b(k), minus_b(k)], out)
        family = "Be3"
    for k in range(1, n + 1):
        _collect(family, k, [((t(-(2 * k - 1)) - t(2 * k - 1, 2)) * b, z)], out)
    return out


def modular_listing(alg: GroupAlgebra) -> list[ListedPair]:
    """Pairs B1'..B4' for characteristic p dividing n, term by term."""
    n, t, z = alg.params.n, _Terms(alg), alg.zero
    b, b2, b3 = t(0, 1), t(0, 2), t(0, 3)
    out: list[ListedPair] = []
    for k in range(1, _floor_half(n - 1) + 1):
        ev = t(2 * k) - t(-2 * k)
        ev_neg = t(-2 * k) - t(2 * k)
        od = t(2 * k - 1) - t(-(2 * k + 1))
        od_up = t(2 * k + 1) - t(-(2 * k - 1))
        od_up_neg = t(-(2 * k - 1)) - t(2 * k + 1)
        _collect("B1'", k, [
            (od * b, ev),
            (od_up, ev * b),
            (od * b3, ev * b2),
            (od_up * b2, ev * b3),
            (ev_neg * b3, z),
            (ev_neg * b, z),
            (od_up_neg * b2, z),
            (od_up_neg, z),
        ], out)
    for k in range(1, _floor_half(n + 1) + 1):
        _collect("B2'", k, [
            ((t(2 * k - 2) - t(-2 * k, 1)) * b2, t(2 * k - 1) - t(-(2 * k - 1), 2)),
            (t(2 * k) - t(-(2 * k - 2), 2), (t(2 * k - 1) - t(-(2 * k - 1), 2)) * b),
        ], out)
    for k in range(1, _ceil_half(n - 1) + 1):
        _collect("B3'", k, [
            ((t(-2 * k) - t(2 * k - 2, 2)) * b, t(-(2 * k - 1)) - t(2 * k - 1, 2)),
            (t(-(2 * k - 2)) - t(2 * k, 2), (t(-(2 * k - 1)) - t(2 * k - 1, 2)) * b),
        ], out)
    for k in range(1, n + 1):
        _collect("B4'", k, [
            ((t(-(2 * k - 1)) - t(2 * k - 1, 2)) * b, z),
            (t(-(2 * k - 2)) - t(2 * k, 2), z),
        ], out)
    return out


def expected_derivation_dim(n: int, characteristic: int) -> int:
    if characteristic and n % characteristic == 0:
        return 4 * (2 * n - 1) if n % 2 else 8 * (n - 1)
    return 3 * (2 * n - 1) if n % 2 else 6 * (n - 1)


def expected_inner_dim(n: int) -> int:
    return 3 * (2 * n - 1) if n % 2 else 6 * (n - 1)


# ---------------------------------------------------------------------------
# inner-derivation generators
# ---------------------------------------------------------------------------


def listed_inner_generators(params: GroupParams) -> list[GroupElement]:
    """Group elements g whose inner derivations d_g form the listed inner basis."""
    n, e = params.n, params.element
    gs: list[GroupElement] = []
    if n % 2 == 0:
        for k in range(1, n // 2):
            gs += [e(2 * k), e(2 * k, 2), e(4 * k, -1), e(4 * k + 1, -1), e(4 * k + 2, -1), e(4 * k + 3, -1)]
        gs += [e(2 * k - 1) for k in range(1, n + 1)]
        for k in range(1, n // 2 + 1):
            gs += [e(4 * k, 1), e(4 * k + 1, 1), e(4 * k + 2, 1), e(4 * k + 3, 1)]
    else:
        for k in range(1, (n - 1) // 2 + 1):
            gs += [e(2 * k), e(2 * k, 2)]
        for k in range(1, n + 1):
            gs += [e(2 * k - 1), e(2 * k, 1), e(2 * k + 1, 1)]
        for k in range(1, n):
            gs += [e(2 * k, -1), e(2 * k + 1, -1)]
    return gs
