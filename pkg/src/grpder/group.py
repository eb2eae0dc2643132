"""The group of order 8n presented by

    < a, b | a^(2n) = b^4 = 1, ba = a^-1 b^-1, b^-1 a = a^-1 b >.

Every element has a unique normal form ``a^i b^j`` with ``0 <= i < 2n`` and
``0 <= j < 4``.  Moving a power of ``a`` past a power of ``b`` uses

    b^j a^i = a^i b^j                          (j even)
    b^j a^i = a^(-i) b^(j + 2 (i mod 2))       (j odd)

which follows from the two relators by induction on ``i``; the test-suite
re-derives it by rewriting letter sequences with the relators alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

import numpy as np


class GroupElement(NamedTuple):
    """Normal form ``a^i b^j``.  Ordering is lexicographic in ``(i, j)``."""

    i: int
    j: int

    def __str__(self) -> str:
        parts = []
        if self.i:
            parts.append(f"a^{self.i}")
        if self.j:
            parts.append(f"b^{self.j}")
        return "*".join(parts) or "1"

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j}


IDENTITY = GroupElement(0, 0)

_FACTOR = re.compile(r"^\s*([ab])\s*(?:\^\s*\(?\s*([+-]?\d+)\s*\)?)?\s*$")


@dataclass(frozen=True)
class ConjugacyClass:
    representative: GroupElement
    members: frozenset

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: object) -> bool:
        return g in self.members


@dataclass(frozen=True)
class GroupParams:
    """The group of order ``8n``; every group operation lives here."""

    n: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def order(self) -> int:
        return 8 * self.n

    @property
    def a_order(self) -> int:
        return 2 * self.n

    # -- elements ---------------------------------------------------------

    def element(self, i: int = 0, j: int = 0) -> GroupElement:
        """Normal form of ``a^i b^j`` for arbitrary integer exponents."""
        return GroupElement(i % self.a_order, j % 4)

    def normalize(self, g) -> GroupElement:
        if isinstance(g, dict):
            return self.element(int(g["i"]), int(g["j"]))
        return self.element(*g)

    @property
    def identity(self) -> GroupElement:
        return IDENTITY

    @property
    def a(self) -> GroupElement:
        return self.element(1, 0)

    @property
    def b(self) -> GroupElement:
        return self.element(0, 1)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        """All elements in lexicographic ``(i, j)`` order; this fixes vector layouts."""
        return tuple(GroupElement(i, j) for i in range(self.a_order) for j in range(4))

    def index(self, g: GroupElement) -> int:
        return 4 * g.i + g.j

    # -- arithmetic -------------------------------------------------------

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        if g.j % 2 == 0:
            return GroupElement((g.i + h.i) % self.a_order, (g.j + h.j) % 4)
        return GroupElement((g.i - h.i) % self.a_order, (g.j + h.j + 2 * (h.i % 2)) % 4)

    def product(self, elems: Iterable[GroupElement]) -> GroupElement:
        out = IDENTITY
        for g in elems:
            out = self.multiply(out, g)
        return out

    def inverse(self, g: GroupElement) -> GroupElement:
        if g.j % 2 == 0:
            return GroupElement(-g.i % self.a_order, -g.j % 4)
        # (a^i b^j)^-1 = b^-j a^-i, and b^-j is an odd power of b
        return self.multiply(GroupElement(0, -g.j % 4), GroupElement(-g.i % self.a_order, 0))

    def power(self, g: GroupElement, k: int) -> GroupElement:
        if k < 0:
            g, k = self.inverse(g), -k
        out = IDENTITY
        for _ in range(k):
            out = self.multiply(out, g)
        return out

    def element_order(self, g: GroupElement) -> int:
        k, x = 1, g
        while x != IDENTITY:
            x = self.multiply(x, g)
            k += 1
        return k

    def conjugate(self, g: GroupElement, x: GroupElement) -> GroupElement:
        """``x^-1 g x``."""
        return self.multiply(self.multiply(self.inverse(x), g), x)

    def is_central(self, g: GroupElement) -> bool:
        return all(self.multiply(g, x) == self.multiply(x, g) for x in (self.a, self.b))

    @cached_property
    def center(self) -> frozenset:
        return frozenset(g for g in self.elements if self.is_central(g))

    # -- conjugacy --------------------------------------------------------

    @cached_property
    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        """Orbits under conjugation by the generators, sorted by representative.

        The representative of each class is its lexicographically smallest member.
        """
        seen: set[GroupElement] = set()
        classes = []
        for g in self.elements:
            if g in seen:
                continue
            orbit = {g}
            frontier = [g]
            while frontier:
                x = frontier.pop()
                for s in (self.a, self.b):
                    y = self.conjugate(x, s)
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            seen |= orbit
            classes.append(ConjugacyClass(min(orbit), frozenset(orbit)))
        return tuple(classes)

    def class_of(self, g: GroupElement) -> ConjugacyClass:
        for c in self.conjugacy_classes:
            if g in c.members:
                return c
        raise KeyError(g)

    # -- subgroups --------------------------------------------------------

    def generated_subgroup(self, gens: Iterable[GroupElement]) -> frozenset:
        gens = [self.normalize(g) for g in gens]
        closure = {IDENTITY}
        frontier = [IDENTITY]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = self.multiply(x, s)
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        return frozenset(closure)

    # -- tables for the vectorised kernels --------------------------------

    @cached_property
    def cayley_table(self) -> np.ndarray:
        """``table[index(g), index(h)] = index(g h)``."""
        els = self.elements
        table = np.empty((self.order, self.order), dtype=np.int64)
        for s, g in enumerate(els):
            for t, h in enumerate(els):
                table[s, t] = self.index(self.multiply(g, h))
        table.setflags(write=False)
        return table

    # -- text -------------------------------------------------------------

    def parse(self, text: str) -> GroupElement:
        """Parse a product such as ``"a^3*b^2"``, ``"a^-1*b"``, ``"b*a"`` or ``"1"``."""
        text = text.strip()
        if text in ("", "1", "e"):
            return IDENTITY
        out = IDENTITY
        for factor in text.split("*"):
            if factor.strip() == "1":
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"cannot parse group element {text!r}")
            k = int(m.group(2)) if m.group(2) is not None else 1
            gen = self.a if m.group(1) == "a" else self.b
            out = self.multiply(out, self.power(gen, k))
        return out


def multiply(g: GroupElement, h: GroupElement, params: GroupParams) -> GroupElement:
    return params.multiply(g, h)


def inverse(g: GroupElement, params: GroupParams) -> GroupElement:
    return params.inverse(g)


def element_order(g: GroupElement, params: GroupParams) -> int:
    return params.element_order(g)


def conjugacy_classes(params: GroupParams) -> list[ConjugacyClass]:
    return list(params.conjugacy_classes)


def is_central(g: GroupElement, params: GroupParams) -> bool:
    return params.is_central(g)
