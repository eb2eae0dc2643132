"""Group algebra F[G] for the order-8n group: elements, products and the
linear maps built from them (centralizers, anti-centralizers)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping

import numpy as np

from . import _kernels
from .field import FieldSpec, Scalar
from .group import IDENTITY, GroupElement, GroupParams
from .linalg import Subspace, kernel

# above this many term pairs a mod-p product goes through the dense kernel
_DENSE_PRODUCT_TERMS = 64


_SCALAR = re.compile(r"\d+(?:/\d+)?")


class AlgebraMismatch(ValueError):
    """Operands live in different group algebras."""


@dataclass(frozen=True)
class GroupAlgebra:
    """F[G] for a fixed group size and coefficient field."""

    params: GroupParams
    field: FieldSpec

    @property
    def dim(self) -> int:
        return self.params.order

    # -- constructors -----------------------------------------------------

    def element(self, coeffs: Mapping[Any, Any] | Iterable[tuple[Any, Any]] = ()) -> "AlgebraElement":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[GroupElement, Scalar] = {}
        f = self.field
        for g, c in items:
            g = self.params.normalize(g)
            acc[g] = f.add(acc.get(g, f.zero), f(c))
        return AlgebraElement(self, {g: c for g, c in acc.items() if not f.is_zero(c)})

    def basis_element(self, i: int = 0, j: int = 0) -> "AlgebraElement":
        return AlgebraElement(self, {self.params.element(i, j): self.field.one})

    def __call__(self, x: Any) -> "AlgebraElement":
        if isinstance(x, AlgebraElement):
            if x.algebra != self:
                raise AlgebraMismatch(f"{x.algebra} is not {self}")
            return x
        if isinstance(x, GroupElement):
            return AlgebraElement(self, {self.params.normalize(x): self.field.one})
        if isinstance(x, str):
            return self.parse(x)
        return self.element({IDENTITY: x})

    @cached_property
    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    @cached_property
    def one(self) -> "AlgebraElement":
        return self.basis_element(0, 0)

    @cached_property
    def a(self) -> "AlgebraElement":
        return self.basis_element(1, 0)

    @cached_property
    def b(self) -> "AlgebraElement":
        return self.basis_element(0, 1)

    def total(self) -> "AlgebraElement":
        """Sum of all group elements."""
        return self.element({g: 1 for g in self.params.elements})

    def from_vector(self, v) -> "AlgebraElement":
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} for algebra of dimension {self.dim}")
        return self.element(zip(self.params.elements, v))

    def parse(self, text: str) -> "AlgebraElement":
        """Parse a signed sum like ``"a - 2*a^3*b^2 + 1/2*b"``."""
        # hide minus signs inside exponents so the split only sees term signs
        s = re.sub(r"\^\(?-", "^~", text.replace(" ", "")).replace("(", "").replace(")", "")
        if s and s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"([+-])([^+-]+)", s)
        if not terms or "".join(sign + body for sign, body in terms) != s:
            raise ValueError(f"cannot parse algebra element {text!r}")
        out = self.zero
        for sign, body in terms:
            factors = body.replace("~", "-").split("*")
            coeff = self.field.one
            if _SCALAR.fullmatch(factors[0]):
                coeff = self.field(factors.pop(0))
            g = self.params.parse("*".join(factors)) if factors else IDENTITY
            term = AlgebraElement(self, {g: self.field.one}).scale(coeff)
            out = out + term if sign == "+" else out - term
        return out

    # -- linear maps ------------------------------------------------------

    def multiplication_matrix(self, beta: "AlgebraElement", side: str) -> np.ndarray:
        """Matrix of ``x -> x beta`` (side="right") or ``x -> beta x`` (side="left")."""
        beta = self(beta)
        p = self.params
        support = sorted(beta.coeffs)
        ident = np.zeros(len(support), dtype=np.int64)
        hs = np.array([p.index(h) for h in support], dtype=np.int64)
        if side == "right":
            idx = _kernels.two_sided_index(p.cayley_table, ident, hs)
        elif side == "left":
            idx = _kernels.two_sided_index(p.cayley_table, hs, ident)
        else:
            raise ValueError("side must be 'left' or 'right'")
        m = self.field.zeros((self.dim, self.dim))
        cols = np.arange(self.dim)
        for s, h in enumerate(support):
            c = beta.coeffs[h]
            if self.field.fast:
                m[idx[s], cols] = (m[idx[s], cols] + c) % self.field.p
            else:
                for g in range(self.dim):
                    m[idx[s, g], g] = self.field.add(m[idx[s, g], g], c)
        return m

    def _twisted_commutator_matrix(self, beta: "AlgebraElement", sign: int) -> np.ndarray:
        right = self.multiplication_matrix(beta, "right")
        left = self.multiplication_matrix(beta, "left")
        if self.field.fast:
            return (right + sign * left) % self.field.p
        return self.field.reduce(right + sign * left)

    def centralizer(self, beta: "AlgebraElement") -> Subspace:
        """``{x : x beta = beta x}``."""
        return kernel(self._twisted_commutator_matrix(beta, -1), self.field)

    def anti_centralizer(self, beta: "AlgebraElement") -> Subspace:
        """``{x : x beta = -beta x}``."""
        return kernel(self._twisted_commutator_matrix(beta, +1), self.field)

    def span(self, elements: Iterable["AlgebraElement"]) -> Subspace:
        return Subspace.from_rows([self(x).to_vector() for x in elements], self.field, self.dim)

    def subgroup(self, gens: Iterable[GroupElement]) -> "SubgroupSpec":
        gens = [self.params.normalize(g) for g in gens]
        return SubgroupSpec(tuple(gens), self.params.generated_subgroup(gens))

    def a_squared_subgroup(self) -> "SubgroupSpec":
        return self.subgroup([self.params.element(2, 0)])

    # -- json -------------------------------------------------------------

    def from_json(self, obj: Mapping) -> "AlgebraElement":
        if int(obj["n"]) != self.params.n or int(obj["char"]) != self.field.characteristic:
            raise AlgebraMismatch(f"element for n={obj['n']}, char={obj['char']} read into {self}")
        return self.element((self.params.element(int(t["i"]), int(t["j"])), self.field.parse(str(t["c"]))) for t in obj["terms"])

    def __str__(self) -> str:
        return f"{self.field}[V_{self.params.order}]"


@dataclass(frozen=True)
class SubgroupSpec:
    generators: tuple[GroupElement, ...]
    closure: frozenset


class AlgebraElement:
    """A finitely supported sum of group elements with exact coefficients.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: GroupAlgebra, coeffs: dict[GroupElement, Scalar]):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @property
    def params(self) -> GroupParams:
        return self.algebra.params

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def _coerce(self, other: Any) -> "AlgebraElement":
        if isinstance(other, AlgebraElement) and other.algebra != self.algebra:
            raise AlgebraMismatch(f"cannot combine {self.algebra} with {other.algebra}")
        return self.algebra(other)

    def coeff(self, g: GroupElement) -> Scalar:
        return self.coeffs.get(self.params.normalize(g), self.field.zero)

    @property
    def support(self) -> list[GroupElement]:
        return sorted(self.coeffs)

    # -- ring structure ---------------------------------------------------

    def __add__(self, other: Any) -> "AlgebraElement":
        other = self._coerce(other)
        f = self.field
        acc = dict(self.coeffs)
        for g, c in other.coeffs.items():
            v = f.add(acc.get(g, f.zero), c)
            if f.is_zero(v):
                acc.pop(g, None)
            else:
                acc[g] = v
        return AlgebraElement(self.algebra, acc)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        f = self.field
        return AlgebraElement(self.algebra, {g: f.neg(c) for g, c in self.coeffs.items()})

    def __sub__(self, other: Any) -> "AlgebraElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "AlgebraElement":
        return self._coerce(other) - self

    def scale(self, c: Any) -> "AlgebraElement":
        f = self.field
        c = f(c)
        if f.is_zero(c):
            return self.algebra.zero
        return AlgebraElement(self.algebra, {g: f.mul(c, v) for g, v in self.coeffs.items()})

    def __mul__(self, other: Any) -> "AlgebraElement":
        other = self._coerce(other)
        f = self.field
        if f.fast and len(self.coeffs) * len(other.coeffs) > _DENSE_PRODUCT_TERMS:
            prod = _kernels.convolve_mod_p(self.params.cayley_table, self.to_vector(), other.to_vector(), f.p)
            return self.algebra.from_vector(prod)
        mult = self.params.multiply
        acc: dict[GroupElement, Scalar] = {}
        for g, c in self.coeffs.items():
            for h, d in other.coeffs.items():
                k = mult(g, h)
                acc[k] = f.add(acc.get(k, f.zero), f.mul(c, d))
        return AlgebraElement(self.algebra, {g: c for g, c in acc.items() if not f.is_zero(c)})

    def __rmul__(self, other: Any) -> "AlgebraElement":
        return self._coerce(other) * self

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative powers are not defined in the algebra")
        out = self.algebra.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgebraElement):
            return self.algebra == other.algebra and self.coeffs == other.coeffs
        try:
            return self == self.algebra(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    # -- functionals ------------------------------------------------------

    def augmentation(self) -> Scalar:
        f = self.field
        total = f.zero
        for c in self.coeffs.values():
            total = f.add(total, c)
        return total

    def to_vector(self) -> np.ndarray:
        v = self.field.zeros(self.algebra.dim)
        for g, c in self.coeffs.items():
            v[self.params.index(g)] = c
        return v

    def to_json(self) -> dict:
        f = self.field
        return {
            "n": self.params.n,
            "char": f.characteristic,
            "terms": [{"i": g.i, "j": g.j, "c": f.format(self.coeffs[g])} for g in self.support],
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        f = self.field
        out = []
        for g in self.support:
            c = self.coeffs[g]
            neg = f.is_rational and c < 0
            mag = f.format(-c if neg else c)
            word = str(g)
            if mag == "1":
                term = word
            elif word == "1":
                term = mag
            else:
                term = f"{mag}*{word}"
            out.append(("- " if neg else "+ ") + term)
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"AlgebraElement({self}, {self.algebra})"


# -- free-function surface ---------------------------------------------------


def alg_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y


def alg_scale(c: Any, x: AlgebraElement) -> AlgebraElement:
    return x.scale(c)


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def augmentation(x: AlgebraElement) -> Scalar:
    return x.augmentation()


def in_delta_prime(x: AlgebraElement, h: SubgroupSpec) -> bool:
    """Coefficient sums over ``h`` and over its complement both vanish."""
    f = x.field
    inside = outside = f.zero
    for g, c in x.coeffs.items():
        if g in h.closure:
            inside = f.add(inside, c)
        else:
            outside = f.add(outside, c)
    return f.is_zero(inside) and f.is_zero(outside)


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """``x y - y x``."""
    return x * y - y * x


def anti_commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """``x y + y x``."""
    return x * y + y * x


def centralizer(beta: AlgebraElement) -> Subspace:
    return beta.algebra.centralizer(beta)


def anti_centralizer(beta: AlgebraElement) -> Subspace:
    return beta.algebra.anti_centralizer(beta)
