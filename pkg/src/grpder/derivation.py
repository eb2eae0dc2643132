"""Derivations of F[G] determined by their values on the generators a and b.

A map ``{a, b} -> F[G]`` extends to a word map ``f~`` on the free group by

    f~(x^-1) = -x^-1 f(x) x^-1,
    f~(x_1 ... x_k) = sum_t  x_1..x_{t-1} f~(x_t) x_{t+1}..x_k,

and it extends to a derivation of F[G] exactly when ``f~`` kills every
relator.  The relators used are a^(2n), b^4, (ba)^2 and (b^-1 a)^2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .algebra import AlgebraElement, GroupAlgebra, commutator
from .explicit import ListedPair, coprime_listing, coprime_listing_parity_split, modular_listing
from .field import FieldSpec
from .group import GroupElement, GroupParams
from .linalg import Subspace, kernel, solve

LETTERS = ("a", "A", "b", "B")  # capitals are inverses


class NotADerivation(ValueError):
    """Generator images violate a relator."""


class Kind(str, enum.Enum):
    INNER = "Inner"
    OUTER = "Outer"
    NOT_A_DERIVATION = "NotADerivation"

    def __str__(self) -> str:
        return self.value


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


def free_word(text: str | Iterable[str]) -> tuple[str, ...]:
    """Letters of a free-group word; ``"A"``/``"B"`` stand for inverses."""
    letters = tuple(text)
    bad = [x for x in letters if x not in LETTERS]
    if bad:
        raise ValueError(f"unknown letters {bad}; use a, A, b, B")
    return letters


def letter_element(params: GroupParams, x: str) -> GroupElement:
    return {"a": params.a, "A": params.inverse(params.a), "b": params.b, "B": params.inverse(params.b)}[x]


def word_element(params: GroupParams, word: Sequence[str]) -> GroupElement:
    """Image of a free word in the group."""
    return params.product(letter_element(params, x) for x in word)


def relator_words(n: int) -> tuple[tuple[str, ...], ...]:
    return (("a",) * (2 * n), ("b",) * 4, tuple("baba"), tuple("BaBa"))


# ---------------------------------------------------------------------------
# generator images
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorImages:
    """Candidate values ``(d(a), d(b))``."""

    da: AlgebraElement
    db: AlgebraElement

    def __post_init__(self) -> None:
        if self.da.algebra != self.db.algebra:
            raise ValueError("images live in different algebras")

    def __eq__(self, other: object) -> bool:
        # a validated DerivationPair equals the bare images it wraps
        if not isinstance(other, GeneratorImages):
            return NotImplemented
        return self.da == other.da and self.db == other.db

    def __hash__(self) -> int:
        return hash((self.da, self.db))

    @property
    def algebra(self) -> GroupAlgebra:
        return self.da.algebra

    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.da.to_vector(), self.db.to_vector()])

    @classmethod
    def from_vector(cls, alg: GroupAlgebra, v) -> "GeneratorImages":
        d = alg.dim
        return cls(alg.from_vector(v[:d]), alg.from_vector(v[d:]))

    def __add__(self, other: "GeneratorImages") -> "GeneratorImages":
        return GeneratorImages(self.da + other.da, self.db + other.db)

    def scale(self, c) -> "GeneratorImages":
        return GeneratorImages(self.da.scale(c), self.db.scale(c))

    def to_json(self) -> dict:
        return {"da": self.da.to_json(), "db": self.db.to_json()}

    @classmethod
    def from_json(cls, alg: GroupAlgebra, obj) -> "GeneratorImages":
        return cls(alg.from_json(obj["da"]), alg.from_json(obj["db"]))

    def __str__(self) -> str:
        return f"(d(a) = {self.da}, d(b) = {self.db})"


class DerivationPair(GeneratorImages):
    """Generator images that satisfy every relator."""

    def __post_init__(self) -> None:
        super().__post_init__()
        bad = failing_relators(self)
        if bad:
            raise NotADerivation(f"relators {bad} are not killed by {GeneratorImages(self.da, self.db)}")

    @classmethod
    def from_images(cls, f: GeneratorImages) -> "DerivationPair":
        return cls(f.da, f.db)


def free_extension(f: GeneratorImages, word: Sequence[str]) -> AlgebraElement:
    """``f~(word)``, letter by letter."""
    alg = f.algebra
    params = alg.params
    letters = [letter_element(params, x) for x in word]
    out = alg.zero
    for t, x in enumerate(word):
        prefix = alg(params.product(letters[:t]))
        suffix = alg(params.product(letters[t + 1:]))
        if x == "a":
            term = f.da
        elif x == "b":
            term = f.db
        else:
            inv = alg(letters[t])
            term = -(inv * (f.da if x == "A" else f.db) * inv)
        out = out + prefix * term * suffix
    return out


def relator_obstructions(f: GeneratorImages) -> tuple[AlgebraElement, ...]:
    """``f~`` applied to a^(2n), b^4, (ba)^2 and (b^-1 a)^2."""
    return tuple(free_extension(f, w) for w in relator_words(f.algebra.params.n))


RELATOR_NAMES = ("a^2n", "b^4", "(ba)^2", "(b^-1a)^2")


def failing_relators(f: GeneratorImages) -> list[str]:
    return [name for name, o in zip(RELATOR_NAMES, relator_obstructions(f)) if o]


def is_derivation_pair(f: GeneratorImages) -> bool:
    return all(o.is_zero for o in relator_obstructions(f))


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def evaluate(d: GeneratorImages, x: AlgebraElement) -> AlgebraElement:
    """Apply the derivation determined by ``d`` to ``x``.

    ``d(a^i b^j)`` is expanded by the Leibniz rule over the positive word
    ``a...a b...b``, then extended linearly.
    """
    alg = d.algebra
    x = alg(x)
    n2 = alg.params.a_order
    a_pow = [alg.basis_element(i, 0) for i in range(n2)]
    b_pow = [alg.basis_element(0, j) for j in range(4)]
    # d(a^i) and d(b^j) by recursion: d(g^{k+1}) = d(g^k) g + g^k d(g)
    d_a_pow = [alg.zero]
    for i in range(1, n2):
        d_a_pow.append(d_a_pow[-1] * a_pow[1] + a_pow[i - 1] * d.da)
    d_b_pow = [alg.zero]
    for j in range(1, 4):
        d_b_pow.append(d_b_pow[-1] * b_pow[1] + b_pow[j - 1] * d.db)
    out = alg.zero
    for g, c in x.coeffs.items():
        term = d_a_pow[g.i] * b_pow[g.j] + a_pow[g.i] * d_b_pow[g.j]
        out = out + term.scale(c)
    return out


# ---------------------------------------------------------------------------
# inner derivations
# ---------------------------------------------------------------------------


def inner_derivation(beta: AlgebraElement) -> DerivationPair:
    """``x -> x beta - beta x`` recorded on the generators."""
    alg = beta.algebra
    return DerivationPair(commutator(alg.a, beta), commutator(alg.b, beta))


def _inner_images(beta: AlgebraElement) -> GeneratorImages:
    alg = beta.algebra
    return GeneratorImages(commutator(alg.a, beta), commutator(alg.b, beta))


def inner_generators(params: GroupParams) -> list[GroupElement]:
    """Members of non-singleton classes, minus each class's representative."""
    gs = []
    for c in params.conjugacy_classes:
        if len(c) > 1:
            gs += sorted(c.members - {c.representative})
    return sorted(gs)


def inner_basis(params: GroupParams, field: FieldSpec) -> list[DerivationPair]:
    alg = GroupAlgebra(params, field)
    return [inner_derivation(alg(g)) for g in inner_generators(params)]


@lru_cache(maxsize=64)
def _inner_map_matrix(params: GroupParams, field: FieldSpec) -> np.ndarray:
    """Columns are the image vectors of ``d_g`` for each group element g."""
    alg = GroupAlgebra(params, field)
    cols = [_inner_images(alg(g)).to_vector() for g in params.elements]
    m = field.zeros((2 * alg.dim, alg.dim))
    for c, v in enumerate(cols):
        m[:, c] = v
    m.setflags(write=False)
    return m


def inner_span(params: GroupParams, field: FieldSpec, generators: Iterable[GroupElement] | None = None) -> Subspace:
    """Span of ``d_g`` over ``generators`` (default: :func:`inner_generators`)."""
    if generators is None:
        return _default_inner_span(params, field)
    alg = GroupAlgebra(params, field)
    return Subspace.from_rows([_inner_images(alg(g)).to_vector() for g in generators], field, 2 * alg.dim)


@lru_cache(maxsize=64)
def _default_inner_span(params: GroupParams, field: FieldSpec) -> Subspace:
    return inner_span(params, field, inner_generators(params))


def inner_witness(d: GeneratorImages) -> AlgebraElement | None:
    """Canonical ``beta`` with ``d = d_beta`` (free coordinates zero), or None."""
    alg = d.algebra
    m = _inner_map_matrix(alg.params, alg.field)
    x = solve(m, d.to_vector(), alg.field)
    return None if x is None else alg.from_vector(x)


# ---------------------------------------------------------------------------
# the full derivation space
# ---------------------------------------------------------------------------


def obstruction_matrix(params: GroupParams, field: FieldSpec) -> np.ndarray:
    """Matrix of ``(d(a), d(b)) -> (f~(r) for each relator r)``, shape (32n, 16n).

    Assembled straight from the word formula: each letter position of each
    relator contributes a signed two-sided translate ``u * (.) * v`` of one
    generator image.
    """
    size = params.order
    table = params.cayley_table
    words = relator_words(params.n)
    lefts, rights, signs, row_blocks, col_blocks = [], [], [], [], []
    for r, word in enumerate(words):
        letters = [letter_element(params, x) for x in word]
        for t, x in enumerate(word):
            u = params.product(letters[:t])
            v = params.product(letters[t + 1:])
            sign = 1
            if x in "AB":
                inv = letters[t]
                u, v, sign = params.multiply(u, inv), params.multiply(inv, v), -1
            lefts.append(params.index(u))
            rights.append(params.index(v))
            signs.append(sign)
            row_blocks.append(r)
            col_blocks.append(0 if x in "aA" else 1)
    idx = _kernels.two_sided_index(table, np.array(lefts), np.array(rights))
    counts = np.zeros((len(words) * size, 2 * size), dtype=np.int64)
    g = np.arange(size)
    for s in range(len(lefts)):
        np.add.at(counts, (row_blocks[s] * size + idx[s], col_blocks[s] * size + g), signs[s])
    return field.reduce(counts)


@dataclass(frozen=True)
class DerivationSpace:
    params: GroupParams
    field: FieldSpec
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def pairs(self) -> list[DerivationPair]:
        alg = GroupAlgebra(self.params, self.field)
        return [DerivationPair.from_images(GeneratorImages.from_vector(alg, row)) for row in self.space.basis]


@lru_cache(maxsize=64)
def derivation_space_oracle(params: GroupParams, field: FieldSpec) -> DerivationSpace:
    """Kernel of the obstruction matrix: every derivation, by brute force."""
    return DerivationSpace(params, field, kernel(obstruction_matrix(params, field), field))


# ---------------------------------------------------------------------------
# listed bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckedPair:
    listed: ListedPair
    failing: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.failing

    @property
    def images(self) -> GeneratorImages:
        return GeneratorImages(self.listed.da, self.listed.db)

    @property
    def label(self) -> str:
        return self.listed.label


def uses_modular_listing(params: GroupParams, field: FieldSpec) -> bool:
    return field.characteristic != 0 and params.n % field.characteristic == 0


def listed_basis(params: GroupParams, field: FieldSpec, source: str = "standard") -> list[CheckedPair]:
    """The listed basis for this case, each pair tagged with its relator check.

    ``source="standard"`` picks B or B' by characteristic; ``source="parity_split"``
    gives the Bo*/Be* regrouping (only defined when p does not divide n).
    """
    alg = GroupAlgebra(params, field)
    if source == "standard":
        listing = modular_listing(alg) if uses_modular_listing(params, field) else coprime_listing(alg)
    elif source == "parity_split":
        if uses_modular_listing(params, field):
            raise ValueError("the parity-split listing only covers characteristic 0 or p coprime to n")
        listing = coprime_listing_parity_split(alg)
    else:
        raise ValueError(f"source must be 'standard' or 'parity_split', got {source!r}")
    return [CheckedPair(lp, tuple(failing_relators(GeneratorImages(lp.da, lp.db)))) for lp in listing]


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


def classify(d: GeneratorImages) -> Kind:
    """Inner or Outer; raises :class:`NotADerivation` for invalid images."""
    bad = failing_relators(d)
    if bad:
        raise NotADerivation(f"relators {bad} are not killed")
    alg = d.algebra
    if inner_span(alg.params, alg.field).member(d.to_vector()):
        return Kind.INNER
    return Kind.OUTER


def outer_codimension(params: GroupParams, field: FieldSpec) -> int:
    return derivation_space_oracle(params, field).dim - inner_span(params, field).dim
