"""Exact coefficient fields: the rationals and prime fields of odd order.

Scalars are plain Python values.  Over Q they are :class:`fractions.Fraction`
instances; over F_p they are ``int`` residues in ``[0, p)``.  A
:class:`FieldSpec` carries the arithmetic and the array conventions used by
:mod:`grpder.linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Union

import numpy as np

Scalar = Union[int, Fraction]

# residues below this bound keep every product inside int64
INT64_SAFE_PRIME = 1 << 31


class FieldError(ValueError):
    """Invalid field specification."""


class CharacteristicTwoError(FieldError):
    """Characteristic 2 was requested; every construction here assumes odd or zero."""


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for m < 3.3e24
    for a in small:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field of the given characteristic (0 means Q)."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
            raise FieldError(f"characteristic must be an integer, got {p!r}")
        if p == 2:
            raise CharacteristicTwoError("characteristic 2 is not supported")
        if p < 0 or (p != 0 and not is_prime(int(p))):
            raise FieldError(f"characteristic must be 0 or an odd prime, got {p}")
        object.__setattr__(self, "characteristic", int(p))

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def fast(self) -> bool:
        """True when vectors fit the int64 kernels."""
        return 0 < self.characteristic < INT64_SAFE_PRIME

    @property
    def dtype(self) -> Any:
        return np.int64 if self.fast else object

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"F_{self.characteristic}"

    # -- scalars ----------------------------------------------------------

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.is_rational else 1

    def __call__(self, value: Any) -> Scalar:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.is_rational:
            if isinstance(value, (float, np.floating)):
                raise TypeError("floating point values are not exact scalars")
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.div(value.numerator, value.denominator)
        if isinstance(value, (float, np.floating)):
            raise TypeError("floating point values are not exact scalars")
        return int(value) % self.characteristic

    def add(self, x: Scalar, y: Scalar) -> Scalar:
        return x + y if self.is_rational else (x + y) % self.characteristic

    def sub(self, x: Scalar, y: Scalar) -> Scalar:
        return x - y if self.is_rational else (x - y) % self.characteristic

    def neg(self, x: Scalar) -> Scalar:
        return -x if self.is_rational else (-x) % self.characteristic

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        return x * y if self.is_rational else (x * y) % self.characteristic

    def inv(self, x: Scalar) -> Scalar:
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.characteristic)

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return self.mul(self(x), self.inv(self(y)))

    def is_zero(self, x: Scalar) -> bool:
        if self.is_rational:
            return x == 0
        return x % self.characteristic == 0

    # -- text -------------------------------------------------------------

    def format(self, x: Scalar) -> str:
        """Scalar string: ``"num/den"`` or ``"num"`` over Q, decimal residue over F_p."""
        x = self(x)
        if self.is_rational:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x)

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        if self.is_rational:
            return Fraction(text)
        if "/" in text:
            num, den = text.split("/", 1)
            return self.div(int(num), int(den))
        return int(text) % self.characteristic

    # -- arrays -----------------------------------------------------------

    def array(self, values: Iterable[Any]) -> np.ndarray:
        """Dense vector or matrix with entries coerced into the field."""
        return self.reduce(np.array(values, dtype=object))

    def zeros(self, shape: Any) -> np.ndarray:
        if self.fast:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def reduce(self, arr: Any) -> np.ndarray:
        """Copy of ``arr`` with every entry in canonical form for this field."""
        arr = arr if isinstance(arr, np.ndarray) else np.array(arr, dtype=object)
        if self.fast and arr.dtype.kind in "iu":
            return np.mod(arr.astype(np.int64), self.characteristic)
        out = np.empty(arr.shape, dtype=self.dtype)
        for idx, v in np.ndenumerate(arr):
            out[idx] = self(v)
        return out
