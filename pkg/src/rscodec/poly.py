"""Dense univariate polynomials over a finite field.

Coefficients are stored low degree first as a tuple of canonical field
elements with trailing zeros trimmed, so equal polynomials compare equal.
The zero polynomial has an empty coefficient tuple and degree -infinity,
which keeps the degree law deg(a*b) = deg(a) + deg(b) true without a
special case.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .gf import Field, add_mul_ops

# Products with at most this many coefficient pairs use the scalar
# schoolbook loop; larger ones go through numpy.
_SCHOOLBOOK_LIMIT = 1024


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence[int] = ()):
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        self.field = field
        self.coeffs = tuple(int(c) for c in coeffs[:end])

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Poly":
        if coeff == 0:
            return cls.zero(field)
        return cls(field, (0,) * degree + (coeff,))

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise ValueError("polynomials belong to different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = f.sub(out[i], c)
        return Poly(f, out)

    def scale(self, s: int) -> "Poly":
        f = self.field
        if s == 0:
            return Poly.zero(f)
        return Poly(f, [f.mul(c, s) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        if len(a) * len(b) <= _SCHOOLBOOK_LIMIT:
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x == 0:
                    continue
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
            return Poly(f, out)
        if f.kind == "prime":
            prod = np.convolve(np.asarray(a, dtype=np.int64),
                               np.asarray(b, dtype=np.int64)) % f.p
            add_mul_ops(len(a) * len(b))
            return Poly(f, prod.tolist())
        # Binary field: accumulate shifted scalings of the longer operand.
        if len(a) < len(b):
            a, b = b, a
        acc = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        av = np.asarray(a, dtype=np.int64)
        for j, y in enumerate(b):
            if y:
                acc[j:j + len(a)] ^= f.scale_arr(av, y)
        return Poly(f, acc.tolist())

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check_field(other)
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(f), self
        rem = list(self.coeffs)
        den = other.coeffs
        dd = len(den) - 1
        lead_inv = f.inv(den[-1])
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - dd - 1, -1, -1):
            c = rem[i + dd]
            if c == 0:
                continue
            c = f.mul(c, lead_inv)
            quot[i] = c
            for j in range(dd + 1):
                if den[j]:
                    rem[i + j] = f.sub(rem[i + j], f.mul(c, den[j]))
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        """Evaluate by Horner's rule."""
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def shifted(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def split_at(self, k: int) -> tuple["Poly", "Poly"]:
        """Split into (terms of degree < k, terms of degree >= k); sum is self."""
        if k < 0:
            raise ValueError("split point must be nonnegative")
        f = self.field
        return Poly(f, self.coeffs[:k]), Poly(f, (0,) * k + self.coeffs[k:])

    def roots_nonzero(self) -> set[int]:
        """All nonzero field elements where the polynomial vanishes."""
        return {x for x in range(1, self.field.q) if self(x) == 0}

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}x" if c != 1 else "x")
            else:
                parts.append(f"{c}x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(parts) + ")"
