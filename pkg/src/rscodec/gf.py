"""Exact arithmetic in finite fields GF(q).

Two families are supported:

* prime fields GF(p) for primes 3 <= p <= 65521, elements represented as
  the canonical integers 0..p-1 with arithmetic mod p;
* binary extension fields GF(2^m) for 2 <= m <= 16, elements represented
  as the canonical integers 0..2^m-1 whose bits are the coefficients of a
  polynomial residue mod a degree-m irreducible reduction polynomial.

GF(2) itself is rejected: its multiplicative group is trivial and no
primitive element exists for the evaluation-point sequence used by codes
built on top of this module.

Every field eagerly builds antilog/log tables for its multiplicative
group (q <= 2^16, so the tables are always small).  Scalar operations are
plain Python ints; bulk operations are exact numpy integer kernels used
by the matrix and codec layers.  All arithmetic is exact, never floating
point.

The module keeps a global count of field multiplications (including
inversions and divisions, and the element products performed inside bulk
kernels) so callers can compare the multiplicative cost of algorithms.
The counter is a plain module global and is not thread safe.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

PRIME_MAX = 65521  # largest supported prime characteristic
BINARY_MAX_DEGREE = 16

# Default reduction polynomials, one per supported extension degree.  Bit i
# of the mask is the coefficient of x^i.  Each is irreducible and primitive
# (x generates the multiplicative group), and the m=8 entry is the common
# x^8+x^4+x^3+x^2+1 used by most byte-oriented Reed-Solomon deployments.
DEFAULT_REDUCTIONS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

# Largest group order for which an (n x n) exponent-product matrix is kept
# per field to vectorise many-point polynomial evaluation.
_POWER_MATRIX_LIMIT = 2048

_mul_ops = 0


def mul_ops_total() -> int:
    """Running count of field multiplications performed so far."""
    return _mul_ops


def add_mul_ops(count: int) -> None:
    """Add `count` to the global multiplication counter (used by kernels)."""
    global _mul_ops
    _mul_ops += count


class MulOpCounter:
    """Context manager measuring multiplications performed inside a block."""

    __slots__ = ("start", "count")

    def __enter__(self) -> "MulOpCounter":
        self.start = _mul_ops
        self.count = 0
        return self

    def __exit__(self, *exc) -> None:
        self.count = _mul_ops - self.start


def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def _prime_factors(x: int) -> list[int]:
    out = []
    f = 2
    while f * f <= x:
        if x % f == 0:
            out.append(f)
            while x % f == 0:
                x //= f
        f += 1
    if x > 1:
        out.append(x)
    return out


def _gf2_poly_mod(a: int, b: int) -> int:
    # Remainder of carry-free polynomial division over GF(2).
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _gf2_is_irreducible(mask: int, m: int) -> bool:
    if mask.bit_length() - 1 != m:
        return False
    if not (mask & 1):
        return False  # divisible by x
    # A reducible degree-m polynomial has a factor of degree <= m // 2.
    for cand in range(2, 1 << (m // 2 + 1)):
        if cand.bit_length() >= 2 and _gf2_poly_mod(mask, cand) == 0:
            return False
    return True


class Field:
    """A finite field GF(q) with a designated primitive element alpha.

    `Field(q)` picks the default reduction polynomial (binary fields) and
    the smallest primitive element.  Both can be overridden; invalid
    choices are rejected at construction time.
    """

    __slots__ = (
        "kind", "q", "p", "m", "reduction", "alpha",
        "exp", "log", "_exp_np", "_log_np", "_pmat",
    )

    def __init__(self, q: int, *, reduction: int | None = None,
                 alpha: int | None = None):
        if not isinstance(q, int) or q < 3:
            raise ValueError(f"unsupported field size {q!r}: need an integer >= 3")
        if q & (q - 1) == 0:  # power of two
            m = q.bit_length() - 1
            if not 2 <= m <= BINARY_MAX_DEGREE:
                raise ValueError(f"GF(2^{m}) unsupported: need 2 <= m <= {BINARY_MAX_DEGREE}")
            self.kind = "binary"
            self.q, self.p, self.m = q, 2, m
            if reduction is None:
                reduction = DEFAULT_REDUCTIONS[m]
            if not _gf2_is_irreducible(reduction, m):
                raise ValueError(
                    f"reduction polynomial {reduction:#x} is not an irreducible "
                    f"degree-{m} polynomial over GF(2)")
            self.reduction = reduction
        else:
            if not _is_prime(q):
                raise ValueError(f"field size {q} is neither prime nor a power of two")
            if q > PRIME_MAX:
                raise ValueError(f"prime field size {q} exceeds supported maximum {PRIME_MAX}")
            if reduction is not None:
                raise ValueError("reduction polynomial only applies to GF(2^m)")
            self.kind = "prime"
            self.q, self.p, self.m = q, q, 1
            self.reduction = None

        n = q - 1
        if alpha is None:
            alpha = self._find_smallest_primitive()
        else:
            if not 1 <= alpha < q:
                raise ValueError(f"alpha {alpha!r} is not a nonzero element of GF({q})")
            if not self._is_primitive_slow(alpha):
                raise ValueError(f"alpha {alpha} does not have multiplicative order {n}")
        self.alpha = alpha

        # Eager antilog/log tables over the whole multiplicative group.
        exp = [0] * n
        log = [-1] * q
        acc = 1
        for i in range(n):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_slow(acc, alpha)
        self.exp = exp
        self.log = log
        self._exp_np = np.array(exp, dtype=np.int64)
        lg = np.array(log, dtype=np.int64)
        lg[0] = 0  # never a valid log; callers mask zeros before gathering
        self._log_np = lg
        self._pmat = None

    # ----- construction helpers -------------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        # Table-free product, used only while building tables.
        if self.kind == "prime":
            return a * b % self.p
        r = 0
        red, m = self.reduction, self.m
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if (a >> m) & 1:
                a ^= red
        return r

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def _is_primitive_slow(self, x: int) -> bool:
        # x generates the group iff x^((q-1)/f) != 1 for every prime f | q-1.
        n = self.q - 1
        if x == 0 or self._pow_slow(x, n) != 1:
            return False
        return all(self._pow_slow(x, n // f) != 1 for f in _prime_factors(n))

    def _find_smallest_primitive(self) -> int:
        for x in range(2, self.q):
            if self._is_primitive_slow(x):
                return x
        raise AssertionError("multiplicative group of a finite field is cyclic")

    # ----- scalar arithmetic ----------------------------------------------------

    def check(self, a: int) -> int:
        """Validate that `a` is a canonical element and return it."""
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of GF({self.q})")
        return int(a)

    def add(self, a: int, b: int) -> int:
        if self.kind == "prime":
            return (a + b) % self.p
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        if self.kind == "prime":
            return (a - b) % self.p
        return a ^ b

    def neg(self, a: int) -> int:
        if self.kind == "prime":
            return -a % self.p
        return a

    def mul(self, a: int, b: int) -> int:
        global _mul_ops
        _mul_ops += 1
        if self.kind == "prime":
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        n = self.q - 1
        return self.exp[(self.log[a] + self.log[b]) % n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        global _mul_ops
        _mul_ops += 1
        n = self.q - 1
        return self.exp[-self.log[a] % n]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.q})")
        global _mul_ops
        _mul_ops += 1
        if a == 0:
            return 0
        n = self.q - 1
        return self.exp[(self.log[a] - self.log[b]) % n]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError(f"0 has no negative powers in GF({self.q})")
            return 0
        global _mul_ops
        _mul_ops += 1
        n = self.q - 1
        return self.exp[(self.log[a] * e) % n]

    def dlog(self, a: int) -> int:
        """Discrete log base alpha: the i in [0, q-2] with alpha^i == a."""
        if a == 0:
            raise ValueError(f"0 has no discrete logarithm in GF({self.q})")
        return self.log[a]

    def is_primitive(self, x: int) -> bool:
        """True iff x has multiplicative order q-1."""
        if not 1 <= x < self.q:
            return False
        # x = alpha^i has order (q-1) / gcd(i, q-1).
        return math.gcd(self.log[x], self.q - 1) == 1

    # ----- bulk numpy kernels ---------------------------------------------------
    #
    # All kernels take/return int64 arrays of canonical elements and account
    # their element products to the global multiplication counter.

    def asarray(self, values: Iterable[int]) -> np.ndarray:
        if not isinstance(values, (np.ndarray, list, tuple)):
            values = list(values)
        a = np.asarray(values, dtype=np.int64)
        if a.size and (a.min() < 0 or a.max() >= self.q):
            raise ValueError(f"array contains non-elements of GF({self.q})")
        return a

    def add_arr(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.kind == "prime":
            return (x + y) % self.p
        return x ^ y

    def sub_arr(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.kind == "prime":
            return (x - y) % self.p
        return x ^ y

    def neg_arr(self, x: np.ndarray) -> np.ndarray:
        if self.kind == "prime":
            return (-x) % self.p
        return x.copy()

    def mul_arr(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.kind == "prime":
            out = x * y % self.p
            add_mul_ops(out.size)
            return out
        x, y = np.broadcast_arrays(x, y)
        out = np.zeros(x.shape, dtype=np.int64)
        nz = (x != 0) & (y != 0)
        if nz.any():
            n = self.q - 1
            out[nz] = self._exp_np[(self._log_np[x[nz]] + self._log_np[y[nz]]) % n]
        add_mul_ops(out.size)
        return out

    def scale_arr(self, x: np.ndarray, s: int) -> np.ndarray:
        if s == 0:
            return np.zeros_like(x)
        if self.kind == "prime":
            out = x * s % self.p
            add_mul_ops(out.size)
            return out
        out = np.zeros_like(x)
        nz = x != 0
        if nz.any():
            n = self.q - 1
            out[nz] = self._exp_np[(self._log_np[x[nz]] + self.log[s]) % n]
        add_mul_ops(out.size)
        return out

    def _power_matrix(self) -> np.ndarray | None:
        # E[i, j] = (i * j) mod (q - 1), so alpha^E[i, j] = (alpha^i)^j.
        n = self.q - 1
        if n > _POWER_MATRIX_LIMIT:
            return None
        if self._pmat is None:
            i = np.arange(n, dtype=np.int64)
            self._pmat = (i[:, None] * i[None, :]) % n
        return self._pmat

    def eval_at_powers(self, coeffs: Sequence[int], first: int = 0,
                       count: int | None = None) -> np.ndarray:
        """Evaluate sum_j coeffs[j] x^j at x = alpha^first, ..., alpha^(first+count-1).

        Requires len(coeffs) <= q-1 (degree below the group order).  Returns
        an int64 array of length `count` (default: the whole group orbit).
        """
        n = self.q - 1
        if count is None:
            count = n
        c = np.asarray(coeffs, dtype=np.int64)
        if c.size > n:
            raise ValueError(f"polynomial degree must be below {n}")
        out = np.zeros(count, dtype=np.int64)
        if count == 0:
            return out
        nz = np.flatnonzero(c)
        if nz.size == 0:
            return out
        emat = self._power_matrix()
        if emat is not None:
            rows = (first + np.arange(count, dtype=np.int64)) % n
            expo = (emat[np.ix_(rows, nz)] + self._log_np[c[nz]][None, :]) % n
            terms = self._exp_np[expo]
            if self.kind == "prime":
                out = np.add.reduce(terms, axis=1) % self.p
            else:
                out = np.bitwise_xor.reduce(terms, axis=1)
            add_mul_ops(int(count) * int(nz.size))
            return out
        # Large group: Horner across the point vector instead.
        pts = self._exp_np[(first + np.arange(count, dtype=np.int64)) % n]
        acc = np.zeros(count, dtype=np.int64)
        for j in range(int(c.size) - 1, -1, -1):
            acc = self.add_arr(self.mul_arr(acc, pts), c[j])
        return acc

    # ----- identity --------------------------------------------------------------

    def _key(self) -> tuple:
        return (self.kind, self.q, self.reduction, self.alpha)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.kind == "prime":
            return f"Field({self.q}, alpha={self.alpha})"
        return f"Field(2**{self.m}, reduction={self.reduction:#x}, alpha={self.alpha})"


def find_primitive(q: int, *, reduction: int | None = None) -> int:
    """Smallest canonical element of GF(q) with multiplicative order q-1."""
    return Field(q, reduction=reduction).alpha
