"""Shared helpers and independent oracles for the test suite.

The oracles here deliberately use different algorithms than the package
(cofactor expansion instead of elimination, explicit Lagrange products
instead of the closed form, carry-free bit multiplication instead of
tables) so fixture values are cross-checked, not copied.
"""

from __future__ import annotations

import random

from rscodec import Field, Poly, RSCode

_fields: dict = {}
_codes: dict = {}


def get_field(q: int, **kw) -> Field:
    key = (q, tuple(sorted(kw.items())))
    if key not in _fields:
        _fields[key] = Field(q, **kw)
    return _fields[key]


def get_code(q: int, k: int, **kw) -> RSCode:
    key = (q, k, tuple(sorted(kw.items())))
    if key not in _codes:
        _codes[key] = RSCode(get_field(q, **kw), k)
    return _codes[key]


def det_cofactor(f: Field, rows: list[list[int]]) -> int:
    """Determinant by Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, c in enumerate(rows[0]):
        if c == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = f.mul(c, det_cofactor(f, minor))
        total = f.add(total, term if j % 2 == 0 else f.neg(term))
    return total


def lagrange_product(code: RSCode, i: int) -> Poly:
    """Lagrange basis polynomial by the defining product, not the closed form."""
    f = code.field
    xi = f.pow(f.alpha, i)
    num = Poly.one(f)
    denom = 1
    for j in range(code.n):
        if j == i:
            continue
        xj = f.pow(f.alpha, j)
        num = num * Poly(f, (f.neg(xj), 1))
        denom = f.mul(denom, f.sub(xi, xj))
    return num.scale(f.inv(denom))


def slow_gf2m_mul(a: int, b: int, reduction: int, m: int) -> int:
    """Carry-free multiply-and-reduce, independent of the package tables."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> m) & 1:
            a ^= reduction
    return r


def random_poly(rng: random.Random, f: Field, max_degree: int) -> Poly:
    deg = rng.randrange(-1, max_degree + 1)
    if deg < 0:
        return Poly.zero(f)
    coeffs = [rng.randrange(f.q) for _ in range(deg)] + [rng.randrange(1, f.q)]
    return Poly(f, coeffs)


def random_word(rng: random.Random, code: RSCode) -> tuple[int, ...]:
    return tuple(rng.randrange(code.field.q) for _ in range(code.n))


def corrupt(rng: random.Random, code: RSCode, codeword, t: int) -> tuple[int, ...]:
    """Add a random error of exact weight t to the codeword."""
    positions = rng.sample(range(code.n), t)
    word = list(codeword)
    f = code.field
    for pos in positions:
        word[pos] = f.add(word[pos], rng.randrange(1, f.q))
    return tuple(word)
