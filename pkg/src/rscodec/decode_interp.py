"""Interpolation-degree decoding of Reed-Solomon words.

Write the received word as u = c + e with c a codeword and e of Hamming
weight t.  The decoder works with the interpolation polynomial f_u of the
received word (degree < n) and the monic error locator lambda of degree t
whose roots are exactly alpha^i for the error positions i.  The pipeline:

1. detect t: the smallest t <= tau for which the (n-k-t) x t Hankel
   matrix of syndromes [s_(i+j)] has the same rank as its (n-k-t) x (t+1)
   augmentation (t = 0 matches iff all syndromes are zero);
2. solve the t x t Hankel system for lambda's lower coefficients;
3. fold: the product lambda * f_u has the shape lambda * f_c + (x^n - 1) * mu
   with deg f_c < k, so mu can be read directly off the coefficients of
   x^n and above, and f_c = f_u - (x^n - 1) * mu / lambda with the
   division exact;
4. the decoded codeword is f_c evaluated at alpha^0, ..., alpha^(n-1).

An alternative second half (`decode_via_positions`) reads the error
positions off the locator's roots and solves for the error values
instead; it never interpolates the whole word.

Both entry points re-verify their answer (codeword membership and
distance exactly t) before returning, so a wrong answer is never returned
silently: inputs beyond the correction radius either raise DecodeFailure
or decode to some codeword genuinely within distance tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import (
    DecodeFailure,
    DegreeTooHigh,
    InexactDivision,
    RootCountMismatch,
    SingularLocatorSystem,
    TooManyErrors,
    VerifyFailed,
)
from .femat import FeMat
from .poly import Poly
from .rscode import RSCode


@dataclass
class DecodeTrace:
    """Work counters and intermediate values of one decode call.

    rank_checks counts rank-equality tests in step 1 (one per candidate
    error count, so t + 1 on success).  det_checks stays 0 here; the PGZ
    decoder uses its own trace with the roles swapped.
    """

    rank_checks: int
    det_checks: int = 0
    interp_degree: int | float | None = None
    high_quotient: Poly | None = None
    high_coeffs: tuple[int, ...] = ()


@dataclass
class DecodeOutcome:
    """A successful decode: the nearest codeword and how it was found."""

    codeword: tuple[int, ...]
    error: tuple[int, ...]
    error_count: int
    locator: Poly
    trace: object


def _hankel(syndromes: np.ndarray, rows: int, cols: int) -> np.ndarray:
    idx = np.arange(rows, dtype=np.intp)[:, None] + np.arange(cols, dtype=np.intp)[None, :]
    return syndromes[idx]


def detect_error_count(code: RSCode, syndromes: Sequence[int]) -> int | None:
    """Smallest t in [0, tau] consistent with the syndromes, else None.

    Candidate t is consistent when appending the next syndrome column to
    the (n-k-t) x t Hankel matrix does not raise its rank.
    """
    s = _check_syndromes(code, syndromes)
    for t in range(code.tau + 1):
        rows = code.n - code.k - t
        lhs = FeMat._wrap(code.field, _hankel(s, rows, t))
        aug = FeMat._wrap(code.field, _hankel(s, rows, t + 1))
        if lhs.rank() == aug.rank():
            return t
    return None


def solve_locator(code: RSCode, syndromes: Sequence[int], t: int) -> Poly:
    """Monic degree-t locator from the t x t Hankel syndrome system.

    For the true error count t <= tau the system is uniquely solvable and
    the constant term is nonzero (zero is not an evaluation point); both
    are still checked and reported as SingularLocatorSystem.
    """
    if not 1 <= t <= code.tau:
        raise ValueError(f"error count t={t} must satisfy 1 <= t <= tau = {code.tau}")
    s = _check_syndromes(code, syndromes)
    lhs = FeMat._wrap(code.field, _hankel(s, t, t))
    rhs = [code.field.neg(int(x)) for x in s[t:2 * t]]
    res = lhs.solve(rhs)
    if not res.is_unique():
        raise SingularLocatorSystem(
            f"locator system for t={t} is {res.status.value}")
    if res.solution[0] == 0:
        raise SingularLocatorSystem(
            "locator constant term is zero, implying an error at the "
            "excluded point 0")
    return Poly(code.field, res.solution + (1,))


def recover_codeword_polynomial(code: RSCode, word: Sequence[int],
                                locator: Poly, t: int) -> Poly:
    """Codeword polynomial (degree < k) from the word and its locator."""
    interp = code.interpolate(word)
    gc, _, _ = _recover(code, interp, locator)
    return gc


def _recover(code: RSCode, interp: Poly, locator: Poly) -> tuple[Poly, Poly, tuple[int, ...]]:
    # lambda * f_u = lambda * f_c + (x^n - 1) * mu with deg(lambda * f_c)
    # < k + t <= n, so the coefficients of x^n and above are exactly those
    # of x^n * mu, and subtracting mu's own coefficients is folded into
    # the (x^n - 1) * mu construction below.
    f = code.field
    prod = locator * interp
    high = tuple(prod.coeffs[code.n:])
    mu = Poly(f, high)
    wrapped = mu.shifted(code.n) - mu
    quot, rem = divmod(wrapped, locator)
    if not rem.is_zero():
        raise InexactDivision(
            "locator does not divide the wrapped high part; it cannot "
            "explain the received word")
    gc = interp - quot
    if gc.degree >= code.k:
        raise DegreeTooHigh(
            f"recovered polynomial has degree {gc.degree}, expected < k = {code.k}")
    return gc, mu, high


def decode(code: RSCode, word: Sequence[int]) -> DecodeOutcome:
    """Decode by recovering the codeword polynomial (steps 1-4 above)."""
    word = code.check_word(word)
    evals = code.word_evaluations(word)
    synd = tuple(int(x) for x in evals[:code.n - code.k])
    t = detect_error_count(code, synd)
    if t is None:
        raise TooManyErrors(
            f"no error count <= tau = {code.tau} fits the syndromes",
            trace=DecodeTrace(rank_checks=code.tau + 1))
    trace = DecodeTrace(rank_checks=t + 1)
    if t == 0:
        return DecodeOutcome(word, (0,) * code.n, 0, Poly.one(code.field), trace)
    try:
        locator = solve_locator(code, synd, t)
        interp = code.interpolate_from_evaluations(evals)
        gc, mu, high = _recover(code, interp, locator)
    except DecodeFailure as exc:
        exc.trace = trace
        raise
    trace.interp_degree = interp.degree
    trace.high_quotient = mu
    trace.high_coeffs = high
    cw = tuple(int(x) for x in code.field.eval_at_powers(gc.coeffs, first=0, count=code.n))
    return _verified_outcome(code, word, cw, t, locator, trace)


def decode_via_positions(code: RSCode, word: Sequence[int]) -> DecodeOutcome:
    """Decode by reading error positions off the locator's roots.

    Same steps 1-2 as `decode`; afterwards the roots alpha^i of the
    locator give the error positions i directly and a t x t Vandermonde-
    style system gives the error values, skipping full interpolation.
    """
    word = code.check_word(word)
    synd = code.syndromes(word)
    t = detect_error_count(code, synd)
    if t is None:
        raise TooManyErrors(
            f"no error count <= tau = {code.tau} fits the syndromes",
            trace=DecodeTrace(rank_checks=code.tau + 1))
    trace = DecodeTrace(rank_checks=t + 1)
    if t == 0:
        return DecodeOutcome(word, (0,) * code.n, 0, Poly.one(code.field), trace)
    try:
        locator = solve_locator(code, synd, t)
        positions, values = _error_positions_and_values(code, synd, locator, t)
    except DecodeFailure as exc:
        exc.trace = trace
        raise
    f = code.field
    err = [0] * code.n
    for pos, val in zip(positions, values):
        err[pos] = val
    cw = tuple(f.sub(u, e) for u, e in zip(word, err))
    return _verified_outcome(code, word, cw, t, locator, trace)


def _error_positions_and_values(code: RSCode, synd: Sequence[int],
                                locator: Poly, t: int) -> tuple[list[int], list[int]]:
    """Error positions (locator roots' discrete logs) and values.

    Shared with the PGZ decoder, whose steps after locator solving are
    identical.
    """
    f = code.field
    roots = locator.roots_nonzero()
    if len(roots) != t:
        raise RootCountMismatch(
            f"locator of degree {t} has {len(roots)} distinct nonzero roots")
    positions = sorted(f.dlog(r) for r in roots)
    # Row r (0-based) of the system: sum_j alpha^((r+1) * i_j) e_(i_j) = s_r.
    lhs = FeMat(f, [[f.pow(f.alpha, (r + 1) * pos) for pos in positions]
                    for r in range(t)])
    res = lhs.solve(list(synd[:t]))
    if not res.is_unique():
        raise SingularLocatorSystem(
            f"error value system for t={t} is {res.status.value}")
    return positions, list(res.solution)


def _verified_outcome(code: RSCode, word: tuple[int, ...], cw: tuple[int, ...],
                      t: int, locator: Poly, trace) -> DecodeOutcome:
    f = code.field
    if any(code.syndromes(cw)):
        raise VerifyFailed("decoded word is not a codeword", trace=trace)
    err = tuple(f.sub(u, c) for u, c in zip(word, cw))
    weight = sum(1 for e in err if e)
    if weight != t:
        raise VerifyFailed(
            f"decoded codeword is at distance {weight}, expected exactly {t}",
            trace=trace)
    return DecodeOutcome(cw, err, t, locator, trace)


def _check_syndromes(code: RSCode, syndromes: Sequence[int]) -> np.ndarray:
    if len(syndromes) != code.n - code.k:
        raise ValueError(
            f"syndrome vector length {len(syndromes)} != n - k = {code.n - code.k}")
    return code.field.asarray(syndromes)
