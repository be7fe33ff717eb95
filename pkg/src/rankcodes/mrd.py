"""Gabidulin MRD codes: construction, encoding, error and erasure decoding.

A code of length n <= N over GF(q^N) is defined by n base-field-independent
elements h_1..h_n; the parity-check matrix stacks Frobenius powers of h and
the code meets the rank-metric Singleton bound d = n - k + 1.

Erased coordinates are handled two ways: the guessing process fills them
with values kept independent of the known symbols (turning erasures into
correctable rank errors), and the combined decoder eliminates the erasure
unknowns from the syndrome equations row by row, decodes the surviving
error against the reduced parity matrix, then back-substitutes.
All position arguments are 0-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .gf import FieldElement, FieldSpec, format_element, frob, is_linearly_independent, parse_element
from .linpoly import LinearizedPoly, lp_euclid_chain, lp_root_space
from .ranklin import (
    ExtMatrix,
    PrimeMatrix,
    expansion_matrix,
    ext_mul,
    ext_null_space,
    ext_solve,
    rank_norm,
    solve_prime,
)


class _Detected:
    """Decoder outcome: pattern recognized as beyond capability, not corrected."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "DETECTED"

    def __bool__(self) -> bool:
        return False


DETECTED = _Detected()


class _Erased:
    """Marker for a received coordinate with unknown value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "*"


ERASED = _Erased()


class GuessExhausted(Exception):
    """No field element remains independent of the known coordinates."""


@dataclass(frozen=True)
class GabidulinCode:
    """[n, k, d] MRD code over GF(q^N) with d = n - k + 1."""

    spec: FieldSpec
    n: int
    k: int
    h: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "h", tuple(self.h))
        if not 1 <= self.k < self.n:
            raise ValueError("need 1 <= k < n")
        if self.n > self.spec.n:
            raise ValueError("length may not exceed the extension degree")
        if len(self.h) != self.n:
            raise ValueError("h must have length n")
        if not is_linearly_independent(list(self.h)):
            raise ValueError("h entries must be linearly independent over GF(q)")

    @property
    def d(self) -> int:
        return self.n - self.k + 1


@dataclass(frozen=True)
class ReceivedWord:
    """Channel output: field symbols with ERASED markers at unknown slots."""

    symbols: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def erasure_positions(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.symbols) if s is ERASED)

    @property
    def t(self) -> int:
        return len(self.erasure_positions)


@dataclass(frozen=True)
class ErrorSolution:
    """Decoded error decomposition e = E.Y plus recovered erasure values.

    Y rows live over GF(q) and are indexed by the coordinates the error
    decoder actually saw (all n for error-only decoding, the n-t surviving
    coordinates after erasure elimination).  f maps erasure position to the
    recovered symbol.
    """

    m: int
    E: tuple[FieldElement, ...]
    xprime: tuple[FieldElement, ...]
    Y: tuple[tuple[int, ...], ...]
    e: tuple[FieldElement, ...]
    f: dict


def parity_matrix(code: GabidulinCode) -> ExtMatrix:
    """(d-1) x n matrix with row j = (h_1^[j], ..., h_n^[j])."""
    return ExtMatrix.from_rows(
        [[frob(h, j) for h in code.h] for j in range(code.d - 1)]
    )


def generator_matrix(code: GabidulinCode) -> ExtMatrix:
    """k x n matrix of Frobenius form [g_j^[i]] spanning the null space of H.

    The base vector u solves sum u_i h_i^[s] = 0 for s = 0..n-2; shifting it
    by frob(., 1-k) makes every row g^[i], i < k, orthogonal to every parity
    row h^[j], j < d-1 (the exponent j - i then stays within -(k-1)..n-k-1).
    """
    moore = ExtMatrix.from_rows(
        [[frob(h, s) for h in code.h] for s in range(code.n - 1)]
    )
    basis = ext_null_space(moore)
    assert len(basis) == 1
    g = [frob(u, 1 - code.k) for u in basis[0]]
    G = ExtMatrix.from_rows([[frob(gi, i) for gi in g] for i in range(code.k)])
    check = ext_mul(G, parity_matrix(code).transpose())
    assert all(e.is_zero() for row in check.rows_data for e in row)
    return G


def encode(code: GabidulinCode, msg: Sequence[FieldElement]) -> list[FieldElement]:
    if len(msg) != code.k:
        raise ValueError("message length must equal k")
    G = generator_matrix(code)
    zero = code.spec.zero()
    return [
        sum((msg[i] * G[i, j] for i in range(code.k)), zero)
        for j in range(code.n)
    ]


def encode_systematic_via_parity(
    code: GabidulinCode, msg: Sequence[FieldElement], msg_positions: Sequence[int]
) -> list[FieldElement]:
    """Codeword carrying msg at msg_positions; the rest solved from H.x = 0."""
    if len(msg) != code.k or len(set(msg_positions)) != code.k:
        raise ValueError("need k message symbols at k distinct positions")
    H = parity_matrix(code)
    others = [j for j in range(code.n) if j not in set(msg_positions)]
    zero = code.spec.zero()
    A = ExtMatrix.from_rows([[H[p, j] for j in others] for p in range(code.d - 1)])
    b = [
        -sum((H[p, j] * m for j, m in zip(msg_positions, msg)), zero)
        for p in range(code.d - 1)
    ]
    sol = ext_solve(A, b)
    assert sol is not None, "MRD parity subsystem cannot be singular"
    x = [zero] * code.n
    for j, m in zip(msg_positions, msg):
        x[j] = m
    for j, v in zip(others, sol):
        x[j] = v
    return x


def syndrome(code: GabidulinCode, y: Sequence[FieldElement]) -> list[FieldElement]:
    """y.H^T, a length d-1 vector; zero iff y is a codeword."""
    if len(y) != code.n:
        raise ValueError("word length must equal n")
    zero = code.spec.zero()
    return [
        sum((frob(code.h[j], p) * y[j] for j in range(code.n)), zero)
        for p in range(code.d - 1)
    ]


# -- error location against a (possibly reduced) Gabidulin parity matrix --------------

def _locate_errors(spec: FieldSpec, h: Sequence[FieldElement], s: Sequence[FieldElement]):
    """Solve s_p = sum_j e_j h_j^[p] for a minimum-rank e, or DETECTED.

    Returns (m, E, xprime, Y, e) with e indexed like h.  Pipeline: syndrome
    polynomial -> Euclid chain -> error span polynomial Delta -> root-space
    basis E -> truncated Frobenius system for x' -> base-field solve for Y.
    """
    d1 = len(s)
    zero = spec.zero()
    if all(v.is_zero() for v in s):
        return 0, (), (), (), tuple([zero] * len(h))
    if d1 < 2:
        return DETECTED  # one nonzero syndrome equation cannot locate anything
    cap = d1 // 2

    S = LinearizedPoly(spec, {p: s[p] for p in range(d1)})
    F0 = LinearizedPoly.monomial(spec, d1)
    chain = lp_euclid_chain(F0, S, stop_degree=math.ceil(d1 / 2))
    m = chain.m
    F_last = chain.F[m + 1]
    if m == 0 or m > cap or F_last.is_zero():
        return DETECTED  # a nonzero syndrome needs 1 <= m <= capability

    # Error span polynomial Delta from Delta * S = F_last (mod z^[d1]).
    j = next(p for p in range(d1) if not s[p].is_zero())
    if j + m >= d1:
        return DETECTED
    delta = [F_last.coeff(j) / s[j]]
    for p in range(1, m + 1):
        acc = F_last.coeff(j + p)
        for i in range(p):
            acc = acc - delta[i] * frob(s[j + p - i], i)
        delta.append(acc / frob(s[j], p))
    Delta = LinearizedPoly(spec, dict(enumerate(delta)))
    if Delta.is_zero():
        return DETECTED
    Delta = Delta.monic()

    E = lp_root_space(Delta)
    if len(E) != m:
        return DETECTED

    # Truncated system s_p = sum_i E_i x'_i^[p], p < m: frob each equation by -p.
    A = ExtMatrix.from_rows([[frob(Ei, -p) for Ei in E] for p in range(m)])
    xprime = ext_solve(A, [frob(s[p], -p) for p in range(m)])
    if xprime is None:
        return DETECTED
    for p in range(m, d1):  # remaining equations must agree
        if sum((Ei * frob(xi, p) for Ei, xi in zip(E, xprime)), zero) != s[p]:
            return DETECTED

    # x'_i = sum_j Y_ij h_j with Y over GF(q).
    Hexp = expansion_matrix(list(h))
    Y = []
    for xi in xprime:
        row = solve_prime(Hexp, list(xi.coeffs))
        if row is None:
            return DETECTED
        Y.append(tuple(row))
    e = [
        sum((E[i].scale(Y[i][jj]) for i in range(m)), zero)
        for jj in range(len(h))
    ]
    if rank_norm(e) != m:
        return DETECTED
    return m, tuple(E), tuple(xprime), tuple(Y), tuple(e)


def decode_errors(
    code: GabidulinCode,
    y: Sequence[FieldElement],
    allowed_support: Sequence[int] | None = None,
):
    """Correct a rank error of norm <= (d-1)/2, or report DETECTED.

    When allowed_support is given (the guessing pipeline passes the erased
    positions), a corrected error touching any coordinate outside it is
    reported as DETECTED: the channel could not have disturbed those slots.
    """
    located = _locate_errors(code.spec, code.h, syndrome(code, y))
    if located is DETECTED:
        return DETECTED
    m, E, xprime, Y, e = located
    if allowed_support is not None:
        allowed = set(allowed_support)
        if any(not ej.is_zero() and j not in allowed for j, ej in enumerate(e)):
            return DETECTED
    x = [yj - ej for yj, ej in zip(y, e)]
    if any(not v.is_zero() for v in syndrome(code, x)):
        return DETECTED
    return x, ErrorSolution(m=m, E=E, xprime=xprime, Y=Y, e=e, f={})


# -- erasure guessing (the rank-preserving filling process) ---------------------------

def _span(spec: FieldSpec, vectors: list[FieldElement]) -> set[FieldElement]:
    span = {spec.zero()}
    for v in vectors:
        if v in span:
            continue
        span |= {s + v.scale(c) for s in span for c in range(1, spec.p)}
    return span


def guess_erasures(code: GabidulinCode, y: ReceivedWord) -> list[FieldElement]:
    """Fill erased slots, in position order, with the smallest-encoding nonzero
    element independent (over GF(q)) of all known and previously filled symbols."""
    spec = code.spec
    known = [s for s in y.symbols if s is not ERASED]
    filled = list(y.symbols)
    for pos in y.erasure_positions:
        span = _span(spec, known)
        pick = next((e for e in spec.elements() if not e.is_zero() and e not in span), None)
        if pick is None:
            raise GuessExhausted(f"known symbols span the field before slot {pos}")
        filled[pos] = pick
        known.append(pick)
    return filled


def erasure_choice_count(n: int, t: int, s: int) -> int:
    """Admissible values for the (s+1)-th guess with t erasures in GF(2^n)."""
    if not 0 <= s < t <= n:
        raise ValueError("need 0 <= s < t <= n")
    return (1 << (n - t + s)) * ((1 << (t - s)) - 1)


# -- erasure elimination and the combined decoder -------------------------------------

def _eliminate_erasures(
    code: GabidulinCode, sigma: Sequence[FieldElement], positions: Sequence[int]
) -> tuple[list[FieldElement], list[FieldElement], list[int]]:
    """Remove the erasure unknowns from the parity equations.

    Starting from H.u = -sigma (u agreeing with -e off the erased slots),
    each erased column l is eliminated by row(p) <- Z^[p] row(p) - row(p+1)
    with Z the ratio of consecutive entries in column l; the surviving
    system is again Gabidulin with h'_i = h_i Z - h_i^[1].  Returns
    (reduced h, reduced syndromes s', surviving column indices).
    """
    cols = list(range(code.n))
    rows = [[frob(code.h[jj], p) for jj in range(code.n)] for p in range(code.d - 1)]
    consts = [-sp for sp in sigma]
    for l in sorted(positions):
        idx = cols.index(l)
        assert not rows[0][idx].is_zero(), "pivot vanished: h entries dependent"
        new_rows, new_consts = [], []
        for p in range(len(rows) - 1):
            fac = rows[p + 1][idx] / rows[p][idx]
            new_rows.append([fac * a - b for a, b in zip(rows[p], rows[p + 1])])
            new_consts.append(fac * consts[p] - consts[p + 1])
        cols.pop(idx)
        rows = [r[:idx] + r[idx + 1:] for r in new_rows]
        consts = new_consts
    h_red = list(rows[0]) if rows else []
    s_prime = [-c for c in consts]
    return h_red, s_prime, cols


def deleted_parity_matrix(code: GabidulinCode, positions: Sequence[int]) -> ExtMatrix:
    """(d-1-m) x (n-m) parity matrix after eliminating the given columns."""
    m = len(set(positions))
    if m != len(positions):
        raise ValueError("duplicate positions")
    if m >= code.d - 1:
        raise ValueError("can delete at most d-2 columns")
    if m == 0:
        return parity_matrix(code)
    zero = [code.spec.zero()] * (code.d - 1)
    h_red, _, _ = _eliminate_erasures(code, zero, positions)
    return ExtMatrix.from_rows(
        [[frob(h, j) for h in h_red] for j in range(code.d - 1 - m)]
    )


def decode_error_erasure(code: GabidulinCode, y: ReceivedWord):
    """Combined decoder: correct rank errors and erasures when 2r + t < d."""
    if y.n != code.n:
        raise ValueError("word length must equal n")
    positions = y.erasure_positions
    t = len(positions)
    if t > code.d - 1:
        return DETECTED  # erasure unknowns outnumber the parity equations
    spec = code.spec
    zero = spec.zero()
    y0 = [zero if s is ERASED else s for s in y.symbols]
    sigma = syndrome(code, y0)

    if t == 0:
        result = decode_errors(code, y0)
        return result

    h_red, s_prime, cols = _eliminate_erasures(code, sigma, positions)
    if len(s_prime) == 0 or all(v.is_zero() for v in s_prime):
        m, E, xprime, Y = 0, (), (), ()
        e_red = [zero] * len(cols)
    else:
        located = _locate_errors(spec, h_red, s_prime)
        if located is DETECTED:
            return DETECTED
        m, E, xprime, Y, e_red = located

    e_full = [zero] * code.n
    for j, ej in zip(cols, e_red):
        e_full[j] = ej

    # Back-substitute into the original equations: solve for the erasure values.
    H = parity_matrix(code)
    A = ExtMatrix.from_rows([[H[p, l] for l in positions] for p in range(code.d - 1)])
    b = [
        sum((H[p, j] * e_full[j] for j in range(code.n)), zero) - sigma[p]
        for p in range(code.d - 1)
    ]
    f_vals = ext_solve(A, b)
    if f_vals is None:
        return DETECTED
    f = dict(zip(positions, f_vals))

    x = [yj - ej for yj, ej in zip(y0, e_full)]
    for l in positions:
        x[l] = f[l]
    if any(not v.is_zero() for v in syndrome(code, x)):
        return DETECTED
    return x, ErrorSolution(m=m, E=E, xprime=xprime, Y=Y, e=tuple(e_full), f=f)


def decode_via_guessing(code: GabidulinCode, y: ReceivedWord):
    """The guessing pipeline: fill erasures, then error-decode with the
    correction confined to the erased slots."""
    try:
        filled = guess_erasures(code, y)
    except GuessExhausted:
        return DETECTED
    return decode_errors(code, filled, allowed_support=y.erasure_positions)


# -- text format -----------------------------------------------------------------------

def format_received(y: ReceivedWord) -> str:
    return ",".join("*" if s is ERASED else format_element(s) for s in y.symbols)


def parse_received(spec: FieldSpec, text: str) -> ReceivedWord:
    symbols = [
        ERASED if tok.strip() == "*" else parse_element(spec, tok)
        for tok in text.strip().split(",")
    ]
    return ReceivedWord(tuple(symbols))
