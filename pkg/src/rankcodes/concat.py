"""Concatenated rank-metric (CRM) codes, super codes, and stream interleaving.

A CRM code pairs an outer rank-distance code over GF(2^kb) with a binary
(nb, kb) inner block code.  Each outer codeword symbol is expanded to kb
bits (most significant coefficient first) and inner-encoded, giving an
na x nb binary concatenated-code matrix (CC matrix).  The CR metric is
the GF(2)-rank of the matrix difference, and the minimum distance of the
concatenation equals the outer code's minimum rank distance.

Super codes concatenate block codes side by side under the summed Hamming
metric; interleaving merges several streams symbol by symbol, padding the
shorter ones with SPECIAL_BLANK placeholders (which are not erasures).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .blockcode import (
    LinearBlockCode,
    StandardArray,
    bc_build_standard_array,
    bc_decode,
    bc_encode,
)
from .gf import FieldElement, FieldSpec
from .mrd import DETECTED, GabidulinCode, decode_errors, generator_matrix
from .ranklin import (
    ExtMatrix,
    PrimeMatrix,
    ext_solve,
    ext_vec_mat,
    min_rank_distance_bruteforce,
    rank_distance,
    rank_prime,
)

ENUMERATION_LIMIT = 1 << 16


def symbol_to_bits(a: FieldElement) -> list[int]:
    """kb-bit expansion, most significant coefficient first (0->00, 1->01, a->10)."""
    return list(reversed(a.coeffs))


def bits_to_symbol(spec: FieldSpec, bits: Sequence[int]) -> FieldElement:
    return spec.from_coeffs(list(reversed(list(bits))))


@dataclass(frozen=True)
class CrmCode:
    """Outer rank-distance code (explicit generator) + binary inner code.

    gabidulin carries the h-construction when the outer code has one, so
    decoding can use the algebraic error decoder; otherwise the outer stage
    falls back to brute-force nearest-codeword search in the rank metric.
    """

    outer_G: ExtMatrix
    inner: LinearBlockCode
    gabidulin: GabidulinCode | None = None

    def __post_init__(self) -> None:
        if self.inner.k != self.spec.n:
            raise ValueError("inner dimension must equal the outer field degree")
        if self.spec.p != 2 or self.inner.p != 2:
            raise ValueError("CRM codes are binary constructions")

    @classmethod
    def from_gabidulin(cls, outer: GabidulinCode, inner: LinearBlockCode) -> "CrmCode":
        return cls(outer_G=generator_matrix(outer), inner=inner, gabidulin=outer)

    @property
    def spec(self) -> FieldSpec:
        return self.outer_G.spec

    @property
    def ka(self) -> int:
        return self.outer_G.rows

    @property
    def na(self) -> int:
        return self.outer_G.cols

    @property
    def nb(self) -> int:
        return self.inner.n


def _outer_codewords(code: CrmCode) -> list[tuple[list[FieldElement], list[FieldElement]]]:
    if code.spec.size ** code.ka > ENUMERATION_LIMIT:
        raise ValueError("outer codeword set too large to enumerate")
    out = []
    for msg in itertools.product(code.spec.elements(), repeat=code.ka):
        out.append((list(msg), ext_vec_mat(list(msg), code.outer_G)))
    return out


def outer_min_distance(code: CrmCode) -> int:
    if code.gabidulin is not None:
        return code.gabidulin.d
    return min_rank_distance_bruteforce(w for _, w in _outer_codewords(code))


def crm_encode(code: CrmCode, msg: Sequence[FieldElement]) -> PrimeMatrix:
    """Outer-encode, bit-expand each symbol, inner-encode each row."""
    if len(msg) != code.ka:
        raise ValueError("message length must equal the outer dimension")
    word = ext_vec_mat(list(msg), code.outer_G)
    rows = [bc_encode(code.inner, symbol_to_bits(a)) for a in word]
    return PrimeMatrix(np.array(rows, dtype=np.int64), 2)


def cr_distance(X: PrimeMatrix, Y: PrimeMatrix) -> int:
    """d_c(X, Y) = GF(2)-rank of X + Y."""
    if X.entries.shape != Y.entries.shape:
        raise ValueError("shapes must match")
    return rank_prime(PrimeMatrix((X.entries + Y.entries) % 2, 2))


def crm_min_distance(code: CrmCode) -> int:
    """Minimum CR weight over nonzero CC matrices (equals the outer distance)."""
    best = None
    for msg, _ in _outer_codewords(code):
        if all(a.is_zero() for a in msg):
            continue
        r = rank_prime(crm_encode(code, msg))
        best = r if best is None else min(best, r)
    if best is None:
        raise ValueError("code has no nonzero codewords")
    return best


def crm_detect(code: CrmCode, Y: PrimeMatrix) -> bool:
    """True iff Y is provably corrupted: 0 < rank(Y) < outer minimum distance."""
    r = rank_prime(Y)
    return 0 < r < outer_min_distance(code)


def crm_decode(code: CrmCode, Y: PrimeMatrix, array: StandardArray | None = None):
    """Sequential decoding: inner rows first, then the outer rank decoder."""
    if Y.entries.shape != (code.na, code.nb):
        raise ValueError("CC matrix shape mismatch")
    if array is None:
        array = bc_build_standard_array(code.inner)
    symbols = []
    for row in Y.entries:
        _, bits = bc_decode(code.inner, list(row), array)
        symbols.append(bits_to_symbol(code.spec, bits))

    if code.gabidulin is not None:
        result = decode_errors(code.gabidulin, symbols)
        if result is DETECTED:
            return DETECTED
        codeword = result[0]
    else:
        best = None
        for msg, word in _outer_codewords(code):
            dist = rank_distance(symbols, word)
            if best is None or dist < best[0]:
                best = (dist, word)
        codeword = best[1]
    msg = ext_solve(code.outer_G.transpose(), codeword)
    if msg is None:
        return DETECTED
    return msg


# -- super codes -------------------------------------------------------------------------

def super_encode(codes: Sequence[LinearBlockCode], messages: Sequence[Sequence[int]]) -> list[int]:
    """Blockwise encoding (x1 | x2 | ... | xt)."""
    if len(codes) != len(messages):
        raise ValueError("one message per component code")
    out: list[int] = []
    for code, msg in zip(codes, messages):
        out.extend(bc_encode(code, msg))
    return out


def super_distance(codes: Sequence[LinearBlockCode], x: Sequence[int], y: Sequence[int]) -> int:
    """d_S(x, y): sum of blockwise Hamming distances."""
    total_len = sum(c.n for c in codes)
    if len(x) != total_len or len(y) != total_len:
        raise ValueError("words must have the super code's total length")
    dist = 0
    pos = 0
    for code in codes:
        xs, ys = x[pos:pos + code.n], y[pos:pos + code.n]
        dist += sum(1 for u, v in zip(xs, ys) if u != v)
        pos += code.n
    return dist


# -- interleaving ------------------------------------------------------------------------

class _SpecialBlank:
    """Structural placeholder for an exhausted stream slot; NOT an erasure."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-"


SPECIAL_BLANK = _SpecialBlank()


@dataclass(frozen=True)
class BlankWord:
    """Round-robin interleave of several streams, blank-padded to a grid.

    symbols holds the full t x max-length grid (flattened, blanks included);
    transmitted() drops the blanks, giving the paper's merged stream.
    """

    symbols: tuple
    layout: tuple[int, ...]

    def transmitted(self) -> list:
        return [s for s in self.symbols if s is not SPECIAL_BLANK]


def interleave(words: Sequence[Sequence]) -> BlankWord:
    if not words:
        raise ValueError("need at least one stream")
    layout = tuple(len(w) for w in words)
    top = max(layout)
    grid = []
    for i in range(top):
        for w in words:
            grid.append(w[i] if i < len(w) else SPECIAL_BLANK)
    return BlankWord(symbols=tuple(grid), layout=layout)


def deinterleave(bw: BlankWord) -> list[list]:
    t = len(bw.layout)
    streams: list[list] = [[] for _ in range(t)]
    for idx, s in enumerate(bw.symbols):
        j = idx % t
        if s is SPECIAL_BLANK:
            continue
        streams[j].append(s)
    if [len(s) for s in streams] != list(bw.layout):
        raise ValueError("blank word inconsistent with its layout")
    return streams
