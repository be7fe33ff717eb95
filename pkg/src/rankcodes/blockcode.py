"""Classical linear block codes over GF(p) with Hamming-metric decoding.

Used standalone for the small parity-check and repetition constructions
and as the inner layer of the concatenated rank-metric codes.  When the
parity-check matrix has canonical form H = (A | I_{n-k}) the generator is
the systematic G = (I_k | -A^T); otherwise a null-space basis is used and
messages are recovered by solving m.G = x.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .ranklin import PrimeMatrix, _row_reduce_mod_p, rank_prime, solve_prime

ENUMERATION_LIMIT = 1 << 20


@dataclass(frozen=True)
class LinearBlockCode:
    G: PrimeMatrix
    H: PrimeMatrix
    systematic: bool

    def __post_init__(self) -> None:
        prod = (self.G.entries @ self.H.entries.T) % self.p
        if prod.any():
            raise ValueError("G.H^T != 0")
        if rank_prime(self.G) != self.k:
            raise ValueError("generator rows dependent")

    @property
    def p(self) -> int:
        return self.G.p

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows


@dataclass(frozen=True)
class StandardArray:
    """syndrome tuple -> minimum-weight coset leader (ties: lexicographic)."""

    leaders: dict


def bc_from_parity(H: PrimeMatrix) -> LinearBlockCode:
    """Code with the given parity-check matrix; systematic when H = (A | I)."""
    r, n = H.rows, H.cols
    if rank_prime(H) != r:
        raise ValueError("parity-check matrix must have full row rank")
    k = n - r
    p = H.p
    tail = H.entries[:, k:]
    if np.array_equal(tail, np.eye(r, dtype=tail.dtype)):
        A = H.entries[:, :k]
        G = np.concatenate([np.eye(k, dtype=np.int64), (-A.T) % p], axis=1)
        return LinearBlockCode(G=PrimeMatrix(G, p), H=H, systematic=True)
    rref, pivots = _row_reduce_mod_p(H.entries, p)
    free = [c for c in range(n) if c not in pivots]
    rows = []
    for fc in free:
        v = np.zeros(n, dtype=np.int64)
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-int(rref[ri, fc])) % p
        rows.append(v)
    return LinearBlockCode(G=PrimeMatrix(np.array(rows), p), H=H, systematic=False)


def bc_repetition(n: int, p: int = 2) -> LinearBlockCode:
    """(n, 1) repetition code; H has a column of ones beside I_{n-1}."""
    if n < 2:
        raise ValueError("need n >= 2")
    H = np.concatenate([np.ones((n - 1, 1), dtype=np.int64),
                        np.eye(n - 1, dtype=np.int64)], axis=1)
    # the canonical form check in bc_from_parity does not apply; build directly
    G = PrimeMatrix(np.ones((1, n), dtype=np.int64), p)
    return LinearBlockCode(G=G, H=PrimeMatrix((-H) % p, p), systematic=True)


def bc_encode(code: LinearBlockCode, msg) -> list[int]:
    m = np.asarray(msg, dtype=np.int64)
    if m.shape != (code.k,):
        raise ValueError("message length must equal k")
    return list((m @ code.G.entries) % code.p)


def bc_syndrome(code: LinearBlockCode, y) -> tuple[int, ...]:
    v = np.asarray(y, dtype=np.int64)
    if v.shape != (code.n,):
        raise ValueError("word length must equal n")
    return tuple(int(x) for x in (code.H.entries @ v) % code.p)


def bc_codewords(code: LinearBlockCode) -> list[tuple[int, ...]]:
    if code.p ** code.k > ENUMERATION_LIMIT:
        raise ValueError("codeword set too large to enumerate")
    words = []
    for msg in itertools.product(range(code.p), repeat=code.k):
        words.append(tuple(bc_encode(code, msg)))
    return words


def bc_min_distance(code: LinearBlockCode) -> int:
    return min(sum(1 for v in w if v) for w in bc_codewords(code) if any(w))


def bc_build_standard_array(code: LinearBlockCode) -> StandardArray:
    if code.p ** code.n > ENUMERATION_LIMIT:
        raise ValueError("vector space too large to enumerate")
    total = code.p ** (code.n - code.k)
    leaders: dict = {}
    # Ties between minimum-weight leaders go to the smallest integer encoding
    # (coordinate 0 least significant, matching the field coefficient order).
    vectors = sorted(
        itertools.product(range(code.p), repeat=code.n),
        key=lambda v: (sum(1 for x in v if x), tuple(reversed(v))),
    )
    for v in vectors:
        s = bc_syndrome(code, v)
        if s not in leaders:
            leaders[s] = v
            if len(leaders) == total:
                break
    return StandardArray(leaders=leaders)


def bc_decode(code: LinearBlockCode, y, array: StandardArray | None = None):
    """Coset-leader decoding: returns (codeword, message)."""
    if array is None:
        array = bc_build_standard_array(code)
    e = array.leaders[bc_syndrome(code, y)]
    x = [(int(a) - int(b)) % code.p for a, b in zip(y, e)]
    if code.systematic:
        msg = x[: code.k]
    else:
        msg = solve_prime(
            PrimeMatrix(code.G.entries.T, code.p), x
        )
        assert msg is not None
    return x, list(msg)
