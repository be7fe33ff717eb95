"""Integer rank-distance codes over Z_2m (2m even and squarefree).

The rank of a vector over Z_2m is the GF(2)-rank of the matrix of binary
expansions of its coordinates.  With [j] = 2^j, a parity-check matrix with
rows (h_1^[j], ..., h_n^[j]) defines a maximum integer rank-distance (MIRD)
code of designed distance d, mirroring the Gabidulin construction but over
a ring with zero divisors.

Decoding follows the syndrome / error-span-polynomial route where ring
division permits (all required divisors must be units); when a zero divisor
blocks a division step the decoder falls back to a bounded exhaustive
search over unit-magnitude error patterns e = E.N (E a Z2-independent
tuple of units, N binary of full rank), which is small at the scales
where these codes are defined (2m <= 2^N0, n <= N0).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .mrd import DETECTED
from .ranklin import PrimeMatrix, rank_prime


class NotAUnit(ValueError):
    """Inverse requested for an element sharing a factor with the modulus."""


class NoUniqueCompletion(ValueError):
    """The check-symbol system is singular in some CRT component."""


@dataclass(frozen=True)
class Z2mSpec:
    two_m: int

    def __post_init__(self) -> None:
        if self.two_m < 2 or self.two_m % 2:
            raise ValueError("modulus must be even")
        m = self.two_m // 2
        if m % 2 == 0:
            raise ValueError("modulus must be squarefree")
        for p in self.odd_primes:
            if m % (p * p) == 0:
                raise ValueError("modulus must be squarefree")

    @property
    def N0(self) -> int:
        return math.ceil(math.log2(self.two_m))

    @property
    def odd_primes(self) -> tuple[int, ...]:
        m = self.two_m // 2
        primes = []
        f = 3
        while f * f <= m:
            if m % f == 0:
                primes.append(f)
                while m % f == 0:
                    m //= f
            f += 2
        if m > 1:
            primes.append(m)
        return tuple(primes)

    def elements(self) -> range:
        return range(self.two_m)

    def units(self) -> list[int]:
        return [u for u in range(1, self.two_m) if math.gcd(u, self.two_m) == 1]


def ring_add(spec: Z2mSpec, a: int, b: int) -> int:
    return (a + b) % spec.two_m


def ring_mul(spec: Z2mSpec, a: int, b: int) -> int:
    return (a * b) % spec.two_m


def ring_unit_inv(spec: Z2mSpec, a: int) -> int:
    if math.gcd(a % spec.two_m, spec.two_m) != 1:
        raise NotAUnit(f"{a} is not a unit mod {spec.two_m}")
    return pow(a % spec.two_m, -1, spec.two_m)


def _frob(spec: Z2mSpec, a: int, j: int = 1) -> int:
    """a^[j] = a^(2^j) mod 2m (forward powers only; no inverse exists here)."""
    return pow(a % spec.two_m, 1 << j, spec.two_m)


# -- binary expansion and rank ---------------------------------------------------------

def mird_expand(spec: Z2mSpec, x: Sequence[int]) -> PrimeMatrix:
    """N0 x n binary matrix; column i holds x_i's bits, most significant first."""
    n0 = spec.N0
    cols = []
    for v in x:
        bits = [(v >> (n0 - 1 - r)) & 1 for r in range(n0)]
        cols.append(bits)
    return PrimeMatrix(np.array(cols, dtype=np.int64).T, 2)


def mird_rank(spec: Z2mSpec, x: Sequence[int]) -> int:
    return rank_prime(mird_expand(spec, x))


# -- the code ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MirdCode:
    spec: Z2mSpec
    h: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        n = len(self.h)
        if not 1 <= n <= self.spec.N0:
            raise ValueError("need 1 <= n <= N0")
        if not 2 <= self.d <= n:
            raise ValueError("need 2 <= d <= n")
        if mird_rank(self.spec, self.h) != n:
            raise ValueError("h must be linearly independent over Z2")

    @property
    def n(self) -> int:
        return len(self.h)

    @property
    def k(self) -> int:
        return self.n - self.d + 1


def mird_parity(code: MirdCode) -> list[list[int]]:
    """(d-1) x n matrix, entry (j, i) = h_i^(2^j) mod 2m."""
    return [
        [_frob(code.spec, hi, j) for hi in code.h] for j in range(code.d - 1)
    ]


def mird_syndrome(code: MirdCode, y: Sequence[int]) -> tuple[int, ...]:
    if len(y) != code.n:
        raise ValueError("word length must equal n")
    H = mird_parity(code)
    tm = code.spec.two_m
    return tuple(sum(r * v for r, v in zip(row, y)) % tm for row in H)


def mird_is_codeword(code: MirdCode, x: Sequence[int]) -> bool:
    return not any(mird_syndrome(code, x))


# -- systematic encoding via CRT --------------------------------------------------------

def _crt_solve(spec: Z2mSpec, A: list[list[int]], b: list[int]) -> list[int]:
    """Unique solution of A x = b over Z_2m by solving each prime component.

    Raises NoUniqueCompletion when any component matrix is singular mod its
    prime (note: for d >= 3 the mod-2 component is always singular, because
    squaring is the identity on Z_2, so all parity rows collapse to the
    first one).
    """
    from .ranklin import solve_prime

    rows, cols = len(A), len(A[0])
    residues: list[list[int]] = []
    moduli = (2,) + spec.odd_primes
    for q in moduli:
        Aq = PrimeMatrix(np.array(A, dtype=np.int64) % q, q)
        if rows != cols or rank_prime(Aq) != cols:
            raise NoUniqueCompletion(f"check system singular mod {q}")
        sol = solve_prime(Aq, [v % q for v in b])
        assert sol is not None
        residues.append([int(v) for v in sol])
    out = []
    for i in range(cols):
        x = 0
        for q, res in zip(moduli, residues):
            rest = spec.two_m // q
            x = (x + res[i] * rest * pow(rest, -1, q)) % spec.two_m
        out.append(x)
    return out


def mird_systematic_encode(code: MirdCode, info: Sequence[int]) -> list[int]:
    """Codeword with the k information symbols in the last k positions.

    The d-1 check symbols occupy the first positions and are the unique
    solution of H x^T = 0 given the information part.
    """
    if len(info) != code.k:
        raise ValueError("info length must equal k")
    tm = code.spec.two_m
    info = [v % tm for v in info]
    H = mird_parity(code)
    r = code.d - 1
    A = [row[:r] for row in H]
    b = [
        (-sum(row[r + j] * info[j] for j in range(code.k))) % tm for row in H
    ]
    checks = _crt_solve(code.spec, A, b)
    word = checks + list(info)
    assert mird_is_codeword(code, word)
    return word


# -- decoding ---------------------------------------------------------------------------

def _rlp_eval(spec: Z2mSpec, coeffs: dict[int, int], u: int) -> int:
    return sum(c * _frob(spec, u, i) for i, c in coeffs.items()) % spec.two_m


def _rlp_degree(coeffs: dict[int, int]) -> int:
    live = [i for i, c in coeffs.items() if c]
    return max(live) if live else -1


def _rlp_symb_mul(spec: Z2mSpec, f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, fi in f.items():
        for j, gj in g.items():
            k = i + j
            out[k] = (out.get(k, 0) + fi * _frob(spec, gj, i)) % spec.two_m
    return {k: v for k, v in out.items() if v}


def _rlp_sub(spec: Z2mSpec, f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
    out = dict(f)
    for i, gi in g.items():
        out[i] = (out.get(i, 0) - gi) % spec.two_m
    return {k: v for k, v in out.items() if v}


def _rlp_divmod(spec: Z2mSpec, F: dict[int, int], G: dict[int, int]):
    """Right division F = Q*G + R.  Every leading-coefficient division must
    be by a unit; returns None when a zero divisor blocks a step."""
    dg = _rlp_degree(G)
    lc_g = G[dg]
    Q: dict[int, int] = {}
    R = dict(F)
    while _rlp_degree(R) >= dg:
        dr = _rlp_degree(R)
        shift = dr - dg
        denom = _frob(spec, lc_g, shift)
        if math.gcd(denom, spec.two_m) != 1:
            return None
        q = (R[dr] * pow(denom, -1, spec.two_m)) % spec.two_m
        Q[shift] = q
        R = _rlp_sub(spec, R, _rlp_symb_mul(spec, {shift: q}, G))
    return Q, {k: v for k, v in R.items() if v}


def _pick_independent_units(spec: Z2mSpec, roots: list[int], m: int) -> list[int] | None:
    chosen: list[int] = []
    for r in roots:
        if mird_rank(spec, chosen + [r]) == len(chosen) + 1:
            chosen.append(r)
            if len(chosen) == m:
                return chosen
    return None


def _binary_matrices(m: int, n: int):
    for bits in itertools.product(range(2), repeat=m * n):
        yield [list(bits[i * n:(i + 1) * n]) for i in range(m)]


def _error_candidates(code: MirdCode, m: int, s: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All e = E.N of rank exactly m with unit magnitudes matching syndrome s."""
    spec = code.spec
    tm = spec.two_m
    found: set[tuple[int, ...]] = set()
    units = spec.units()
    for E in itertools.combinations(units, m):
        if mird_rank(spec, list(E)) != m:
            continue
        for N in _binary_matrices(m, code.n):
            if rank_prime(PrimeMatrix(np.array(N, dtype=np.int64), 2)) != m:
                continue
            e = tuple(
                sum(E[i] * N[i][j] for i in range(m)) % tm for j in range(code.n)
            )
            if mird_rank(spec, e) != m:
                continue
            if mird_syndrome(code, e) == s:
                found.add(e)
    return sorted(found)


def _decode_pipeline(code: MirdCode, s: tuple[int, ...]):
    """Syndrome polynomial -> Euclid chain -> unit roots -> magnitudes.

    Returns an error vector, or None when a ring division hits a zero
    divisor or any consistency check fails (the caller then falls back to
    the bounded exhaustive search).
    """
    spec = code.spec
    tm = spec.two_m
    d1 = code.d - 1
    cap = d1 // 2
    stop = math.ceil(d1 / 2)

    F_prev = {d1: 1}
    F_cur = {p: s[p] for p in range(d1) if s[p]}
    A_prev: dict[int, int] = {0: 1}
    A_cur: dict[int, int] = {}
    steps = 0
    while _rlp_degree(F_cur) >= stop:
        div = _rlp_divmod(spec, F_prev, F_cur)
        if div is None:
            return None
        Q, R = div
        F_prev, F_cur = F_cur, R
        A_prev, A_cur = (
            _rlp_sub(spec, _rlp_symb_mul(spec, Q, A_prev), {k: -v for k, v in A_cur.items()}),
            A_prev,
        )
        steps += 1
    m = steps
    if not 1 <= m <= cap:
        return None
    Lam = A_prev
    dl = _rlp_degree(Lam)
    if dl != m or math.gcd(Lam.get(dl, 0), tm) != 1:
        return None
    gamma = pow(Lam[dl], -1, tm)
    Lam = {k: (v * gamma) % tm for k, v in Lam.items()}

    roots = [u for u in spec.units() if _rlp_eval(spec, Lam, u) == 0]
    E = _pick_independent_units(spec, roots, m)
    if E is None:
        return None

    if m == 1:
        if math.gcd(E[0], tm) != 1:
            return None
        x1 = (s[0] * pow(E[0], -1, tm)) % tm
        xs = [x1]
        for p in range(d1):
            if (E[0] * _frob(spec, x1, p)) % tm != s[p]:
                return None
    else:
        # the triangular elimination needs 2-adic square roots that are not
        # unique over Z_2m; at these sizes a direct search for N is exact
        return _search_N(code, E, s)

    # x_p = sum_j N_pj h_j with binary N: recover each row by search
    N = []
    for xp in xs:
        row = None
        for v in itertools.product(range(2), repeat=code.n):
            if sum(vj * hj for vj, hj in zip(v, code.h)) % tm == xp:
                row = list(v)
                break
        if row is None:
            return None
        N.append(row)
    if rank_prime(PrimeMatrix(np.array(N, dtype=np.int64), 2)) != m:
        return None
    e = tuple(sum(E[i] * N[i][j] for i in range(m)) % tm for j in range(code.n))
    if mird_rank(spec, e) != m or mird_syndrome(code, e) != s:
        return None
    return e


def _search_N(code: MirdCode, E: list[int], s: tuple[int, ...]):
    tm = code.spec.two_m
    m = len(E)
    for N in _binary_matrices(m, code.n):
        if rank_prime(PrimeMatrix(np.array(N, dtype=np.int64), 2)) != m:
            continue
        e = tuple(sum(E[i] * N[i][j] for i in range(m)) % tm for j in range(code.n))
        if mird_rank(code.spec, e) == m and mird_syndrome(code, e) == s:
            return e
    return None


def mird_decode(code: MirdCode, y: Sequence[int]):
    """Correct a unit-magnitude error of rank <= (d-1)/2, or DETECTED.

    Tries the algebraic pipeline first; when zero divisors block it, falls
    back to the exhaustive pattern search, requiring a unique answer at the
    smallest achievable rank.
    """
    tm = code.spec.two_m
    y = [v % tm for v in y]
    s = mird_syndrome(code, y)
    if not any(s):
        return list(y), tuple([0] * code.n)

    e = _decode_pipeline(code, s)
    if e is None:
        cap = (code.d - 1) // 2
        for m in range(1, cap + 1):
            cands = _error_candidates(code, m, s)
            if len(cands) == 1:
                e = cands[0]
                break
            if len(cands) > 1:
                return DETECTED  # ambiguous at the minimum rank
    if e is None:
        return DETECTED
    x = [(v - ev) % tm for v, ev in zip(y, e)]
    if not mird_is_codeword(code, x):
        return DETECTED
    return x, e
