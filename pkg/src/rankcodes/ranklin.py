"""Rank-metric linear algebra.

Expansion matrices and ranks over the prime subfield GF(p), matrix
algebra over the extension field GF(p^n) (product, inversion, solving,
null spaces), and a brute-force minimum-rank-distance oracle.

Prime-field matrices ride on numpy integer arrays; extension-field
matrices are small lists of FieldElement rows (exact arithmetic
dominates and dimensions stay tiny).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .gf import FieldElement, FieldError, FieldSpec, format_element, parse_element

BRUTE_FORCE_LIMIT = 1 << 20


# -- prime-field matrices ---------------------------------------------------------

@dataclass(frozen=True)
class PrimeMatrix:
    """A matrix over GF(p), entries in [0, p)."""

    entries: np.ndarray
    p: int

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries, dtype=np.int64) % self.p
        object.__setattr__(self, "entries", arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]


def expansion_matrix(x: Sequence[FieldElement]) -> PrimeMatrix:
    """N x n matrix whose column i expands x_i (coefficient of x^0 in row 0)."""
    if not x:
        raise ValueError("expansion_matrix needs a nonempty vector")
    spec = x[0].spec
    cols = [list(e.coeffs) for e in x]
    return PrimeMatrix(np.array(cols, dtype=np.int64).T, spec.p)


def _row_reduce_mod_p(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p); returns (rref, pivot column list)."""
    m = mat.copy() % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i, c]), None)
        if pivot is None:
            continue
        m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), p - 2, p)) % p if p > 2 else m[r]
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank_prime(M: PrimeMatrix) -> int:
    _, pivots = _row_reduce_mod_p(M.entries, M.p)
    return len(pivots)


def solve_prime(A: PrimeMatrix, b: Sequence[int]) -> list[int] | None:
    """One solution of A x = b over GF(p), or None if inconsistent."""
    p = A.p
    aug = np.concatenate([A.entries % p, (np.array(b, dtype=np.int64) % p)[:, None]], axis=1)
    rref, pivots = _row_reduce_mod_p(aug, p)
    if A.cols in pivots:
        return None
    x = [0] * A.cols
    for r, c in enumerate(pivots):
        x[c] = int(rref[r, -1])
    return x


def rank_norm(x: Sequence[FieldElement]) -> int:
    """GF(p)-rank of the expansion matrix of x (the rank norm r(x))."""
    if not x:
        return 0
    return rank_prime(expansion_matrix(x))


def rank_distance(x: Sequence[FieldElement], y: Sequence[FieldElement]) -> int:
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    return rank_norm([a - b for a, b in zip(x, y)])


def min_rank_distance_bruteforce(codewords: Iterable[Sequence[FieldElement]]) -> int:
    """Minimum rank norm over nonzero codewords (guarded enumeration)."""
    best: int | None = None
    count = 0
    for word in codewords:
        count += 1
        if count > BRUTE_FORCE_LIMIT:
            raise ValueError(f"codeword count exceeds brute-force guard {BRUTE_FORCE_LIMIT}")
        if all(e.is_zero() for e in word):
            continue
        r = rank_norm(word)
        if best is None or r < best:
            best = r
    if best is None:
        raise ValueError("code has no nonzero codewords")
    return best


# -- extension-field matrices -------------------------------------------------------

ExtRows = list[list[FieldElement]]


@dataclass(frozen=True)
class ExtMatrix:
    """A rectangular matrix over GF(p^n); all entries share one FieldSpec."""

    rows_data: tuple[tuple[FieldElement, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows_data)
        if not rows or not rows[0]:
            raise ValueError("ExtMatrix must be nonempty")
        width = len(rows[0])
        spec = rows[0][0].spec
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged ExtMatrix")
            for e in r:
                if e.spec != spec:
                    raise FieldError("mixed field specs in ExtMatrix")
        object.__setattr__(self, "rows_data", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[FieldElement]]) -> "ExtMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def spec(self) -> FieldSpec:
        return self.rows_data[0][0].spec

    @property
    def rows(self) -> int:
        return len(self.rows_data)

    @property
    def cols(self) -> int:
        return len(self.rows_data[0])

    def row(self, i: int) -> list[FieldElement]:
        return list(self.rows_data[i])

    def transpose(self) -> "ExtMatrix":
        return ExtMatrix.from_rows(list(zip(*self.rows_data)))

    def __getitem__(self, idx: tuple[int, int]) -> FieldElement:
        return self.rows_data[idx[0]][idx[1]]


def ext_identity(spec: FieldSpec, n: int) -> ExtMatrix:
    one, zero = spec.one(), spec.zero()
    return ExtMatrix.from_rows([[one if i == j else zero for j in range(n)] for i in range(n)])


def ext_mul(A: ExtMatrix, B: ExtMatrix) -> ExtMatrix:
    if A.cols != B.rows:
        raise ValueError("inner dimensions disagree")
    zero = A.spec.zero()
    out = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            acc = zero
            for k in range(A.cols):
                acc = acc + A[i, k] * B[k, j]
            row.append(acc)
        out.append(row)
    return ExtMatrix.from_rows(out)


def ext_vec_mat(v: Sequence[FieldElement], M: ExtMatrix) -> list[FieldElement]:
    """Row vector times matrix."""
    return ext_mul(ExtMatrix.from_rows([list(v)]), M).row(0)


def _gauss_jordan(aug: ExtRows, lead_cols: int) -> tuple[ExtRows, list[int]]:
    """In-place Gauss-Jordan over the extension field on the first lead_cols columns."""
    rows = len(aug)
    pivots: list[int] = []
    r = 0
    for c in range(lead_cols):
        pivot = next((i for i in range(r, rows) if not aug[i][c].is_zero()), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [e * inv for e in aug[r]]
        for i in range(rows):
            if i != r and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return aug, pivots


def ext_rank(A: ExtMatrix) -> int:
    work = [list(r) for r in A.rows_data]
    _, pivots = _gauss_jordan(work, A.cols)
    return len(pivots)


def ext_inverse(A: ExtMatrix) -> ExtMatrix:
    if A.rows != A.cols:
        raise ValueError("only square matrices invert")
    n = A.rows
    ident = ext_identity(A.spec, n)
    aug = [A.row(i) + ident.row(i) for i in range(n)]
    aug, pivots = _gauss_jordan(aug, n)
    if len(pivots) != n:
        raise ValueError("singular matrix")
    return ExtMatrix.from_rows([row[n:] for row in aug])


def ext_solve(A: ExtMatrix, b: Sequence[FieldElement]) -> list[FieldElement] | None:
    """One solution of A x = b over GF(p^n); None when inconsistent.

    Free variables, if any, are set to zero.
    """
    aug = [A.row(i) + [b[i]] for i in range(A.rows)]
    aug, pivots = _gauss_jordan(aug, A.cols)
    zero = A.spec.zero()
    for row in aug:
        if all(e.is_zero() for e in row[:-1]) and not row[-1].is_zero():
            return None
    x = [zero] * A.cols
    for r, c in enumerate(pivots):
        x[c] = aug[r][-1]
    return x


def ext_null_space(A: ExtMatrix) -> list[list[FieldElement]]:
    """Basis of the right null space {x : A x = 0} over GF(p^n)."""
    work = [list(r) for r in A.rows_data]
    rref, pivots = _gauss_jordan(work, A.cols)
    spec = A.spec
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [spec.zero()] * A.cols
        vec[fc] = spec.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        basis.append(vec)
    return basis


# -- text format --------------------------------------------------------------------

def format_matrix(A: ExtMatrix) -> str:
    """Rows separated by ';', entries by ',' in the field element format."""
    return ";".join(",".join(format_element(e) for e in row) for row in A.rows_data)


def parse_matrix(spec: FieldSpec, text: str) -> ExtMatrix:
    rows = [
        [parse_element(spec, tok) for tok in row.split(",")]
        for row in text.strip().split(";")
    ]
    return ExtMatrix.from_rows(rows)
