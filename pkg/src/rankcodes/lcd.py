"""Linear codes with complementary duals (LCD) and the 2-user F-adder channel.

A code generated by G is LCD exactly when G.G^T is nonsingular; the space
then splits as code + dual, and the orthogonal projector P = G^T(GG^T)^-1 G
separates a noiselessly added pair (codeword, dual word) back into its
components.  Over GF(2^n), a trace-orthogonal basis stacked in Frobenius
form gives GG^T = I, so every such MRD code is LCD.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldElement, FieldSpec, frob, trace_orthogonal_basis
from .ranklin import ExtMatrix, ext_inverse, ext_mul, ext_null_space, ext_rank, ext_vec_mat


class NotLcd(ValueError):
    """GG^T is singular: the code meets its dual nontrivially."""


@dataclass(frozen=True)
class LcdCode:
    G: ExtMatrix

    def __post_init__(self) -> None:
        if ext_rank(self.G) != self.G.rows:
            raise ValueError("generator rows must be linearly independent")

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows


def _gram(G: ExtMatrix) -> ExtMatrix:
    return ext_mul(G, G.transpose())


def is_lcd(G: ExtMatrix) -> bool:
    """True iff GG^T is nonsingular over the big field."""
    return ext_rank(_gram(G)) == G.rows


def projector(G: ExtMatrix) -> ExtMatrix:
    """The n x n orthogonal projector G^T (GG^T)^-1 G onto the row space of G."""
    if not is_lcd(G):
        raise NotLcd("projector requires a nonsingular GG^T")
    return ext_mul(ext_mul(G.transpose(), ext_inverse(_gram(G))), G)


def dual_generator(G: ExtMatrix) -> ExtMatrix:
    """(n-k) x n generator of the dual code, from the null space of G."""
    return ExtMatrix.from_rows(ext_null_space(G))


def trace_orthogonal_mrd(spec: FieldSpec, k: int) -> LcdCode:
    """LCD MRD code over GF(2^n): Frobenius rows of a trace-orthogonal basis.

    Row i is (b_1^[i], ..., b_n^[i]); tr(b_i b_j) = delta_ij forces GG^T = I.
    """
    if not 1 <= k <= spec.n:
        raise ValueError("need 1 <= k <= n")
    basis = trace_orthogonal_basis(spec)
    G = ExtMatrix.from_rows([[frob(b, i) for b in basis] for i in range(k)])
    return LcdCode(G=G)


def adder_combine(g1, g2) -> list[FieldElement]:
    """Noiseless 2-user F-adder channel output: the componentwise sum."""
    if len(g1) != len(g2):
        raise ValueError("inputs must have equal length")
    return [a + b for a, b in zip(g1, g2)]


def adder_split(r, code: LcdCode) -> tuple[list[FieldElement], list[FieldElement]]:
    """Recover (codeword, dual word) from their sum: g1 = r.P, g2 = r - g1."""
    P = projector(code.G)
    g1 = ext_vec_mat(list(r), P)
    g2 = [a - b for a, b in zip(r, g1)]
    return g1, g2
