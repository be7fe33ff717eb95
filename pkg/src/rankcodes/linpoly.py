"""Linearized (q-)polynomial algebra.

A q-polynomial F(z) = sum f_i z^[i] with [i] = p^i evaluates GF(p)-linearly
and multiplies by composition (the symbolic product F * G = F(G(z))),
making the set a non-commutative ring.  Right division, the generalized
Euclidean chain with auxiliary sequences, and kernel-based root spaces
drive the MRD and q-cyclic decoders.

Degrees are reported in index units (the paper's deg in [i] steps).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .gf import FieldElement, FieldSpec, format_element, frob, parse_element
from .ranklin import PrimeMatrix, _row_reduce_mod_p


@dataclass(frozen=True)
class LinearizedPoly:
    """coeffs maps index i to the (nonzero) coefficient of z^[i]."""

    spec: FieldSpec
    coeffs: dict[int, FieldElement] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {i: c for i, c in self.coeffs.items() if not c.is_zero()}
        if any(i < 0 for i in clean):
            raise ValueError("negative term index")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_terms(cls, spec: FieldSpec, terms: dict[int, FieldElement]) -> "LinearizedPoly":
        return cls(spec, dict(terms))

    @classmethod
    def zero(cls, spec: FieldSpec) -> "LinearizedPoly":
        return cls(spec, {})

    @classmethod
    def monomial(cls, spec: FieldSpec, index: int, coeff: FieldElement | None = None) -> "LinearizedPoly":
        return cls(spec, {index: spec.one() if coeff is None else coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Top index; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs.get(i, self.spec.zero())

    def leading(self) -> FieldElement:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[self.degree]

    def monic(self) -> "LinearizedPoly":
        inv = self.leading().inverse()
        return LinearizedPoly(self.spec, {i: c * inv for i, c in self.coeffs.items()})

    def scale(self, c: FieldElement) -> "LinearizedPoly":
        return LinearizedPoly(self.spec, {i: c * v for i, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearizedPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted((i, c.val) for i, c in self.coeffs.items())))

    def __str__(self) -> str:
        return format_linpoly(self)


def lp_add(F: LinearizedPoly, G: LinearizedPoly) -> LinearizedPoly:
    out = dict(F.coeffs)
    for i, c in G.coeffs.items():
        out[i] = out.get(i, F.spec.zero()) + c
    return LinearizedPoly(F.spec, out)


def lp_neg(F: LinearizedPoly) -> LinearizedPoly:
    return LinearizedPoly(F.spec, {i: -c for i, c in F.coeffs.items()})


def lp_sub(F: LinearizedPoly, G: LinearizedPoly) -> LinearizedPoly:
    return lp_add(F, lp_neg(G))


def lp_symb_mul(F: LinearizedPoly, G: LinearizedPoly) -> LinearizedPoly:
    """Symbolic product F * G = F(G(z)); coefficient k = sum f_i frob(g_j, i)."""
    out: dict[int, FieldElement] = {}
    zero = F.spec.zero()
    for i, fi in F.coeffs.items():
        for j, gj in G.coeffs.items():
            k = i + j
            out[k] = out.get(k, zero) + fi * frob(gj, i)
    return LinearizedPoly(F.spec, out)


def lp_eval(F: LinearizedPoly, a: FieldElement) -> FieldElement:
    acc = F.spec.zero()
    for i, c in F.coeffs.items():
        acc = acc + c * frob(a, i)
    return acc


def lp_right_divmod(F: LinearizedPoly, G: LinearizedPoly) -> tuple[LinearizedPoly, LinearizedPoly]:
    """Q, R with F = Q * G + R and deg R < deg G (right division)."""
    if G.is_zero():
        raise ZeroDivisionError("right division by the zero polynomial")
    spec = F.spec
    q: dict[int, FieldElement] = {}
    rem = F
    g_deg = G.degree
    g_lead = G.leading()
    while not rem.is_zero() and rem.degree >= g_deg:
        shift = rem.degree - g_deg
        coeff = rem.leading() / frob(g_lead, shift)
        q[shift] = q.get(shift, spec.zero()) + coeff
        term = LinearizedPoly.monomial(spec, shift, coeff)
        rem = lp_sub(rem, lp_symb_mul(term, G))
    return LinearizedPoly(spec, q), rem


@dataclass(frozen=True)
class EuclidChain:
    """Remainders F_i, quotients G_i, and auxiliary sequences A_i, B_i.

    F[i-1] = G[i] * F[i] + F[i+1]; the auxiliaries satisfy
    F[i] = (-1)^i (B[i-1] * F[0] - A[i-1] * F[1]), verified at construction.
    """

    F: tuple[LinearizedPoly, ...]
    G: tuple[LinearizedPoly, ...]
    A: tuple[LinearizedPoly, ...]
    B: tuple[LinearizedPoly, ...]

    @property
    def m(self) -> int:
        """Number of division steps minus one: F[m+1] is the final remainder."""
        return len(self.F) - 2


def lp_euclid_chain(F0: LinearizedPoly, F1: LinearizedPoly, stop_degree: int) -> EuclidChain:
    """Right-division Euclid until deg F_{m+1} < stop_degree <= deg F_m."""
    if F1.is_zero():
        raise ZeroDivisionError("Euclid chain requires F1 != 0")
    if F1.degree >= F0.degree:
        raise ValueError("Euclid chain requires deg F1 < deg F0")
    spec = F0.spec
    one = LinearizedPoly.monomial(spec, 0)
    zero = LinearizedPoly.zero(spec)
    Fs = [F0, F1]
    Gs: list[LinearizedPoly] = []
    # A tracks F1's coefficient, B tracks F0's: F[i+1] = B_i * F0 + A_i * F1 in
    # signed form; we keep the unsigned pair and verify the (-1)^i identity below.
    A_prev, A_cur = zero, one   # A_{-1}, A_0
    B_prev, B_cur = one, zero   # B_{-1}, B_0
    As = [A_cur]
    Bs = [B_cur]
    while Fs[-1].degree >= stop_degree and not Fs[-1].is_zero():
        q, r = lp_right_divmod(Fs[-2], Fs[-1])
        Gs.append(q)
        Fs.append(r)
        A_prev, A_cur = A_cur, lp_add(A_prev, lp_symb_mul(q, A_cur))
        B_prev, B_cur = B_cur, lp_add(B_prev, lp_symb_mul(q, B_cur))
        As.append(A_cur)
        Bs.append(B_cur)
    chain = EuclidChain(tuple(Fs), tuple(Gs), tuple(As), tuple(Bs))
    _verify_chain(chain, F0, F1)
    return chain


def _verify_chain(chain: EuclidChain, F0: LinearizedPoly, F1: LinearizedPoly) -> None:
    spec = F0.spec
    minus_one = -spec.one()
    for i in range(1, len(chain.F)):
        # F_i = (-1)^i (B_{i-1} * F0 - A_{i-1} * F1)
        lhs = chain.F[i]
        rhs = lp_sub(lp_symb_mul(chain.B[i - 1], F0), lp_symb_mul(chain.A[i - 1], F1))
        if i % 2:
            rhs = rhs.scale(minus_one)
        if lhs != rhs:
            raise AssertionError("Euclid auxiliary-sequence identity failed")


def lp_root_space(F: LinearizedPoly) -> list[FieldElement]:
    """GF(p)-basis of {a : F(a) = 0}, via the kernel of the evaluation map."""
    if F.is_zero():
        raise ValueError("root space of the zero polynomial is the whole field")
    spec = F.spec
    n, p = spec.n, spec.p
    # Column j = coefficient expansion of F(basis_j) for the polynomial basis x^j.
    cols = []
    for j in range(n):
        b = spec.from_coeffs([1 if i == j else 0 for i in range(n)])
        cols.append(list(lp_eval(F, b).coeffs))
    mat = np.array(cols, dtype=np.int64).T % p
    rref, pivots = _row_reduce_mod_p(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        coeffs = [0] * n
        coeffs[fc] = 1
        for r, pc in enumerate(pivots):
            coeffs[pc] = (-int(rref[r, fc])) % p
        basis.append(spec.from_coeffs(coeffs))
    return basis


def lp_roots_exhaustive(F: LinearizedPoly) -> set[FieldElement]:
    """All roots by direct evaluation (test oracle; p^n <= 2^10)."""
    if F.spec.size > 1 << 10:
        raise ValueError("exhaustive root search limited to p^n <= 2^10")
    return {a for a in F.spec.elements() if lp_eval(F, a).is_zero()}


def lp_is_right_divisor(G: LinearizedPoly, n: int) -> tuple[bool, LinearizedPoly | None]:
    """Does G right-divide z^[n] - z?  Returns (flag, quotient H or None)."""
    spec = G.spec
    target = lp_sub(LinearizedPoly.monomial(spec, n), LinearizedPoly.monomial(spec, 0))
    q, r = lp_right_divmod(target, G)
    if r.is_zero():
        return True, q
    return False, None


# -- text format --------------------------------------------------------------------

def format_linpoly(F: LinearizedPoly) -> str:
    """'a^24*z[0] + a^3*z[1] + ...' in increasing index order; '0' if zero."""
    if F.is_zero():
        return "0"
    return " + ".join(
        f"{format_element(F.coeffs[i])}*z[{i}]" for i in sorted(F.coeffs)
    )


def parse_linpoly(spec: FieldSpec, text: str) -> LinearizedPoly:
    text = text.strip()
    if text == "0":
        return LinearizedPoly.zero(spec)
    terms: dict[int, FieldElement] = {}
    for part in text.split("+"):
        part = part.strip()
        coeff_txt, idx_txt = part.split("*z[")
        idx = int(idx_txt.rstrip("]"))
        coeff = parse_element(spec, coeff_txt)
        terms[idx] = terms.get(idx, spec.zero()) + coeff
    return LinearizedPoly(spec, terms)
