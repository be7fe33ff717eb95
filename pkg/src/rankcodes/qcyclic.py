"""q-Cyclic rank-distance codes.

A length-n code over GF(q^n) generated by a linearized polynomial G(z)
that right-divides z^[n] - z.  Codewords are the left multiples of G with
index degree below n; coordinate i of the vector form is the coefficient
of z^[i].  Systematic encoding places the message on the k top indices
and the parity on indices 0..n-k-1; when n-k >= k (or after suitable
shortening) the message is recoverable from the parity block alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldSpec
from .linpoly import (
    LinearizedPoly,
    lp_is_right_divisor,
    lp_right_divmod,
    lp_sub,
    lp_symb_mul,
)
from .ranklin import ExtMatrix


class NotADivisor(ValueError):
    """The proposed generator does not right-divide z^[n] - z."""


class NotInvertible(ValueError):
    """The code's dimensions do not allow parity-only message recovery."""


@dataclass(frozen=True)
class QCyclicCode:
    """[n, k] q-cyclic code: n is the extension degree, k = n - deg G."""

    spec: FieldSpec
    Gpoly: LinearizedPoly
    Hpoly: LinearizedPoly

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def k(self) -> int:
        return self.n - self.Gpoly.degree


@dataclass(frozen=True)
class ShortenedCode:
    """The base code restricted to words with t leading message symbols zero."""

    base: QCyclicCode
    t: int

    def __post_init__(self) -> None:
        if not 0 < self.t < self.base.k:
            raise ValueError("need 0 < t < k")

    @property
    def spec(self) -> FieldSpec:
        return self.base.spec

    @property
    def n(self) -> int:
        return self.base.n - self.t

    @property
    def k(self) -> int:
        return self.base.k - self.t


def qc_new(spec: FieldSpec, Gpoly: LinearizedPoly) -> QCyclicCode:
    if Gpoly.is_zero():
        raise ValueError("generator polynomial must be nonzero")
    ok, H = lp_is_right_divisor(Gpoly, spec.n)
    if not ok:
        raise NotADivisor("generator must right-divide z^[n] - z")
    return QCyclicCode(spec=spec, Gpoly=Gpoly, Hpoly=H)


def qc_systematic_encode(code, u: LinearizedPoly) -> LinearizedPoly:
    """g = u - (u right-mod G): message kept on the top k indices, parity below."""
    if isinstance(code, ShortenedCode):
        base, t = code.base, code.t
        lo, hi = base.n - base.k, base.n - 1 - t
    else:
        base, t = code, 0
        lo, hi = base.n - base.k, base.n - 1
    if any(not lo <= i <= hi for i in u.coeffs):
        raise ValueError(f"message must be supported on indices {lo}..{hi}")
    _, f = lp_right_divmod(u, base.Gpoly)
    return lp_sub(u, f)


def qc_parity(code, u: LinearizedPoly) -> LinearizedPoly:
    """The parity block of the systematic encoding of u (indices 0..n-k-1)."""
    base = code.base if isinstance(code, ShortenedCode) else code
    g = qc_systematic_encode(code, u)
    return LinearizedPoly(base.spec, {i: c for i, c in g.coeffs.items() if i < base.n - base.k})


def qc_word(code, g: LinearizedPoly) -> list:
    """Vector form: coordinate i is the coefficient of z^[i]."""
    n = code.n
    return [g.coeff(i) for i in range(n)]


def qc_is_codeword(code: QCyclicCode, word) -> bool:
    g = LinearizedPoly(code.spec, dict(enumerate(word)))
    _, r = lp_right_divmod(g, code.Gpoly)
    return r.is_zero()


def qc_systematic_matrices(code: QCyclicCode) -> tuple[ExtMatrix, ExtMatrix]:
    """(G_sys, H_sys) with G_sys = [-F | I_k], H_sys = [I_{n-k} | F^T].

    Row i of F holds the remainder coefficients of z^[n-k+i] right-mod G.
    """
    spec, n, k = code.spec, code.n, code.k
    zero, one = spec.zero(), spec.one()
    F_rows = []
    for i in range(k):
        _, f = lp_right_divmod(LinearizedPoly.monomial(spec, n - k + i), code.Gpoly)
        F_rows.append([f.coeff(j) for j in range(n - k)])
    G_sys = ExtMatrix.from_rows(
        [[-c for c in F_rows[i]] + [one if j == i else zero for j in range(k)]
         for i in range(k)]
    )
    H_sys = ExtMatrix.from_rows(
        [[one if j == p else zero for j in range(n - k)] + [F_rows[i][p] for i in range(k)]
         for p in range(n - k)]
    )
    return G_sys, H_sys


def qc_shorten(code: QCyclicCode, t: int) -> ShortenedCode:
    if not t < code.k:
        raise ValueError("can shorten at most k-1 message symbols")
    return ShortenedCode(base=code, t=t)


def qc_shorten_word(sc: ShortenedCode, word) -> list:
    """Drop the t leading coordinates (which must be zero) of a base codeword."""
    if any(not w.is_zero() for w in word[sc.base.n - sc.t:]):
        raise ValueError("word is not in the shortened code")
    return list(word[: sc.base.n - sc.t])


def qc_is_invertible(code, t0: int | None = None) -> bool:
    """Parity determines the message iff n-k >= k, or after shortening by
    t0 with 2k-n <= t0 < k."""
    base = code.base if isinstance(code, ShortenedCode) else code
    if t0 is None and isinstance(code, ShortenedCode):
        t0 = code.t
    n, k = base.n, base.k
    if t0 is None:
        return n - k >= k
    return 2 * k - n <= t0 < k


def qc_invert(code, f: LinearizedPoly) -> LinearizedPoly:
    """Recover the message from its parity block: u = z^[n-k] * ((z^[k]*f) mod G)."""
    if not qc_is_invertible(code):
        raise NotInvertible("parity block does not determine the message")
    base = code.base if isinstance(code, ShortenedCode) else code
    spec, n, k = base.spec, base.n, base.k
    shifted = lp_symb_mul(LinearizedPoly.monomial(spec, k), f)
    _, u_prime = lp_right_divmod(shifted, base.Gpoly)
    return lp_symb_mul(LinearizedPoly.monomial(spec, n - k), u_prime)
