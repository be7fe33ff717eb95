"""Arithmetic in GF(p^n) for small primes p and extension degrees n.

Elements are represented by an integer whose base-p digits are the
coefficients of the residue polynomial (coefficient of x^i = digit i,
x^0 least significant).  Each field precomputes log/antilog tables, so
multiplication and inversion are table lookups; construction fails with
a size error beyond p^n = 2^16.

The Frobenius bracket operator [i] = p^i, the trace down to GF(p),
dual bases under the trace bilinear form, and trace-orthogonal bases
(characteristic 2) are provided for the coding layers built on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

MAX_FIELD_SIZE = 1 << 16


def _poly_digits(val: int, p: int, n: int) -> tuple[int, ...]:
    """Base-p digits of val, least significant first, padded to length n."""
    out = []
    for _ in range(n):
        out.append(val % p)
        val //= p
    return tuple(out)


def _digits_val(digits: Iterable[int], p: int) -> int:
    val = 0
    for d in reversed(list(digits)):
        val = val * p + (d % p)
    return val


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Polynomial division over GF(p); coefficient lists, constant first."""
    num = [c % p for c in num]
    den = [c % p for c in den]
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    quot = [0] * max(len(num) - len(den) + 1, 0)
    rem = list(num)
    while len(rem) >= len(den) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(den):
            break
        shift = len(rem) - len(den)
        factor = (rem[-1] * inv_lead) % p
        quot[shift] = factor
        for i, c in enumerate(den):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division against all monic polynomials of degree <= deg/2."""
    n = len(poly) - 1
    for deg in range(1, n // 2 + 1):
        for tail in range(p**deg):
            cand = list(_poly_digits(tail, p, deg)) + [1]
            _, rem = _poly_divmod(list(poly), cand, p)
            if not rem:
                return False
    return True


class FieldError(ValueError):
    """Raised on invalid field construction or element misuse."""


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^n) defined by a primitive polynomial (coefficients constant-first)."""

    p: int
    n: int
    prim_poly: tuple[int, ...]
    # log/antilog tables, filled in __post_init__ (not part of equality).
    _exp: list[int] = field(default_factory=list, compare=False, repr=False)
    _log: dict[int, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        p, n = self.p, self.n
        poly = tuple(c % p for c in self.prim_poly)
        object.__setattr__(self, "prim_poly", poly)
        if len(poly) != n + 1 or poly[-1] != 1:
            raise FieldError(f"prim_poly must be monic of degree {n}")
        if p**n > MAX_FIELD_SIZE:
            raise FieldError(f"field size {p}^{n} exceeds table limit {MAX_FIELD_SIZE}")
        if not _is_irreducible(poly, p):
            raise FieldError("prim_poly is reducible over GF(p)")
        self._build_tables()

    def _build_tables(self) -> None:
        p, n = self.p, self.n
        order = p**n - 1
        exp = [0] * order
        log: dict[int, int] = {}
        val = 1
        for i in range(order):
            if val in log:
                raise FieldError("x is not a primitive element of prim_poly's field")
            exp[i] = val
            log[val] = i
            val = self._mul_by_x(val)
        if val != 1:
            raise FieldError("x is not a primitive element of prim_poly's field")
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    def _mul_by_x(self, val: int) -> int:
        """Multiply the residue polynomial by x, reducing by prim_poly."""
        p, n = self.p, self.n
        digits = list(_poly_digits(val, p, n))
        carry = digits[-1]
        digits = [0] + digits[:-1]
        if carry:
            for i in range(n):
                digits[i] = (digits[i] - carry * self.prim_poly[i]) % p
        return _digits_val(digits, p)

    # -- element constructors -------------------------------------------------
    @property
    def size(self) -> int:
        return self.p**self.n

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def alpha(self, k: int = 1) -> "FieldElement":
        """alpha^k for the primitive element alpha = x."""
        return FieldElement(self, self._exp[k % (self.size - 1)])

    def from_int(self, val: int) -> "FieldElement":
        if not 0 <= val < self.size:
            raise FieldError(f"element encoding {val} out of range for {self}")
        return FieldElement(self, val)

    def from_coeffs(self, coeffs: Iterable[int]) -> "FieldElement":
        digits = list(coeffs)
        if len(digits) != self.n:
            raise FieldError(f"expected {self.n} coefficients")
        return FieldElement(self, _digits_val(digits, self.p))

    def elements(self) -> Iterable["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.size))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.n})"


@dataclass(frozen=True, order=True)
class FieldElement:
    """An element of GF(p^n); `val` packs the coefficient vector base-p."""

    spec: FieldSpec = field(compare=False)
    val: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return _poly_digits(self.val, self.spec.p, self.spec.n)

    @property
    def log(self) -> int:
        if self.val == 0:
            raise FieldError("discrete log of zero")
        return self.spec._log[self.val]

    def is_zero(self) -> bool:
        return self.val == 0

    def _check(self, other: "FieldElement") -> None:
        if self.spec != other.spec:
            raise FieldError("elements from different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.spec.p
        if p == 2:
            return FieldElement(self.spec, self.val ^ other.val)
        digits = [(a + b) % p for a, b in zip(self.coeffs, other.coeffs)]
        return FieldElement(self.spec, _digits_val(digits, p))

    def __neg__(self) -> "FieldElement":
        p = self.spec.p
        if p == 2:
            return self
        digits = [(-a) % p for a in self.coeffs]
        return FieldElement(self.spec, _digits_val(digits, p))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        if self.val == 0 or other.val == 0:
            return FieldElement(self.spec, 0)
        order = self.spec.size - 1
        return FieldElement(self.spec, self.spec._exp[(self.log + other.log) % order])

    def inverse(self) -> "FieldElement":
        if self.val == 0:
            raise FieldError("zero has no multiplicative inverse")
        order = self.spec.size - 1
        return FieldElement(self.spec, self.spec._exp[(-self.log) % order])

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def scale(self, c: int) -> "FieldElement":
        """Multiply by an integer (prime-subfield) scalar."""
        c %= self.spec.p
        out = self.spec.zero()
        for _ in range(c):
            out = out + self
        return out

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<{format_element(self)} in {self.spec!r}>"


# -- spec-level operations ----------------------------------------------------

def felt_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def felt_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def felt_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def frob(a: FieldElement, i: int) -> FieldElement:
    """The bracket operator [i]: a^(p^i); i may be negative (mod n)."""
    if a.val == 0:
        return a
    spec = a.spec
    order = spec.size - 1
    exponent = pow(spec.p, i % spec.n, order)
    return FieldElement(spec, spec._exp[(a.log * exponent) % order])


def trace(a: FieldElement) -> int:
    """Trace down to GF(p), returned as an integer in [0, p)."""
    acc = a.spec.zero()
    cur = a
    for _ in range(a.spec.n):
        acc = acc + cur
        cur = frob(cur, 1)
    coeffs = acc.coeffs
    if any(coeffs[1:]):
        raise FieldError("trace left the prime subfield (broken field tables)")
    return coeffs[0]


def is_linearly_independent(vectors: Sequence[FieldElement]) -> bool:
    """True iff the coefficient expansions are independent over GF(p)."""
    if not vectors:
        return True
    spec = vectors[0].spec
    p = spec.p
    rows = [list(v.coeffs) for v in vectors]
    rank = 0
    for col in range(spec.n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p) if p > 2 else 1
        rows[rank] = [(c * inv) % p for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank == len(vectors)


def dual_basis(basis: Sequence[FieldElement]) -> list[FieldElement]:
    """The unique dual basis under tr(b_i * dual_j) = delta_ij."""
    spec = basis[0].spec
    n, p = spec.n, spec.p
    if len(basis) != n or not is_linearly_independent(basis):
        raise FieldError("dual_basis requires a basis of GF(p^n) over GF(p)")
    # Gram matrix T_ik = tr(b_i b_k) lives over GF(p); dual_j = sum_k inv(T)_jk b_k.
    gram = [[trace(basis[i] * basis[k]) for k in range(n)] for i in range(n)]
    inv = _invert_mod_p(gram, p)
    out = []
    for j in range(n):
        acc = spec.zero()
        for k in range(n):
            acc = acc + basis[k].scale(inv[j][k])
        out.append(acc)
    return out


def _invert_mod_p(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] % p), None)
        if pivot is None:
            raise FieldError("singular Gram matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], p - 2, p) if p > 2 else 1
        aug[col] = [(c * inv) % p for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def trace_orthogonal_basis(spec: FieldSpec) -> list[FieldElement]:
    """First (lexicographic, greedy with backtracking) basis with tr(b_i b_j) = delta_ij.

    Characteristic 2 only; existence is guaranteed there.
    """
    if spec.p != 2:
        raise FieldError("trace_orthogonal_basis requires p = 2")
    candidates = [FieldElement(spec, v) for v in range(1, spec.size)]

    def extend(chosen: list[FieldElement], start: int) -> list[FieldElement] | None:
        if len(chosen) == spec.n:
            return chosen
        for idx in range(start, len(candidates)):
            b = candidates[idx]
            if trace(b * b) != 1:
                continue
            if any(trace(b * c) != 0 for c in chosen):
                continue
            if not is_linearly_independent(chosen + [b]):
                continue
            found = extend(chosen + [b], idx + 1)
            if found is not None:
                return found
        return None

    result = extend([], 0)
    if result is None:
        raise FieldError(f"no trace-orthogonal basis found in {spec!r}")
    return result


# -- text formats ---------------------------------------------------------------

def format_element(a: FieldElement) -> str:
    """'0' for zero, 'a^k' otherwise (canonical power-of-alpha form)."""
    if a.val == 0:
        return "0"
    return f"a^{a.log}"


def parse_element(spec: FieldSpec, text: str) -> FieldElement:
    text = text.strip()
    if text == "0":
        return spec.zero()
    if text == "1":
        return spec.one()
    if text.startswith(("a^", "A^")):
        return spec.alpha(int(text[2:]))
    if text in ("a", "A"):
        return spec.alpha(1)
    raise FieldError(f"cannot parse field element {text!r}")


def format_field(spec: FieldSpec) -> str:
    poly = ",".join(str(c) for c in spec.prim_poly)
    return f"p={spec.p} n={spec.n} poly={poly}"


def parse_field(text: str) -> FieldSpec:
    """Parse 'p=2 n=8 poly=1,1,0,0,0,1,1,0,1' (constant-first coefficients)."""
    parts = dict(tok.split("=", 1) for tok in text.split())
    return FieldSpec(
        p=int(parts["p"]),
        n=int(parts["n"]),
        prim_poly=tuple(int(c) for c in parts["poly"].split(",")),
    )


# -- named fixtures -------------------------------------------------------------

_NAMED_POLYS = {
    ("gf", 2, 2): (1, 1, 1),          # x^2 + x + 1
    ("gf", 2, 3): (1, 1, 0, 1),       # x^3 + x + 1
    ("gf", 2, 4): (1, 1, 0, 0, 1),    # x^4 + x + 1
    ("gf", 2, 5): (1, 0, 1, 0, 0, 1), # x^5 + x^2 + 1
    ("gf", 2, 6): (1, 1, 0, 0, 0, 0, 1),     # x^6 + x + 1
    ("gf", 2, 7): (1, 1, 0, 0, 0, 0, 0, 1),  # x^7 + x + 1
    ("gf", 2, 8): (1, 1, 0, 0, 0, 1, 1, 0, 1),  # x^8 + x^6 + x^5 + x + 1
    ("gf", 3, 3): (1, 2, 0, 1),       # x^3 + 2x + 1
    ("gf", 3, 4): (2, 1, 0, 0, 1),    # x^4 + x + 2
}


@lru_cache(maxsize=None)
def named_field(p: int, n: int) -> FieldSpec:
    """The book's standard field for GF(p^n); errors if none is on record."""
    try:
        poly = _NAMED_POLYS[("gf", p, n)]
    except KeyError:
        raise FieldError(f"no named primitive polynomial on record for GF({p}^{n})")
    return FieldSpec(p=p, n=n, prim_poly=poly)
