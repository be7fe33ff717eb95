"""Walkthrough: q-cyclic codes as linearized-polynomial ideals, and LCD codes.

Part one builds a [5,3] q-cyclic code from its generator polynomial, prints
the systematic matrices, and inverts a parity image back to its message.
Part two checks the complementary-dual property and uses the projector to
split a two-user adder-channel sum into its codeword and dual-word parts.
"""

from rankcodes.gf import named_field
from rankcodes.lcd import LcdCode, adder_split, is_lcd, projector
from rankcodes.linpoly import LinearizedPoly
from rankcodes.qcyclic import (
    qc_invert,
    qc_new,
    qc_parity,
    qc_systematic_encode,
    qc_systematic_matrices,
)
from rankcodes.ranklin import ExtMatrix, format_matrix

F32 = named_field(2, 5)
A = F32.alpha

code = qc_new(F32, LinearizedPoly(F32, {0: A(24), 1: A(3), 2: A(2)}))
G, H = qc_systematic_matrices(code)
print("[5,3] q-cyclic code over GF(2^5)")
print("G =", format_matrix(G))
print("H =", format_matrix(H))

u = LinearizedPoly(F32, {4: A(5), 3: F32.one(), 2: A(23)})
g = qc_systematic_encode(code, u)
print("systematic encode of", u, "->", g)
print()

# an invertible code lets the receiver recover u from the check symbols alone
inv = qc_new(F32, LinearizedPoly(F32, {3: F32.one(), 2: A(10), 1: A(17), 0: A(13)}))
u2 = LinearizedPoly(F32, {4: F32.one(), 3: A(1)})
p = qc_parity(inv, u2)
print("parity image of", u2, "is", p)
print("inverting the parity gives back", qc_invert(inv, p))
print()

F81 = named_field(3, 4)
gen = ExtMatrix.from_rows([[F81.alpha(4), F81.alpha(65), F81.one()]])
code81 = LcdCode(G=gen)
print("[3,1] code over GF(3^4), generator", format_matrix(gen))
print("complementary dual:", is_lcd(gen))
print("projector onto the code:", format_matrix(projector(gen)))

total = [F81.alpha(24), F81.alpha(78), F81.alpha(35)]
g1, g2 = adder_split(total, code81)
print("adder-channel sum  :", ", ".join(str(s) for s in total))
print("codeword component :", ", ".join(str(s) for s in g1))
print("dual-word component:", ", ".join(str(s) for s in g2))
