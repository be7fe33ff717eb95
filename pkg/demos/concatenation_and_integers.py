"""Walkthrough: concatenated rank-metric codes and integer codes over Z_2m.

The concatenated construction runs an outer rank-distance code over GF(2^kb)
through a binary (nb, kb) inner block code, giving codeword matrices whose
GF(2)-rank is the distance that matters.  The integer construction plays the
same Frobenius game with squaring mod 2m in place of the field Frobenius.
"""

import numpy as np

from rankcodes.blockcode import bc_from_parity
from rankcodes.concat import CrmCode, crm_decode, crm_encode, crm_min_distance
from rankcodes.gf import named_field
from rankcodes.mird import MirdCode, Z2mSpec, mird_decode, mird_parity
from rankcodes.ranklin import ExtMatrix, PrimeMatrix

F4 = named_field(2, 2)
inner = bc_from_parity(
    PrimeMatrix(np.array([[1, 0, 1, 0], [1, 1, 0, 1]], dtype=np.int64), 2)
)
code = CrmCode(outer_G=ExtMatrix.from_rows([[F4.one(), F4.zero()]]), inner=inner)

print("outer [2,1] code over GF(4), inner (4,2) binary block code")
for m in F4.elements():
    Y = crm_encode(code, [m])
    rows = ";".join("".join(str(b) for b in row) for row in Y.entries.tolist())
    print(f"  message {str(m):>3} -> CC matrix {rows}")
print("minimum rank distance of the concatenation:", crm_min_distance(code))

noisy = PrimeMatrix(np.array([[1, 1, 1, 0], [1, 0, 0, 0]], dtype=np.int64), 2)
print("decoding a corrupted matrix 1110;1000 ->", crm_decode(code, noisy)[0])
print()

Z6 = Z2mSpec(6)
mird = MirdCode(spec=Z6, h=(1, 4, 2), d=3)
print("integer rank-distance code over Z_6, h = (1, 4, 2), designed d = 3")
print("parity matrix:")
for row in mird_parity(mird):
    print("  ", row)

y = [3, 2, 1]
x, e = mird_decode(mird, y)
print(f"received {tuple(y)} -> codeword {tuple(x)}, error {tuple(e)}")
print("(the error has rank one: a unit magnitude times a binary pattern)")
