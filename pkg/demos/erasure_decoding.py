"""Walkthrough: erasure and error-erasure decoding of a [3,1] Gabidulin code.

Shows the three ways a receiver can handle blanks: direct solve when enough
parity survives, guess-and-check over the admissible fill values, and the
detection branch when the word is beyond repair.
"""

from rankcodes.gf import named_field
from rankcodes.mrd import (
    DETECTED,
    ERASED,
    GabidulinCode,
    ReceivedWord,
    decode_error_erasure,
    decode_via_guessing,
    encode,
    erasure_choice_count,
)

F8 = named_field(2, 3)
a = F8.alpha
code = GabidulinCode(spec=F8, n=3, k=1, h=(F8.one(), a(1), a(2)))

print("code: [n=3, k=1, d=3] over GF(2^3), h = (a^0, a^1, a^2)")
x = encode(code, [F8.one()])
print("encode(a^0) =", ", ".join(str(s) for s in x))
print()

# one blank: two clean symbols remain, so the parity equations pin it down
y1 = ReceivedWord((a(5), ERASED, a(2)))
decoded, _ = decode_error_erasure(code, y1)
print("received a^5, *, a^2        ->", ", ".join(str(s) for s in decoded))

# the guessing decoder walks the values off the span of the known symbols
print("admissible guesses for the blank:", erasure_choice_count(3, 1, 0))
decoded, _ = decode_via_guessing(code, y1)
print("guess-and-check agrees      ->", ", ".join(str(s) for s in decoded))
print()

# two blanks: still solvable for k=1 because one clean symbol fixes the message
y2 = ReceivedWord((a(3), ERASED, ERASED))
decoded, _ = decode_error_erasure(code, y2)
print("received a^3, *, *          ->", ", ".join(str(s) for s in decoded))

# three blanks: nothing left to anchor the solve, the decoder must say so
y3 = ReceivedWord((ERASED, ERASED, ERASED))
result = decode_error_erasure(code, y3)
print("received *, *, *            ->", "DETECTED" if result is DETECTED else result)
