"""Walkthrough: Monte-Carlo channel runs against the error-erasure decoder.

A [3,1,3] code corrects any single symbol erasure and any rank-one error,
so those channels come back all-success.  Rank-two errors exceed the unique
decoding radius: some land outside every correction ball and get flagged,
while the rest look like a rank-one error on a different codeword and
decode to the wrong word — the tally splits the two outcomes.
"""

from rankcodes.channels import rank_error, simulate, symbol_erase
from rankcodes.gf import named_field
from rankcodes.mrd import GabidulinCode

F8 = named_field(2, 3)
code = GabidulinCode(spec=F8, n=3, k=1, h=(F8.one(), F8.alpha(1), F8.alpha(2)))

print("code: [3,1,3] over GF(2^3); 1000 trials per channel, seed 42")
for label, model in [
    ("erase one symbol ", symbol_erase(1)),
    ("rank-1 error     ", rank_error(1)),
    ("rank-2 error     ", rank_error(2)),
]:
    r = simulate(code, model, trials=1000, seed=42)
    print(
        f"  {label}: successes={r.successes:4d}  detections={r.detections:4d}"
        f"  miscorrections={r.miscorrections:4d}"
    )
