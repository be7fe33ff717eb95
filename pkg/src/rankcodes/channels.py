"""Channel models and Monte-Carlo simulation for the rank-metric codes.

Four channel kinds: BSC (bit flips), BSEC (bit flips plus erasures),
RANK_ERROR (adds a random error of prescribed rank norm to a word over
GF(q^N)), and SYMBOL_ERASE (erases a fixed number of symbol positions).

Randomness comes from random.Random (Mersenne Twister), seeded per call,
so identical (model, word, seed) triples reproduce identical outputs on
any platform.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .gf import FieldElement
from .mrd import (
    DETECTED,
    ERASED,
    GabidulinCode,
    ReceivedWord,
    decode_error_erasure,
    encode,
)
from .ranklin import rank_norm


class ChannelKind(enum.Enum):
    BSC = "bsc"
    BSEC = "bsec"
    RANK_ERROR = "rank-error"
    SYMBOL_ERASE = "symbol-erase"


@dataclass(frozen=True)
class ChannelModel:
    kind: ChannelKind
    p_err: Fraction = Fraction(0)
    q_erase: Fraction = Fraction(0)
    t: int = 0

    def __post_init__(self) -> None:
        if not (0 <= self.p_err <= 1 and 0 <= self.q_erase <= 1):
            raise ValueError("probabilities must lie in [0, 1]")
        if self.p_err + self.q_erase > 1:
            raise ValueError("p_err + q_erase must not exceed 1")
        if self.t < 0:
            raise ValueError("need t >= 0")


def bsc(p_err) -> ChannelModel:
    return ChannelModel(kind=ChannelKind.BSC, p_err=Fraction(p_err))


def bsec(p_err, q_erase) -> ChannelModel:
    return ChannelModel(
        kind=ChannelKind.BSEC, p_err=Fraction(p_err), q_erase=Fraction(q_erase)
    )


def rank_error(t: int) -> ChannelModel:
    return ChannelModel(kind=ChannelKind.RANK_ERROR, t=t)


def symbol_erase(s: int) -> ChannelModel:
    return ChannelModel(kind=ChannelKind.SYMBOL_ERASE, t=s)


def _random_rank_t_error(rng: random.Random, spec, n: int, t: int) -> list[FieldElement]:
    """e = E.Y with E a GF(q)-independent t-set and Y full-rank t x n over GF(q)."""
    from .ranklin import PrimeMatrix, rank_prime
    import numpy as np

    if t == 0:
        return [spec.zero()] * n
    while True:
        E = [spec.from_int(rng.randrange(1, spec.size)) for _ in range(t)]
        if rank_norm(E) == t:
            break
    while True:
        Y = [[rng.randrange(spec.p) for _ in range(n)] for _ in range(t)]
        if rank_prime(PrimeMatrix(np.array(Y, dtype=np.int64), spec.p)) == t:
            break
    e = []
    for j in range(n):
        acc = spec.zero()
        for i in range(t):
            acc = acc + E[i].scale(Y[i][j])
        e.append(acc)
    assert rank_norm(e) == t
    return e


def channel_transmit(model: ChannelModel, word: Sequence, seed: int):
    """Push one word through the channel; deterministic for a given seed."""
    rng = random.Random(seed)
    if model.kind in (ChannelKind.BSC, ChannelKind.BSEC):
        out = []
        for bit in word:
            r = rng.random()
            if model.kind is ChannelKind.BSEC and r < float(model.q_erase):
                out.append(ERASED)
            elif r < float(model.q_erase) + float(model.p_err):
                out.append(bit ^ 1)
            else:
                out.append(bit)
        return out
    if model.kind is ChannelKind.RANK_ERROR:
        spec = word[0].spec
        e = _random_rank_t_error(rng, spec, len(word), model.t)
        return ReceivedWord(symbols=tuple(a + b for a, b in zip(word, e)))
    if model.kind is ChannelKind.SYMBOL_ERASE:
        if model.t > len(word):
            raise ValueError("cannot erase more positions than the word has")
        positions = set(rng.sample(range(len(word)), model.t))
        return ReceivedWord(
            symbols=tuple(
                ERASED if i in positions else s for i, s in enumerate(word)
            )
        )
    raise ValueError(f"unsupported channel kind {model.kind}")


@dataclass(frozen=True)
class TrialReport:
    trials: int
    successes: int
    detections: int
    miscorrections: int
    erasure_histogram: dict[int, int]
    seed: int

    def __post_init__(self) -> None:
        assert self.successes + self.detections + self.miscorrections == self.trials

    def lines(self) -> list[str]:
        out = [
            f"trials={self.trials}",
            f"successes={self.successes}",
            f"detections={self.detections}",
            f"miscorrections={self.miscorrections}",
            f"seed={self.seed}",
        ]
        for t in sorted(self.erasure_histogram):
            out.append(f"erasures[{t}]={self.erasure_histogram[t]}")
        return out


def simulate(code: GabidulinCode, model: ChannelModel, trials: int, seed: int) -> TrialReport:
    """Encode random messages, transmit, decode, and tally the outcomes."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    if model.kind in (ChannelKind.BSC, ChannelKind.BSEC):
        raise ValueError("simulate drives the rank-metric channels only")
    rng = random.Random(seed)
    spec = code.spec
    successes = detections = miscorrections = 0
    histogram: dict[int, int] = {}
    for _ in range(trials):
        msg = [spec.from_int(rng.randrange(spec.size)) for _ in range(code.k)]
        x = encode(code, msg)
        received = channel_transmit(model, x, rng.randrange(1 << 62))
        t = received.t
        histogram[t] = histogram.get(t, 0) + 1
        result = decode_error_erasure(code, received)
        if result is DETECTED:
            detections += 1
        elif result[0] == x:
            successes += 1
        else:
            miscorrections += 1
    return TrialReport(
        trials=trials,
        successes=successes,
        detections=detections,
        miscorrections=miscorrections,
        erasure_histogram=histogram,
        seed=seed,
    )
