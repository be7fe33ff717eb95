"""Gabidulin codes: worked decodes, guessing, erasure elimination, sweeps."""

import itertools
import random

import pytest

from rankcodes.gf import frob, named_field
from rankcodes.linpoly import LinearizedPoly
from rankcodes.mrd import (
    DETECTED,
    ERASED,
    ErrorSolution,
    GabidulinCode,
    ReceivedWord,
    _eliminate_erasures,
    decode_error_erasure,
    decode_errors,
    decode_via_guessing,
    deleted_parity_matrix,
    encode,
    encode_systematic_via_parity,
    erasure_choice_count,
    format_received,
    generator_matrix,
    guess_erasures,
    parity_matrix,
    parse_received,
    syndrome,
)
from rankcodes.ranklin import (
    ExtMatrix,
    ext_mul,
    min_rank_distance_bruteforce,
    rank_norm,
)

F8 = named_field(2, 3)
F256 = named_field(2, 8)


def a(k, spec=F8):
    return spec.alpha(k)


def c313():
    return GabidulinCode(spec=F8, n=3, k=1, h=(F8.one(), a(1), a(2)))


def c717():
    return GabidulinCode(spec=F256, n=7, k=1, h=tuple(F256.alpha(i) for i in range(7)))


def all_codewords(code):
    from itertools import product

    G = generator_matrix(code)
    words = []
    for msg in product(code.spec.elements(), repeat=code.k):
        words.append(encode(code, list(msg)))
    return words


# -- construction ----------------------------------------------------------------------

def test_construction_rejects_bad_parameters():
    with pytest.raises(ValueError):
        GabidulinCode(spec=F8, n=3, k=1, h=(F8.one(), a(1), a(3)))  # a^3 = a + 1
    with pytest.raises(ValueError):
        GabidulinCode(spec=F8, n=4, k=1, h=(F8.one(), a(1), a(2), a(3)))
    with pytest.raises(ValueError):
        GabidulinCode(spec=F8, n=3, k=3, h=(F8.one(), a(1), a(2)))


def test_design_distance():
    assert c313().d == 3
    assert c717().d == 7


# -- parity and generator matrices -----------------------------------------------------

def test_parity_matrix_313():
    H = parity_matrix(c313())
    assert H.rows_data == ExtMatrix.from_rows(
        [[F8.one(), a(1), a(2)], [F8.one(), a(2), a(4)]]
    ).rows_data


def test_parity_matrix_717_entries():
    H = parity_matrix(c717())
    assert H.rows == 6 and H.cols == 7
    for j in range(6):
        for i in range(7):
            assert H[j, i] == F256.alpha((i * (2 ** j)) % 255)


def test_parity_matrix_single_row_when_d2():
    code = GabidulinCode(spec=F8, n=3, k=2, h=(F8.one(), a(1), a(2)))
    H = parity_matrix(code)
    assert H.rows == 1 and H.row(0) == [F8.one(), a(1), a(2)]


def test_generator_matrix_gf81_printed_row():
    spec = named_field(3, 4)
    code = GabidulinCode(spec=spec, n=3, k=1, h=(spec.one(), spec.alpha(1), spec.alpha(2)))
    G = generator_matrix(code)
    assert G.row(0) == [spec.alpha(4), spec.alpha(65), spec.one()]


def test_generator_annihilates_parity():
    for code in (
        c313(),
        c717(),
        GabidulinCode(spec=F256, n=6, k=3, h=tuple(F256.alpha(i) for i in range(6))),
        GabidulinCode(spec=named_field(2, 5), n=4, k=2,
                      h=tuple(named_field(2, 5).alpha(i) for i in range(4))),
    ):
        G = generator_matrix(code)
        prod = ext_mul(G, parity_matrix(code).transpose())
        assert all(e.is_zero() for row in prod.rows_data for e in row)
        # Frobenius form: row i is the [1]-power of row i-1.
        for i in range(1, code.k):
            assert G.row(i) == [frob(g, 1) for g in G.row(i - 1)]


# -- encoding --------------------------------------------------------------------------

def test_encode_zero_and_printed_row():
    spec = named_field(3, 4)
    code = GabidulinCode(spec=spec, n=3, k=1, h=(spec.one(), spec.alpha(1), spec.alpha(2)))
    assert all(e.is_zero() for e in encode(code, [spec.zero()]))
    assert encode(code, [spec.one()]) == [spec.alpha(4), spec.alpha(65), spec.one()]


def test_encode_systematic_printed_codewords():
    code = c313()
    assert encode_systematic_via_parity(code, [a(5)], [0]) == [a(5), a(6), a(2)]
    assert encode_systematic_via_parity(code, [a(3)], [0]) == [a(3), a(4), F8.one()]
    assert all(e.is_zero() for e in encode_systematic_via_parity(code, [F8.zero()], [0]))


def test_encode_systematic_is_a_codeword_any_positions():
    code = GabidulinCode(spec=F256, n=6, k=3, h=tuple(F256.alpha(i) for i in range(6)))
    rng = random.Random(5)
    for _ in range(20):
        pos = rng.sample(range(6), 3)
        msg = [F256.from_int(rng.randrange(256)) for _ in range(3)]
        x = encode_systematic_via_parity(code, msg, pos)
        assert [x[p] for p in pos] == msg
        assert all(v.is_zero() for v in syndrome(code, x))


# -- syndrome --------------------------------------------------------------------------

def test_syndrome_printed_values():
    code = c313()
    assert syndrome(code, [a(5), a(6), a(2)]) == [F8.zero(), F8.zero()]
    assert syndrome(code, [a(5), F8.one(), a(2)]) == [a(3), a(4)]
    assert syndrome(code, [a(5), a(1), a(2)]) == [a(6), F8.one()]


# -- error-only decoding ---------------------------------------------------------------

def test_decode_errors_printed_single_error_cases():
    code = c313()
    x, sol = decode_errors(code, [a(5), F8.one(), a(2)])
    assert x == [a(5), a(6), a(2)]
    assert sol.e == (F8.zero(), a(2), F8.zero())
    assert sol.m == 1

    x, sol = decode_errors(code, [a(5), a(1), a(2)])
    assert x == [a(5), a(6), a(2)]
    assert sol.e == (F8.zero(), a(5), F8.zero())


def test_decode_errors_support_restriction():
    # (a^3, a^6, a^2) is rank-1 from the codeword (a^5, a^6, a^2): the plain
    # decoder corrects it, but with the correction confined to slots {1, 2}
    # (the erased positions of the two-blank branch) it must report DETECTED.
    code = c313()
    y = [a(3), a(6), a(2)]
    x, sol = decode_errors(code, y)
    assert x == [a(5), a(6), a(2)]
    assert sol.e == (a(2), F8.zero(), F8.zero())
    assert decode_errors(code, y, allowed_support=[1, 2]) is DETECTED


def test_decode_errors_clean_word():
    code = c313()
    x, sol = decode_errors(code, [a(5), a(6), a(2)])
    assert x == [a(5), a(6), a(2)] and sol.m == 0


def test_decode_errors_rejects_bad_length():
    with pytest.raises(ValueError):
        decode_errors(c313(), [a(5), a(6)])


# -- guessing --------------------------------------------------------------------------

def test_guess_single_erasure_candidates_and_pick():
    code = c313()
    y = ReceivedWord((a(5), ERASED, a(2)))
    span = {F8.zero(), a(5), a(2), a(5) + a(2)}
    candidates = {e for e in F8.elements() if not e.is_zero() and e not in span}
    assert candidates == {F8.one(), a(1), a(4), a(6)}
    assert len(candidates) == erasure_choice_count(3, 1, 0) == 4
    assert guess_erasures(code, y) == [a(5), F8.one(), a(2)]


def test_guess_no_erasures_is_identity():
    code = c313()
    y = ReceivedWord((a(5), a(6), a(2)))
    assert guess_erasures(code, y) == [a(5), a(6), a(2)]


def test_guess_two_erasures_independent_fills():
    code = c313()
    filled = guess_erasures(code, ReceivedWord((a(3), ERASED, ERASED)))
    assert filled[0] == a(3)
    from rankcodes.gf import is_linearly_independent

    assert is_linearly_independent(filled)


def test_erasure_choice_count_values():
    assert erasure_choice_count(3, 1, 0) == 4
    assert erasure_choice_count(2, 2, 1) == 2
    assert erasure_choice_count(7, 3, 0) == 112
    with pytest.raises(ValueError):
        erasure_choice_count(3, 1, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_erasure_choice_count_matches_enumeration(n):
    spec = named_field(2, n)
    basis = [spec.from_coeffs([1 if i == j else 0 for i in range(n)]) for j in range(n)]
    for t in range(1, min(3, n) + 1):
        for s in range(t):
            dim = n - t + s
            span = {spec.zero()}
            for b in basis[:dim]:
                span |= {v + b for v in span}
            count = sum(1 for e in spec.elements() if not e.is_zero() and e not in span)
            assert count == erasure_choice_count(n, t, s)


# -- column deletion -------------------------------------------------------------------

def test_deleted_parity_matrix_trivial_and_direct_formula():
    code = c313()
    assert deleted_parity_matrix(code, []) == parity_matrix(code)
    H1 = deleted_parity_matrix(code, [1])  # drop the second column
    Z = a(2) / a(1)  # h_2^[1] / h_2
    expected = [h * Z - frob(h, 1) for h in (F8.one(), a(2))]
    assert H1.rows == 1 and H1.row(0) == expected


def test_deleted_parity_annihilates_punctured_codewords():
    code = c313()
    for word in all_codewords(code):
        for l in range(3):
            Hd = deleted_parity_matrix(code, [l])
            kept = [w for j, w in enumerate(word) if j != l]
            out = ext_mul(ExtMatrix.from_rows([kept]), Hd.transpose())
            assert all(e.is_zero() for e in out.row(0))


def test_deleted_parity_annihilates_randomized():
    code = c717()
    rng = random.Random(23)
    for _ in range(15):
        msg = [F256.from_int(rng.randrange(256))]
        word = encode(code, msg)
        m = rng.randrange(1, 5)
        dels = sorted(rng.sample(range(7), m))
        Hd = deleted_parity_matrix(code, dels)
        kept = [w for j, w in enumerate(word) if j not in dels]
        out = ext_mul(ExtMatrix.from_rows([kept]), Hd.transpose())
        assert all(e.is_zero() for e in out.row(0))


def test_deleted_parity_rejects_too_many():
    with pytest.raises(ValueError):
        deleted_parity_matrix(c313(), [0, 1])


# -- combined error-erasure decoding ---------------------------------------------------

def test_seven_symbol_worked_decode():
    code = c717()
    A = F256.alpha
    y = ReceivedWord((A(31), A(147), F256.zero(), F256.zero(), ERASED, F256.zero(), ERASED))

    sigma = [sum((frob(code.h[j], p) * s for j, s in enumerate(
        [A(31), A(147), F256.zero(), F256.zero(), F256.zero(), F256.zero(), F256.zero()]
    )), F256.zero()) for p in range(6)]
    _, s_prime, cols = _eliminate_erasures(code, sigma, [4, 6])
    assert s_prime == [A(95), A(68), A(44), A(48)]
    assert cols == [0, 1, 2, 3, 5]

    result = decode_error_erasure(code, y)
    assert result is not DETECTED
    x, sol = result
    assert all(v.is_zero() for v in x)
    assert sol.e == (A(31), A(147)) + (F256.zero(),) * 5
    assert sol.f == {4: F256.zero(), 6: F256.zero()}
    assert sol.m == 2


def test_two_erasures_direct_solve():
    code = c313()
    x, sol = decode_error_erasure(code, ReceivedWord((a(3), ERASED, ERASED)))
    assert x == [a(3), a(4), F8.one()]
    assert sol.m == 0
    assert sol.f == {1: a(4), 2: F8.one()}


def test_clean_codeword_no_erasures():
    code = c313()
    x, sol = decode_error_erasure(code, ReceivedWord((a(5), a(6), a(2))))
    assert x == [a(5), a(6), a(2)] and sol.m == 0


def test_too_many_erasures_detected():
    code = c313()
    assert decode_error_erasure(code, ReceivedWord((ERASED, ERASED, ERASED))) is DETECTED


def test_random_error_erasure_roundtrips():
    code = GabidulinCode(spec=F256, n=7, k=2, h=tuple(F256.alpha(i) for i in range(7)))
    d = code.d  # 6
    rng = random.Random(41)
    for _ in range(60):
        msg = [F256.from_int(rng.randrange(256)) for _ in range(2)]
        x = encode(code, msg)
        t = rng.randrange(0, d)
        r_max = (d - 1 - t) // 2
        r = rng.randrange(0, r_max + 1)
        erased = sorted(rng.sample(range(7), t))
        # rank-r error supported off the erased slots
        free = [j for j in range(7) if j not in erased]
        y = list(x)
        if r:
            while True:
                E = [F256.from_int(rng.randrange(1, 256)) for _ in range(r)]
                rows = [[rng.randrange(2) for _ in range(7)] for _ in range(r)]
                for row in rows:
                    for j in erased:
                        row[j] = 0
                e = [sum((E[i].scale(rows[i][j]) for i in range(r)), F256.zero())
                     for j in range(7)]
                if rank_norm(e) == r:
                    break
            y = [yj + ej for yj, ej in zip(y, e)]
        word = ReceivedWord(tuple(ERASED if j in erased else y[j] for j in range(7)))
        result = decode_error_erasure(code, word)
        assert result is not DETECTED
        decoded, sol = result
        assert decoded == x
        assert sol.m == rank_norm([yj - xj for yj, xj in zip(y, x)])


# -- exhaustive small-code sweeps ------------------------------------------------------

def test_all_rank_one_errors_corrected_313():
    code = c313()
    words = all_codewords(code)
    assert len(words) == 8
    patterns = set()
    for E in F8.elements():
        if E.is_zero():
            continue
        for bits in itertools.product([0, 1], repeat=3):
            if not any(bits):
                continue
            patterns.add(tuple(E.scale(b) for b in bits))
    for x in words:
        for e in patterns:
            y = [xj + ej for xj, ej in zip(x, e)]
            result = decode_errors(code, y)
            assert result is not DETECTED, "silent failure on a correctable error"
            assert result[0] == x, "miscorrection on a rank-1 error"


def test_all_single_erasures_corrected_313():
    code = c313()
    for x in all_codewords(code):
        for pos in range(3):
            word = ReceivedWord(tuple(ERASED if j == pos else x[j] for j in range(3)))
            for decoder in (decode_error_erasure, decode_via_guessing):
                result = decoder(code, word)
                assert result is not DETECTED
                assert result[0] == x


def test_guess_invariance_over_all_admissible_values():
    # Every admissible fill of a single erasure decodes to the same codeword.
    code = c313()
    for x in all_codewords(code):
        for pos in range(3):
            known = [x[j] for j in range(3) if j != pos]
            span = {F8.zero()}
            for v in known:
                span |= {s + v for s in span}
            admissible = [e for e in F8.elements() if not e.is_zero() and e not in span]
            if any(not v.is_zero() for v in known):
                assert len(admissible) == erasure_choice_count(3, 1, 0)
            for g in admissible:
                y = list(x)
                y[pos] = g
                result = decode_errors(code, y, allowed_support=[pos])
                assert result is not DETECTED
                assert result[0] == x


def test_double_erasures_never_silently_wrong_313():
    # Beyond the guessing capability t=1: outcome is DETECTED or correct, never wrong.
    code = c313()
    for x in all_codewords(code):
        for pair in itertools.combinations(range(3), 2):
            word = ReceivedWord(tuple(ERASED if j in pair else x[j] for j in range(3)))
            result = decode_via_guessing(code, word)
            assert result is DETECTED or result[0] == x
            direct = decode_error_erasure(code, word)
            assert direct is not DETECTED and direct[0] == x


def test_mrd_singleton_equality_small_codes():
    for N in range(2, 7):
        spec = named_field(2, N)
        for k in (1, 2):
            for n in {N, max(k + 1, N - 1)}:
                if k >= n or n > N:
                    continue
                code = GabidulinCode(spec=spec, n=n, k=k,
                                     h=tuple(spec.alpha(i) for i in range(n)))
                words = all_codewords(code)
                assert min_rank_distance_bruteforce(words) == n - k + 1


# -- text format -----------------------------------------------------------------------

def test_received_word_text_roundtrip():
    y = ReceivedWord((a(5), ERASED, a(2)))
    text = format_received(y)
    assert text == "a^5,*,a^2"
    parsed = parse_received(F8, text)
    assert parsed.symbols[0] == a(5) and parsed.symbols[1] is ERASED
    assert parsed.erasure_positions == (1,) and parsed.t == 1
