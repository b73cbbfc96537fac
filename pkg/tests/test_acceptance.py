"""Acceptance suite: one test per criterion, exact tolerances, timed.

Each test prints a single `ACCEPTANCE <n> PASS` line (visible with -s or in
captured output) after its assertions hold.  Loop-invariant assertions inside
the gcd runs are plain asserts and stay active under pytest.
"""

from __future__ import annotations

import itertools
import random
import time

from remcode.code import (
    Codeword,
    degree_weight,
    distances,
    encode,
    min_degree_distance,
    min_hamming_distance,
    psi_inverse,
)
from remcode.decoder import (
    Algorithm,
    DecodeOptions,
    DecodeStatus,
    Recovery,
    Stopping,
    build_candidate_list,
    decode,
    error_factor_poly,
    error_locator_poly,
    extended_gcd,
    list_decode,
    partial_gcd_full,
    partial_gcd_upper,
    upper_parts,
)
from remcode.interpolate import ErasurePattern, interpolate_direct, interpolate_fixed_transform
from remcode.field import Field
from remcode.oracle import all_messages, brute_force_decode, exhaustive_scan
from remcode.poly import Poly, sieve_count_irreducible
from remcode.sim import ChannelModel, FIXED_POSITIONS, simulate
from remcode.tables import count_table, emit_tables

from conftest import random_message, random_preimage, random_spec

ALL_OPTIONS = [
    DecodeOptions(a, s, r)
    for a in Algorithm for s in Stopping for r in Recovery
    if not (r is Recovery.RATIO and a is not Algorithm.FULL)
]

BINARY_N = (2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161, 2182, 4080)
BINARY_S = (2, 4, 10, 22, 52, 106, 232, 472, 976, 1966, 4012, 8032,
            16222, 32476, 65206, 130486)
EXTENSION_N1_N2 = {4: (4, 6), 16: (16, 120), 64: (64, 2016),
                   256: (256, 32640), 1024: (1024, 523776), 4096: (4096, 8386560)}


def _report(n: int, detail: str) -> None:
    print(f"ACCEPTANCE {n} PASS: {detail}")


def _parse_csv_cells(text: str) -> list[tuple[int, int, int]]:
    rows = []
    for line in text.splitlines()[1:]:
        _, i, n_i, s_i = line.split(",")
        rows.append((int(i), int(n_i), int(s_i)))
    return rows


def test_criterion_01_irreducible_count_tables(gf2):
    started = time.perf_counter()
    rows = _parse_csv_cells(emit_tables(2, 16, "csv"))
    formula_elapsed = time.perf_counter() - started
    assert rows == list(zip(range(1, 17), BINARY_N, BINARY_S))
    assert [r[1] for r in count_table(2, 16)] == list(BINARY_N)
    for q, (n1, n2) in EXTENSION_N1_N2.items():
        rows_q = _parse_csv_cells(emit_tables(q, 2, "csv"))
        assert rows_q[0][1] == n1 and rows_q[1][1] == n2
    assert formula_elapsed < 1.0

    sieve_start = time.perf_counter()
    for degree in range(1, 13):
        assert sieve_count_irreducible(gf2, degree) == BINARY_N[degree - 1]
    sieve_elapsed = time.perf_counter() - sieve_start
    assert sieve_elapsed < 10.0
    _report(1, f"all table cells exact; formula {formula_elapsed:.3f}s, "
               f"sieve degrees 1..12 {sieve_elapsed:.2f}s")


def test_criterion_02_transform_isomorphism(gf2, gf4, gf5, gf16):
    started = time.perf_counter()
    rng = random.Random(2020)
    fields = (gf2, gf4, gf5, gf16)
    pools = {f: [random_spec(rng, f, reducible=i % 3 == 0) for i in range(5)] for f in fields}
    trials = 0
    while trials < 1000:
        field = fields[trials % 4]
        spec = rng.choice(pools[field])
        a = random_message(rng, spec)
        assert psi_inverse(spec, encode(spec, a)) == a
        u, v = random_preimage(rng, spec), random_preimage(rng, spec)
        res_u = [u % m for m in spec.moduli]
        res_v = [v % m for m in spec.moduli]
        assert [(u + v) % m for m in spec.moduli] == \
            [(x + y) % m for x, y, m in zip(res_u, res_v, spec.moduli)]
        prod = (u * v) % spec.modulus_product
        assert [prod % m for m in spec.moduli] == \
            [(x * y) % m for x, y, m in zip(res_u, res_v, spec.moduli)]
        assert psi_inverse(spec, res_u) == u
        trials += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    _report(2, f"1000 (spec, message) round trips plus ring-morphism checks in {elapsed:.2f}s")


def test_criterion_03_minimum_distances(rs42, three_mod, ladder5, gf4_mixed, reducible_spec):
    started = time.perf_counter()
    codes = (rs42, three_mod, ladder5, gf4_mixed, reducible_spec)
    assert len(codes) >= 5
    for spec in codes:
        assert spec.field.q ** spec.K <= 1 << 16
        scan = exhaustive_scan(spec)
        assert scan.dmin_degree == min_degree_distance(spec)
        if spec.ordered_degree:
            assert scan.dmin_hamming == spec.n - spec.k + 1 == min_hamming_distance(spec)
    assert exhaustive_scan(ladder5).dmin_degree == 10
    assert exhaustive_scan(gf4_mixed).dmin_degree == 5
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _report(3, f"5 codes scanned; ladder dminD=10, mixed GF(4) dminD=5; {elapsed:.2f}s")


def test_criterion_04_interpolation_equivalence(gf2, gf4, gf5, gf16):
    started = time.perf_counter()
    rng = random.Random(4040)
    fields = (gf2, gf4, gf5, gf16)
    pools = {f: [random_spec(rng, f) for _ in range(4)] for f in fields}
    for trial in range(1000):
        field = fields[trial % 4]
        spec = rng.choice(pools[field])
        a = random_message(rng, spec)
        cw = encode(spec, a)
        budget = spec.N - spec.K
        known = set(range(spec.n))
        for i in rng.sample(range(spec.n), spec.n):
            d = spec.degrees[i]
            if d <= budget and len(known) > 1 and rng.random() < 0.6:
                known.discard(i)
                budget -= d
        pattern = ErasurePattern(spec, frozenset(known))
        direct = interpolate_direct(spec, dict(enumerate(cw.symbols)), pattern)
        assert direct == a
        for _ in range(3):
            filled = tuple(
                s if i in known
                else Poly.from_int(field, rng.randrange(field.q ** spec.degrees[i]))
                for i, s in enumerate(cw.symbols))
            assert interpolate_fixed_transform(spec, filled, pattern) == a
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    _report(4, f"1000 erasure trials, fixed == direct, 3 fills each; {elapsed:.2f}s")


def test_criterion_05_gcd_equivalence(rs42, ladder5, gf4_mixed, reducible_spec):
    assert __debug__  # loop-invariant assertions are active
    started = time.perf_counter()
    rng = random.Random(5050)
    specs = (rs42, ladder5, gf4_mixed, reducible_spec)
    accepted = 0
    while accepted < 1000:
        spec = specs[accepted % len(specs)]
        symbols = [Poly.zero(spec.field)] * spec.n
        for i in range(spec.n):
            if rng.random() < 0.5:
                symbols[i] = Poly.from_int(
                    spec.field, rng.randrange(spec.field.q ** spec.degrees[i]))
        e = Codeword(spec, tuple(symbols))
        error_preimage = psi_inverse(spec, e)
        factor = error_factor_poly(error_preimage, spec.modulus_product)
        if 2 * factor.degree > spec.N - spec.K:
            continue
        accepted += 1
        a = random_message(rng, spec)
        y = error_preimage + a  # deg a < K <= deg hints: stays below N
        reference = extended_gcd(spec.modulus_product, error_preimage)
        lead = reference.t.coeffs[-1]
        ref_t = reference.t.monic()
        ref_s = reference.s.scale(spec.field.inv(lead))
        m_upper, e_upper = upper_parts(spec, y)
        for stopping in Stopping:
            full = partial_gcd_full(spec.modulus_product, y, spec.K, stopping)
            upper = partial_gcd_upper(m_upper, e_upper, spec.N, spec.K, stopping)
            for run in (full, upper):
                scale = spec.field.inv(run.t.coeffs[-1])
                assert run.t.monic() == ref_t
                assert run.s.scale(scale) == ref_s
                assert run.iterations == reference.iterations
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    _report(5, f"1000 within-budget trials x 2 stopping rules x 2 partial runs match the "
               f"reference (s, t, iterations); invariants live; {elapsed:.2f}s")


def test_criterion_06_unique_decoding_radius(rs42):
    started = time.perf_counter()
    gf5 = rs42.field
    zero = Poly.zero(gf5)
    errors = [rs42.zero_word()]
    for pos in range(4):
        for val in range(1, 5):
            symbols = [zero] * 4
            symbols[pos] = Poly.from_int(gf5, val)
            errors.append(Codeword(rs42, tuple(symbols)))
    assert len(errors) == 17
    messages = list(all_messages(rs42))
    assert len(messages) == 25
    checked = 0
    for a in messages:
        c = encode(rs42, a)
        for e in errors:
            y = c + e
            argmin = brute_force_decode(rs42, y, "degree")
            assert argmin == {a}
            for options in ALL_OPTIONS:
                out = decode(rs42, y, options)
                assert out.status in (DecodeStatus.SUCCESS, DecodeStatus.NO_ERROR)
                assert out.message == a
                checked += 1
    assert checked == 25 * 17 * len(ALL_OPTIONS)
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    _report(6, f"25 messages x 17 weight<=1 patterns x {len(ALL_OPTIONS)} option combos "
               f"all decode to the transmitted message; {elapsed:.2f}s")


def _errors_within_degree_budget(spec):
    """Every error word with degree weight <= t_degree (exhaustive)."""
    budget = spec.t_degree
    supports = [
        sub for r in range(spec.n + 1)
        for sub in itertools.combinations(range(spec.n), r)
        if sum(spec.degrees[i] for i in sub) <= budget
    ]
    for support in supports:
        ranges = [range(1, spec.field.q ** spec.degrees[i]) for i in support]
        for values in itertools.product(*ranges):
            symbols = [Poly.zero(spec.field)] * spec.n
            for i, v in zip(support, values):
                symbols[i] = Poly.from_int(spec.field, v)
            yield Codeword(spec, tuple(symbols))


def test_criterion_07_degree_weight_guarantee(three_mod, gf4_mixed):
    started = time.perf_counter()
    for spec in (three_mod, gf4_mixed):
        error_pool = list(_errors_within_degree_budget(spec))
        for a in all_messages(spec):
            c = encode(spec, a)
            for e in error_pool:
                y = c + e
                for options in ALL_OPTIONS:
                    out = decode(spec, y, options)
                    assert out.status in (DecodeStatus.SUCCESS, DecodeStatus.NO_ERROR)
                    assert out.message == a

    # the mixed GF(4) code corrects any two symbol errors in its first 3 symbols
    gf4 = gf4_mixed.field
    pair_trials = 0
    for a in all_messages(gf4_mixed):
        c = encode(gf4_mixed, a)
        for i, j in itertools.combinations(range(3), 2):
            for vi in range(1, 4):
                for vj in range(1, 4):
                    symbols = [Poly.zero(gf4)] * gf4_mixed.n
                    symbols[i] = Poly.from_int(gf4, vi)
                    symbols[j] = Poly.from_int(gf4, vj)
                    e = Codeword(gf4_mixed, tuple(symbols))
                    assert degree_weight(e) == 2
                    out = decode(gf4_mixed, c + e)
                    assert out.status is DecodeStatus.SUCCESS and out.message == a
                    pair_trials += 1
    assert pair_trials == 64 * 3 * 9
    elapsed = time.perf_counter() - started
    assert elapsed < 120.0
    _report(7, f"all degree-weight<=t errors decode on both codes; "
               f"{pair_trials} two-error patterns in the first 3 symbols corrected; {elapsed:.2f}s")


def test_criterion_08_reducible_moduli_factor(reducible_spec):
    started = time.perf_counter()
    spec = reducible_spec
    gf2 = spec.field
    e = Codeword(spec, (Poly(gf2, (0, 1)), Poly.zero(gf2), Poly.zero(gf2)))
    error_preimage = psi_inverse(spec, e)
    factor = error_factor_poly(error_preimage, spec.modulus_product)
    locator = error_locator_poly(spec, e)
    assert factor == Poly(gf2, (0, 1))        # x
    assert locator == Poly(gf2, (0, 0, 1))    # x^2
    assert factor != locator
    for a in all_messages(spec):
        out = decode(spec, encode(spec, a) + e)
        assert out.status is DecodeStatus.SUCCESS
        assert out.message == a
        assert out.factor_poly == factor
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    _report(8, f"factor x != locator x^2 decoded on all messages; {elapsed:.2f}s")


def test_criterion_09_list_decoding_extension(ladder5):
    started = time.perf_counter()
    gf2 = ladder5.field
    candidates = build_candidate_list(ladder5)
    assert candidates == [ladder5.moduli[4]]
    messages = list(all_messages(ladder5))  # all 64 (> the 100-sample bar per trial pairs)
    trials = 0
    for a in messages:
        c = encode(ladder5, a)
        for code in range(1, 32):
            symbols = list(ladder5.zero_word().symbols)
            symbols[4] = Poly.from_int(gf2, code)
            e = Codeword(ladder5, tuple(symbols))
            assert degree_weight(e) == 5 > ladder5.t_degree
            y = c + e
            assert decode(ladder5, y).status is DecodeStatus.FAILURE
            out = list_decode(ladder5, y, candidates)
            assert out.status is DecodeStatus.SUCCESS and out.message == a
            trials += 1
    assert trials == 64 * 31 >= 100
    # decoder comparison mirrors the simulator view
    report = simulate(ladder5, ChannelModel(FIXED_POSITIONS, (4,), master_seed=1),
                      trials=0, exhaustive=True, message_sample=8,
                      decoders=("gcd", "list"))
    assert report.counts["gcd"]["failure"] == report.trials
    assert report.counts["list"]["success"] == report.trials
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _report(9, f"{trials} heavy-symbol errors: gcd fails, list decoder recovers; {elapsed:.2f}s")


def test_criterion_10_totality_fuzz(gf2, gf4, gf5):
    started = time.perf_counter()
    rng = random.Random(1010)
    gf3 = Field(3)
    pools = []
    for field in (gf2, gf3, gf4, gf5):
        for i in range(4):
            pools.append(random_spec(rng, field, n_range=(2, 4), reducible=i % 2 == 0))
    for trial in range(100_000):
        spec = pools[trial % len(pools)]
        symbols = tuple(
            Poly.from_int(spec.field, rng.randrange(spec.field.q ** d))
            for d in spec.degrees)
        word = Codeword(spec, symbols)
        out = decode(spec, word, ALL_OPTIONS[trial % len(ALL_OPTIONS)])
        assert out.status in set(DecodeStatus)
        if out.status is not DecodeStatus.FAILURE:
            assert out.message.degree < spec.K
            assert (encode(spec, out.message) + out.error_word).symbols == symbols
        else:
            assert out.failure_reason is not None
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _report(10, f"100000 random words decoded without crash or invariant firing; {elapsed:.1f}s")
