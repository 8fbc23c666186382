"""GF(4) additive codes: parsing, duals, distances, reductions.

The oracles here work on GF(4) symbol tuples with itertools enumeration,
independent of the bitmask representation used by the library.
"""

import itertools
import random
from fractions import Fraction as F

import pytest

from qbounds.errors import CapacityError, ParameterError, ParseError, StructureError
from qbounds.gf4 import (
    AdditiveCode,
    binary_s_code,
    codes_equal,
    complementary_code,
    enumerators,
    format_code,
    int_to_symbols,
    min_nonzero_weight,
    parse_code,
    quantum_distance,
    random_self_orthogonal_code,
    reduction_targets,
    reduction_witnesses,
    standard_form,
    symplectic_dual,
    symplectic_product,
    weight_distribution,
)

FIVE_QUBIT = "XZZXI\nIXZZX\nXIXZZ\nZXIXZ\n"
C422 = "XXXX\nZZZZ\n"
STEANE = "IIIXXXX\nIXXIIXX\nXIXIXIX\nIIIZZZZ\nIZZIIZZ\nZIZIZIZ\n"


# ---------------------------------------------------------------------------
# independent symbol-tuple oracles
# ---------------------------------------------------------------------------


def _rows_as_symbols(code):
    return [int_to_symbols(g, code.n) for g in code.generators]


def naive_words(rows):
    """All GF(2) combinations of symbol-tuple rows, via itertools."""
    n = len(rows[0]) if rows else 0
    out = []
    for mask in itertools.product((0, 1), repeat=len(rows)):
        word = [0] * n
        for bit, row in zip(mask, rows):
            if bit:
                word = [a ^ b for a, b in zip(word, row)]
        out.append(tuple(word))
    return out


def naive_weight(word):
    return sum(1 for s in word if s)


def naive_distribution(rows, n):
    counts = [0] * (n + 1)
    for word in naive_words(rows):
        counts[naive_weight(word)] += 1
    return tuple(counts)


def naive_sympl(u, v):
    total = 0
    for s, t in zip(u, v):
        total ^= ((s & 1) & (t >> 1)) ^ ((t & 1) & (s >> 1))
    return total


def naive_distance(code):
    """Min weight over dual \\ code (or min nonzero weight when equal)."""
    rows = _rows_as_symbols(code)
    n = code.n
    cwords = set(naive_words(rows))
    dual_words = [
        w
        for w in itertools.product((0, 1, 2, 3), repeat=n)
        if all(naive_sympl(w, tuple(r)) == 0 for r in rows)
    ]
    outside = [w for w in dual_words if w not in cwords]
    if outside:
        return min(naive_weight(w) for w in outside)
    return min(naive_weight(w) for w in cwords if any(w))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def test_parse_five_qubit():
    code = parse_code(FIVE_QUBIT)
    assert code.n == 5 and code.rank == 4


def test_parse_slash_separated():
    code = parse_code("XZZXI / IXZZX / XIXZZ / ZXIXZ")
    assert codes_equal(code, parse_code(FIVE_QUBIT))


def test_parse_gf4_rows_and_comments():
    code = parse_code("# a comment\n0 1 w x  # trailing\nw 0 1 1\n")
    assert code.n == 4 and code.rank == 2


def test_parse_bad_symbol():
    with pytest.raises(ParseError, match="line 1"):
        parse_code("XZQ")


def test_parse_ragged_rows():
    with pytest.raises(ParseError, match="line 2"):
        parse_code("XZ\nXZZ")


def test_parse_dependent_rows_named():
    with pytest.raises(ParseError, match="line 3"):
        parse_code("XZ\nZX\nYY")


def test_parse_empty():
    with pytest.raises(ParseError):
        parse_code("# nothing here\n")


def test_format_round_trip():
    for text in (FIVE_QUBIT, C422, "w w\n"):
        code = parse_code(text)
        assert codes_equal(parse_code(format_code(code)), code)


def test_dependent_generators_rejected_at_construction():
    with pytest.raises(ParameterError):
        AdditiveCode(2, (0b0101, 0b0101))


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------


def test_dual_of_trivial_is_full_space():
    trivial = AdditiveCode(2, ())
    dual = symplectic_dual(trivial)
    assert dual.rank == 4


def test_dual_contains_self_orthogonal_code():
    code = parse_code(FIVE_QUBIT)
    dual = symplectic_dual(code)
    assert dual.rank == 6
    assert all(dual.contains(g) for g in code.generators)


def test_bidual_identity():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(1, 6)
        code = random_self_orthogonal_code(n, rng.randint(1, n), rng)
        assert codes_equal(symplectic_dual(symplectic_dual(code)), code)


def test_dual_is_symplectically_orthogonal():
    code = parse_code(STEANE)
    dual = symplectic_dual(code)
    for g in code.generators:
        for h in dual.generators:
            assert symplectic_product(g, h, code.n) == 0


# ---------------------------------------------------------------------------
# distances and enumerators
# ---------------------------------------------------------------------------


def test_five_qubit_params_match_oracle():
    code = parse_code(FIVE_QUBIT)
    params = quantum_distance(code)
    assert (params.n, params.k, params.K, params.d) == (5, 1, 2, 3)
    assert params.degenerate is False
    assert naive_distance(code) == 3


def test_c422_params():
    code = parse_code(C422)
    params = quantum_distance(code)
    assert (params.n, params.k, params.d) == (4, 2, 2)
    assert naive_distance(code) == 2


def test_k0_convention_uses_min_weight_of_code():
    code = parse_code("XX\nZZ")
    params = quantum_distance(code)
    assert (params.k, params.d) == (0, 2)
    assert naive_distance(code) == 2


def test_distance_rejects_non_self_orthogonal():
    with pytest.raises(StructureError):
        quantum_distance(parse_code("XX\nZX"))


def test_distance_matches_oracle_randomly():
    rng = random.Random(13)
    for _ in range(25):
        n = rng.randint(2, 5)
        code = random_self_orthogonal_code(n, rng.randint(1, n), rng)
        assert quantum_distance(code).d == naive_distance(code)


def test_weight_distributions_five_qubit():
    code = parse_code(FIVE_QUBIT)
    assert weight_distribution(code) == (1, 0, 0, 0, 15, 0)
    assert weight_distribution(symplectic_dual(code)) == (1, 0, 0, 30, 15, 18)
    # oracle recomputation over symbol tuples
    assert naive_distribution(_rows_as_symbols(code), 5) == (1, 0, 0, 0, 15, 0)
    dual = symplectic_dual(code)
    assert naive_distribution(_rows_as_symbols(dual), 5) == (1, 0, 0, 30, 15, 18)


def test_weight_distribution_trivial():
    assert weight_distribution(AdditiveCode(3, ())) == (1, 0, 0, 0)


def test_capacity_error_beyond_cap():
    big = AdditiveCode(14, tuple(1 << i for i in range(28)))
    with pytest.raises(CapacityError):
        weight_distribution(big)


def test_enumerators_fixtures():
    pair = enumerators(parse_code(FIVE_QUBIT))
    assert pair.A == (1, 0, 0, 0, 15, 0)
    assert pair.B == (1, 0, 0, 30, 15, 18)
    assert pair.K == 2

    pair = enumerators(parse_code(C422))
    assert pair.A == (1, 0, 0, 0, 3)
    assert pair.K == 4

    pair = enumerators(AdditiveCode(1, ()))
    assert pair.A == (1, 0) and pair.B == (1, 3) and pair.K == 2


def test_enumerator_identity_on_random_codes():
    rng = random.Random(21)
    for _ in range(30):
        n = rng.randint(1, 8)
        code = random_self_orthogonal_code(n, rng.randint(1, n), rng)
        enumerators(code)  # raises InvariantError on any identity failure


def test_nondegeneracy_coherence():
    rng = random.Random(34)
    seen_degenerate = False
    for _ in range(60):
        n = rng.randint(2, 6)
        code = random_self_orthogonal_code(n, rng.randint(1, n - 1), rng)
        params = quantum_distance(code)
        min_c = min_nonzero_weight(code)
        assert params.degenerate == (min_c < params.d)
        seen_degenerate = seen_degenerate or params.degenerate
        if not params.degenerate:
            pair = enumerators(code)
            for i in range(1, params.d):
                assert pair.A[i] == pair.B[i] == 0
    assert seen_degenerate, "sweep never produced a degenerate example"


# ---------------------------------------------------------------------------
# standard form
# ---------------------------------------------------------------------------


def test_standard_form_five_qubit_is_gf4_linear():
    code = parse_code(FIVE_QUBIT)
    sf = standard_form(code)
    assert (sf.k0, sf.k1) == (2, 0)
    assert sf.k == 1
    # GF(4)-linearity oracle: multiplying every generator by w stays inside
    omega_mult = {0: 0, 1: 2, 2: 3, 3: 1}
    for g in code.generators:
        scaled = [omega_mult[s] for s in int_to_symbols(g, code.n)]
        word = tuple(scaled)
        assert word in set(naive_words(_rows_as_symbols(code)))


def test_standard_form_single_line_generator():
    sf = standard_form(parse_code("w w"))
    assert (sf.k0, sf.k1) == (0, 1)
    assert sf.line_pivots == (2,)


def test_standard_form_round_trip_random():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(1, 7)
        rank = rng.randint(1, min(2 * n, 9))
        gens = []
        while len(gens) < rank:
            candidate = rng.getrandbits(2 * n)
            try:
                AdditiveCode(n, tuple(gens + [candidate]))
            except ParameterError:
                continue
            gens.append(candidate)
        code = AdditiveCode(n, tuple(gens))
        sf = standard_form(code)
        assert 2 * sf.k0 + sf.k1 == code.rank
        assert codes_equal(sf.reassemble(), code)
        # pivot structure: identity-like blocks at the pivot columns
        for j in range(sf.k0):
            assert sf.matrix[j][j] == 1
            assert sf.matrix[sf.k0 + j][j] == 2
        for j in range(sf.k1):
            row = sf.matrix[2 * sf.k0 + j]
            assert row[sf.k0 + j] == sf.line_pivots[j]
            assert all(row[c] == 0 for c in range(sf.k0))


def test_standard_form_blocks_shapes():
    sf = standard_form(parse_code(C422))
    blocks = sf.blocks()
    assert len(blocks["B1"]) == sf.k0
    assert len(blocks["A3"]) == sf.k1


# ---------------------------------------------------------------------------
# complementary codes and reductions
# ---------------------------------------------------------------------------


def test_complementary_five_qubit():
    code = parse_code(FIVE_QUBIT)
    comp = complementary_code(code)
    assert comp is not None
    assert comp.code.rank == 2
    assert comp.punctured.n == 3
    assert min_nonzero_weight(comp.punctured) == 3
    # stack-and-span: rows of C plus the complement span the dual
    from qbounds.gf4 import gf2_rank

    assert gf2_rank(code.generators + comp.code.generators) == 6


def test_complementary_none_for_k0():
    assert complementary_code(parse_code("XX\nZZ")) is None


def test_complementary_stack_span_random():
    rng = random.Random(55)
    from qbounds.gf4 import gf2_rank

    for _ in range(25):
        n = rng.randint(2, 7)
        code = random_self_orthogonal_code(n, rng.randint(1, n - 1), rng)
        comp = complementary_code(code)
        assert comp is not None
        k = n - code.rank
        assert comp.code.rank == 2 * k
        assert gf2_rank(code.generators + comp.code.generators) == n + k
        # every complement row commutes with every generator of C
        for w in comp.code.generators:
            assert all(symplectic_product(w, g, n) == 0 for g in code.generators)


def test_reduction_targets_five_qubit():
    code = parse_code(FIVE_QUBIT)
    sf = standard_form(code)
    params = quantum_distance(code)
    targets = reduction_targets(sf, params)
    assert [(t.kind, t.length, t.dimension, t.restricted) for t in targets] == [
        ("mixed_additive", 3, 2, 0),
        ("additive", 3, 2, 0),
        ("binary", 6, 2, 0),
    ]


def test_reduction_targets_c422():
    code = parse_code(C422)
    targets = reduction_targets(standard_form(code), quantum_distance(code))
    assert [(t.kind, t.length, t.dimension) for t in targets] == [
        ("mixed_additive", 3, 4),
        ("additive", 3, 4),
        ("binary", 6, 4),
    ]


def test_reduction_targets_guard_when_k1_large():
    # rank-1 code with a line pivot: k1 = 1, k = n - 1; descriptor (additive)
    # requires k1 < 2k
    code = parse_code("w w")
    sf = standard_form(code)
    params = quantum_distance(code)
    targets = reduction_targets(sf, params)
    kinds = [t.kind for t in targets]
    assert kinds == ["mixed_additive", "additive", "binary"]
    # and when k1 >= 2k the additive descriptor disappears: n=2 rank 3 would
    # be needed; build one on n=3 instead
    rng = random.Random(4)
    for _ in range(200):
        code = random_self_orthogonal_code(3, 2, rng)
        sf = standard_form(code)
        if sf.k1 >= 2 * sf.k > 0:
            targets = reduction_targets(sf, quantum_distance(code))
            assert [t.kind for t in targets] == ["mixed_additive", "binary"]
            break
    else:
        pytest.skip("no k1 >= 2k example found in sweep")


def test_reduction_targets_rejects_mismatch():
    code = parse_code(FIVE_QUBIT)
    sf = standard_form(code)
    with pytest.raises(ParameterError):
        reduction_targets(sf, quantum_distance(parse_code(C422)))


def test_reduction_witnesses_sound_on_fixtures():
    for text in (FIVE_QUBIT, C422, STEANE, "w w"):
        code = parse_code(text)
        params = quantum_distance(code)
        for witness in reduction_witnesses(code):
            assert witness.distance >= params.d, (text, witness)


# ---------------------------------------------------------------------------
# binary reduction
# ---------------------------------------------------------------------------


def test_binary_s_code_five_qubit():
    code = parse_code(FIVE_QUBIT)
    s = binary_s_code(code)
    assert s is not None
    assert (s.length, s.dimension) == (6, 2)
    assert s.distance >= 3
    # oracle: enumerate the span directly and recompute the distance
    words = set()
    for mask in itertools.product((0, 1), repeat=len(s.rows)):
        w = 0
        for bit, row in zip(mask, s.rows):
            if bit:
                w ^= row
        words.add(w)
    assert min(w.bit_count() for w in words if w) == s.distance


def test_binary_s_code_none_for_k0():
    assert binary_s_code(parse_code("XX\nZZ")) is None


def test_binary_s_code_dominates_quantum_distance():
    rng = random.Random(99)
    for _ in range(30):
        n = rng.randint(2, 7)
        code = random_self_orthogonal_code(n, rng.randint(1, n - 1), rng)
        params = quantum_distance(code)
        s = binary_s_code(code)
        assert s is not None
        assert (s.length, s.dimension) == (n + params.k, 2 * params.k)
        assert s.distance >= params.d
