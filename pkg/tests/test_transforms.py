import itertools
import random

import pytest

from parybent.core import (
    PAryFunction,
    even_function_from_pair_values,
    function_from_anf_text,
    index_vector,
    signature,
)
from parybent.cyclotomic import CycInt
from parybent.golden import GF3_2_BENT_TABLES, GF3_2_REGULAR_DUALS, GF3_2_SELF_DUAL_MU_MINUS1
from parybent.transforms import (
    all_derivatives_balanced,
    classify_regularity,
    derivative_is_balanced,
    dual_round_trip,
    fourier_is_real,
    fourier_transform,
    galois_covariance_holds,
    is_bent,
    is_butson,
    rational_w0_signature_check,
    walsh_transform,
)

B = {k: PAryFunction(3, 2, v) for k, v in GF3_2_BENT_TABLES.items()}
NOT_BENT = PAryFunction.from_values(3, 2, [0, 1, 1, 2, 0, 1, 2, 1, 0])


def test_walsh_zero_function():
    spec = walsh_transform(PAryFunction.zero(3, 2))
    assert spec.values[0].is_rational() == 9
    assert all(w.is_rational() == 0 for w in spec.values[1:])


def test_walsh_w0_examples():
    f = function_from_anf_text("x0^2+x1^2+x2^2", 3, 3)
    assert walsh_transform(f).values[0] == CycInt.from_exponent_counts(3, [9, 6, 12])
    g = function_from_anf_text("x0*x2 + 2x1^2 + 2x0^2*x2^2", 3, 3)
    assert walsh_transform(g).values[0] == CycInt.from_exponent_counts(3, [11, 2, 14])


def test_fourier_examples():
    vals = fourier_transform(NOT_BENT)
    assert sorted(v.is_rational() for v in vals) == [-4, -4, -1, -1, -1, -1, 2, 2, 8]
    assert all(v.is_rational() == 0 for v in fourier_transform(PAryFunction.zero(3, 2)))
    rng = random.Random(5)
    for _ in range(20):
        f = PAryFunction(3, 2, tuple(rng.randrange(3) for _ in range(9)))
        assert fourier_transform(f)[0].is_rational() == sum(f.values)


def test_fourier_real_for_even():
    assert fourier_is_real(NOT_BENT)
    rng = random.Random(9)
    for _ in range(20):
        pair_vals = [rng.randrange(3) for _ in range(4)]
        assert fourier_is_real(even_function_from_pair_values(3, 2, pair_vals))


def test_is_bent_examples():
    assert is_bent(B[1])
    assert not is_bent(NOT_BENT)
    assert is_bent(function_from_anf_text("x0^2+x0*x1", 5, 2))


def test_parseval_random_functions():
    # WalshSpectrum construction asserts Parseval exactly
    rng = random.Random(2)
    for p, n in [(3, 2), (3, 3), (5, 2)]:
        for _ in range(1000):
            f = PAryFunction(p, n, tuple(rng.randrange(p) for _ in range(p**n)))
            walsh_transform(f)


def test_regularity_b2_b3():
    pr = classify_regularity(B[2])
    assert pr.is_bent and pr.is_weakly_regular and pr.is_regular
    assert pr.dual == B[3]
    assert pr.mu_exponent_data == {"type": "half-turn", "sign": 1, "zeta_exp": 0}


def test_regularity_b1_b10():
    pr = classify_regularity(B[1])
    assert pr.is_weakly_regular and not pr.is_regular
    assert pr.dual == B[10]
    assert pr.mu_exponent_data["sign"] == -1


def test_regularity_not_weakly_regular_gf27():
    # x0*x2 + 2x1^2 + 2x0^2*x1^2 is bent but its normalized Walsh values are
    # not all p-th roots of unity times W(0)
    f = function_from_anf_text("x0*x2 + 2x1^2 + 2x0^2*x1^2", 3, 3)
    pr = classify_regularity(f)
    assert pr.is_bent and not pr.is_weakly_regular
    assert pr.dual is None


def test_regularity_quarter_turn_gf27():
    # x0*x1 + x2^2 is weakly regular with mu^2 = -1 (odd n, p = 3 mod 4),
    # hence never regular
    f = function_from_anf_text("x0*x1 + x2^2", 3, 3)
    pr = classify_regularity(f)
    assert pr.is_bent and pr.is_weakly_regular and not pr.is_regular
    assert pr.mu_exponent_data == {
        "type": "quarter-turn", "square_sign": -1, "square_zeta_exp": 0
    }


def test_regularity_non_bent_profile():
    pr = classify_regularity(NOT_BENT)
    assert not pr.is_bent and not pr.is_weakly_regular and not pr.is_regular
    assert pr.dual is None and pr.mu_exponent_data is None


def test_regular_dual_pairs():
    for a, b in GF3_2_REGULAR_DUALS.items():
        pr = classify_regularity(B[a])
        assert pr.is_regular and pr.dual == B[b]


def test_self_dual_members():
    for k in GF3_2_SELF_DUAL_MU_MINUS1:
        pr = classify_regularity(B[k])
        assert pr.is_weakly_regular and not pr.is_regular
        assert pr.dual == B[k] and pr.mu_exponent_data["sign"] == -1


def test_dual_round_trip():
    f_star, f_star_star = dual_round_trip(B[2])
    assert f_star == B[3] and f_star_star == B[2]
    f_star, f_star_star = dual_round_trip(B[4])
    assert f_star == B[9] and f_star_star == B[4]
    with pytest.raises(ValueError):
        dual_round_trip(NOT_BENT)


def test_dual_of_even_function_is_even():
    from parybent.core import is_even

    for k in (1, 2, 4, 12):
        assert is_even(classify_regularity(B[k]).dual)


def test_derivative_balance():
    for b in range(1, 9):
        assert derivative_is_balanced(B[1], index_vector(b, 3, 2))
    assert not derivative_is_balanced(PAryFunction.zero(3, 2), (1, 0))


def test_butson_examples():
    assert is_butson(B[8])
    assert not is_butson(NOT_BENT)


def test_butson_boolean_case():
    f = function_from_anf_text("x0*x1 + x2*x3", 2, 4)
    assert is_bent(f)
    assert is_butson(f)
    # a search-produced bent function passes the same matrix test
    from parybent.search import search_bent

    g, _ = search_bent(4, seed=5)
    assert is_butson(g)


def test_triple_equivalence_all_even_candidates_32():
    # bent <=> Butson <=> all nonzero derivatives balanced, on all 81
    for vals in itertools.product(range(3), repeat=4):
        f = even_function_from_pair_values(3, 2, vals)
        b = is_bent(f)
        assert is_butson(f) == b
        assert all_derivatives_balanced(f) == b


def test_galois_covariance():
    assert galois_covariance_holds(B[1], 1)
    assert galois_covariance_holds(B[1], 2)
    rng = random.Random(4)
    for _ in range(5):
        f = PAryFunction(5, 2, tuple(rng.randrange(5) for _ in range(25)))
        assert galois_covariance_holds(f, 2)


def test_galois_covariance_links_negated_tables():
    # b1 = -b10, so sigma_2 carries the spectrum of b1 onto that of b10
    spec1 = walsh_transform(B[1])
    spec10 = walsh_transform(B[10])
    for u in range(9):
        ku = sum(((2 * c) % 3) * 3**i for i, c in enumerate(index_vector(u, 3, 2)))
        assert spec1.values[u].galois(2) == spec10.values[ku]


def test_rational_w0_signature():
    out = rational_w0_signature_check(function_from_anf_text("x0^2+x0*x1", 5, 2))
    assert out == {"w0": 5, "signature": [9, 4, 4, 4, 4], "bent": True}
    zero = rational_w0_signature_check(PAryFunction.zero(3, 2))
    assert zero["w0"] == 9 and zero["signature"] == [9, 0, 0]
    # b1 has W(0) = -3, rational, with signature (1, 4, 4)
    out1 = rational_w0_signature_check(B[1])
    assert out1["w0"] == -3 and out1["signature"] == [1, 4, 4]
    # irrational W(0): not applicable
    assert rational_w0_signature_check(
        function_from_anf_text("x0^2+x1^2+x2^2", 3, 3)
    ) is None


def test_no_rational_w0_among_gf27_bent(classification_33):
    # bent with rational W(0) forces n even, so none of the 2340 qualify;
    # W(0) = sum zeta^(f(x)) is read off the signature counts
    for f in classification_33.functions:
        w0 = CycInt.from_exponent_counts(3, signature(f))
        assert w0.is_rational() is None
