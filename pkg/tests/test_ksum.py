from fractions import Fraction

from vertexcalc.ksum import (k00_closed, k_brute, k_transposed_rational,
                             kgen_closed, ktilde_brute, sun_square_fraction,
                             verify_cor_ik2_and_ksinh, verify_ksinh_series,
                             verify_ktilde_pair_reduction, verify_sun_squares,
                             verify_thm_k, verify_thm_kgen, verify_thm_kt)
from vertexcalc.partitions import all_partitions, conjugate, partitions_of
from vertexcalc.prodred import bracket
from vertexcalc.series import LaurentFraction, expand_in_q


def small_pairs(total):
    return [(mu1, mu2)
            for w1 in range(total + 1) for mu1 in partitions_of(w1)
            for w2 in range(total + 1 - w1) for mu2 in partitions_of(w2)]


def test_empty_pair_series_anchor():
    # degree-one coefficient of the empty-pair series is 1 / (t - 1/t)^2
    ks = k00_closed(3)
    assert ks == k_brute((), (), 3)
    assert ks.c[0] == Fraction(1)
    assert ks.c[1] == bracket(1) ** -2


def test_pair_series_three_routes():
    for mu1, mu2 in small_pairs(3):
        assert verify_thm_k(mu1, mu2, 4)


def test_transposed_pair_rational():
    for mu1, mu2 in small_pairs(4):
        assert verify_thm_kt(mu1, mu2, 4)


def test_transposed_rational_anchor():
    # single box against empty: everything collapses onto (1 - Q)^(-1)
    fr = k_transposed_rational((1,), ())
    one = LaurentFraction.one()
    s2 = LaurentFraction.monomial(1, (0, 2))
    assert fr == bracket(1) ** -1 * (one - s2) ** -1


def test_squared_normal_forms():
    for mu1, mu2 in small_pairs(4):
        assert verify_cor_ik2_and_ksinh(mu1, mu2)


def test_squared_series_expansion():
    for mu1, mu2 in small_pairs(3):
        assert verify_ksinh_series(mu1, mu2, 4)


def test_chain_reduces_to_pair():
    for mu1 in all_partitions(3):
        assert verify_ktilde_pair_reduction(mu1, (), 3)
        assert verify_ktilde_pair_reduction(mu1, (1,), 3)
        assert verify_ktilde_pair_reduction((2, 1), mu1, 3)


def test_chain_closed_form_two_slots():
    pairs = [((), ()), ((1,), ()), ((1,), (1,)), ((2,), (1, 1))]
    for mu1, mu2 in pairs:
        assert verify_thm_kgen((mu1, mu2), (3,))


def test_chain_closed_form_three_slots():
    triples = [((), (), ()), ((1,), (), ()), ((), (1,), ()), ((1,), (1,), (1,))]
    for mus in triples:
        assert verify_thm_kgen(mus, (2, 2))


def test_chain_value_matches_closed_everywhere_in_box():
    kt = ktilde_brute(((1,), (1,)), (3,))
    kc = kgen_closed(((1,), (1,)), (3,))
    assert ktilde_brute(((), ()), (2,)).get((0,)) == 1
    for d in range(4):
        assert kt.get((d,)) == kc.get((d,))


def test_squared_chain_fraction_two_slots():
    pairs = [((), ()), ((1,), ()), ((1,), (1,)), ((2,), (1,))]
    for mus in pairs:
        assert verify_sun_squares(mus, (3,))


def test_squared_chain_fraction_three_slots():
    assert verify_sun_squares(((1,), (), ()), (2, 2))
    assert verify_sun_squares(((1,), (1,), ()), (2, 2))


def test_square_fraction_empty_is_one():
    assert sun_square_fraction(((), ()), 2) == LaurentFraction.one()
    assert sun_square_fraction(((), (), ()), 3) == LaurentFraction.one()
