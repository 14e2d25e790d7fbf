from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alexzero.twobridge import (
    CFWord,
    NotReducedError,
    OutOfRangeError,
    ParityError,
    cf_to_fraction,
    classify,
    even_cf_expand,
    normalize_fraction,
    sign_runs,
)


def test_cfword_validation():
    with pytest.raises(ValueError):
        CFWord(())
    with pytest.raises(ValueError):
        CFWord((1, 0, 2))
    w = CFWord.parse("1,-1,2")
    assert w.a == (1, -1, 2)
    assert str(w) == "1,-1,2"
    assert w.m == 3
    assert w.signs() == (1, -1, 1)
    assert w.magnitudes() == (1, 1, 2)
    with pytest.raises(ValueError):
        CFWord.parse("1,x")


def test_normalize_fraction():
    assert normalize_fraction(1, 3) == (2, 3)
    assert normalize_fraction(2, 5) == (2, 5)
    assert normalize_fraction(3, 5) == (2, 5)
    with pytest.raises(NotReducedError):
        normalize_fraction(2, 4)
    with pytest.raises(OutOfRangeError):
        normalize_fraction(3, 2)
    with pytest.raises(OutOfRangeError):
        normalize_fraction(0, 2)


def test_expand_examples():
    assert even_cf_expand(2, 3).a == (1, 1)
    assert even_cf_expand(2, 5).a == (1, -1)
    assert even_cf_expand(1, 2).a == (1,)


def test_expand_rejects_both_odd():
    with pytest.raises(ParityError):
        even_cf_expand(1, 3)


def test_cf_to_fraction_examples():
    assert cf_to_fraction(CFWord((1, 1))) == (2, 3)
    assert cf_to_fraction(CFWord((1,))) == (1, 2)
    assert cf_to_fraction(CFWord((1, -1))) == (2, 5)


def test_expansion_deterministic():
    assert even_cf_expand(144, 233).a == even_cf_expand(144, 233).a


@settings(max_examples=300)
@given(st.integers(2, 500), st.integers(1, 499))
def test_round_trip_and_parity_law(alpha, beta):
    beta %= alpha
    if beta == 0 or gcd(beta, alpha) != 1:
        return
    if beta % 2 == alpha % 2:
        return
    w = even_cf_expand(beta, alpha)
    assert cf_to_fraction(w) == (beta, alpha)
    # links (m odd) have even determinant
    assert (w.m % 2 == 1) == (alpha % 2 == 0)


def test_round_trip_exhaustive_small():
    for alpha in range(2, 101):
        for beta in range(1, alpha):
            if gcd(beta, alpha) != 1 or beta % 2 == alpha % 2:
                continue
            assert cf_to_fraction(even_cf_expand(beta, alpha)) == (beta, alpha)


def test_classify_trefoil_word():
    c = classify(CFWord((1, 1)))
    assert c.is_knot and not c.is_link
    assert c.fibered and c.special_alternating
    assert not c.alternating_diagram and not c.thm2_applicable
    assert not c.thm3_applicable
    assert c.thm4_applicable  # single run of length 2


def test_classify_figure_eight_word():
    c = classify(CFWord((1, -1)))
    assert c.is_knot and c.fibered
    assert c.alternating_diagram and c.thm2_applicable
    assert c.thm3_applicable and not c.thm3_strong
    assert c.thm4_applicable


def test_classify_link_word():
    c = classify(CFWord((2, -2, 2)))
    assert c.is_link and not c.is_knot
    assert c.thm2_applicable and c.thm3_applicable and c.thm3_strong
    assert not c.fibered and not c.thm4_applicable


def test_classify_xor_invariant():
    for a in [(1,), (1, 1), (2, -1, 3), (1, 1, 1, -1)]:
        c = classify(CFWord(a))
        assert c.is_knot != c.is_link
        if c.thm2_applicable:
            assert c.alternating_diagram


def test_sign_runs():
    assert sign_runs(CFWord((1, 1, -1, 1))) == (2, 1, 1)
    assert sign_runs(CFWord((1, -1))) == (1, 1)
    assert sign_runs(CFWord((2, 3, 4))) == (3,)
    assert sign_runs(CFWord((-1, -2, 3, -4))) == (2, 1, 1)
