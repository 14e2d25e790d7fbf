import math
import random
from itertools import product

import pytest

from alexzero.exactmath import IntPoly, squarefree_part, sturm_real_root_count
from alexzero.roots import (
    REAL_AXIS_SNAP,
    RESIDUAL_BOUND,
    NoConvergenceError,
    find_zeros,
    zero_report,
)
from alexzero.seifert import alexander_poly
from alexzero.twobridge import CFWord

P = IntPoly


def test_quadratic_conjugate_pair():
    zs = find_zeros(P([1, -1, 1]))
    assert len(zs.zeros) == 2
    z = zs.zeros[1]
    assert abs(z - complex(0.5, math.sqrt(3) / 2)) < 1e-12
    assert zs.zeros[0] == z.conjugate()
    assert zs.real_count_exact == 0


def test_linear():
    zs = find_zeros(P([-1, 1]))
    assert zs.zeros == (complex(1.0, 0.0),)


def test_nonalternating_quartic_has_large_real_zero():
    # value at 4 is 1 - 32 + 240 - 512 + 256 = -47, so a real zero sits
    # beyond 4
    p = P([1, -8, 15, -8, 1])
    assert p(4) == -47
    zs = find_zeros(p)
    assert any(z.imag == 0.0 and z.real > 4 for z in zs.zeros)


def test_zero_report_golden_quadratics():
    rep = zero_report(find_zeros(P([-1, 3, -1])))
    assert abs(rep.min_re - (3 - math.sqrt(5)) / 2) < 1e-12
    assert abs(rep.max_re - (3 + math.sqrt(5)) / 2) < 1e-12
    assert rep.hoste_ok and rep.thm1_ok
    assert rep.all_real and rep.all_positive_real and rep.reciprocal_paired

    rep = zero_report(find_zeros(P([1, -1, 1])))
    assert rep.min_re == rep.max_re == 0.5
    assert rep.hoste_ok and rep.thm1_ok and not rep.all_real


def test_zero_report_hoste_violation_fixture():
    rep = zero_report(find_zeros(P([1, 1, -3, 1, 1])))
    assert rep.min_re < -2
    assert not rep.hoste_ok


def test_link_deflation_exact_unit_root():
    d = alexander_poly(CFWord((1, -1, 1)))
    zs = find_zeros(d)
    assert complex(1.0, 0.0) in zs.zeros
    assert zs.real_count_exact == 3


def test_multiplicity():
    p = P([1, -3, 1])
    zs = find_zeros(p * p)
    assert len(zs.zeros) == 4
    assert zs.real_count_exact == 4
    vals = sorted(z.real for z in zs.zeros)
    assert abs(vals[0] - vals[1]) < 1e-9 and abs(vals[2] - vals[3]) < 1e-9


def test_zeroset_contract_on_random_polys():
    rng = random.Random(2024)
    for _ in range(400):
        deg = rng.randint(1, 8)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
        p = P(coeffs)
        zs = find_zeros(p)
        assert len(zs.zeros) == p.degree
        assert all(r < RESIDUAL_BOUND for r in zs.residuals)
        n_real = sum(1 for z in zs.zeros if abs(z.imag) < REAL_AXIS_SNAP)
        assert n_real == zs.real_count_exact
        # conjugate closure
        for z in zs.zeros:
            if z.imag != 0.0:
                assert any(abs(y - z.conjugate()) < 1e-9 for y in zs.zeros)


def test_real_count_is_exact_against_sturm():
    rng = random.Random(77)
    for _ in range(200):
        deg = rng.randint(1, 7)
        coeffs = [rng.randint(-5, 5) for _ in range(deg)] + [rng.randint(1, 5)]
        p = P(coeffs)
        sf = squarefree_part(p)
        if sf != p.primitive_positive():
            continue
        assert find_zeros(p).real_count_exact == sturm_real_root_count(p)


def test_two_bridge_zero_sets_reciprocal_paired():
    for m in range(1, 5):
        for a in product([-2, -1, 1, 2], repeat=m):
            rep = zero_report(find_zeros(alexander_poly(CFWord(a))))
            assert rep.reciprocal_paired, a


def test_deterministic_output():
    p = P([3, -7, 2, 5, 1])
    a = find_zeros(p)
    b = find_zeros(p)
    assert a.zeros == b.zeros and a.residuals == b.residuals


def test_tol_validation():
    with pytest.raises(ValueError):
        find_zeros(P([1, 1]), tol=1e-5)
    with pytest.raises(ValueError):
        find_zeros(P([1, 1]), tol=1e-16)
    with pytest.raises(ValueError):
        find_zeros(P([7]))


def test_clustered_real_spectrum_stays_real():
    # all roots real inside a short interval: a hard case for coefficient
    # based iteration, covered by the exact fold and centroid shift
    from alexzero.families import p_poly
    zs = find_zeros(p_poly(24, 2))
    assert zs.real_count_exact == 24
    assert all(z.imag == 0.0 for z in zs.zeros)
