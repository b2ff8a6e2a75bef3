import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonia import fourier_core as fc
from harmonia.errors import InvalidArgument, ParityError
from harmonia.fourier_core import SymmetricTrigPoly


def polys(max_freq=12, max_coeff=50):
    return st.dictionaries(st.integers(0, max_freq), st.integers(-max_coeff, max_coeff),
                           max_size=6).map(SymmetricTrigPoly)


def test_from_constant():
    assert fc.from_constant(1) == {0: 1}
    assert fc.from_constant(0) == {}
    p = fc.from_constant(-3)
    assert p == {0: -3}
    assert fc.evaluate(p, 1.0) == -3


def test_zero_coefficients_dropped():
    assert SymmetricTrigPoly({0: 0, 3: 0, 4: 2}) == {4: 2}


@pytest.mark.parametrize("bad", [{-1: 1}, {1.0: 1}, {1: 0.5}])
def test_constructor_rejects(bad):
    with pytest.raises(InvalidArgument):
        SymmetricTrigPoly(bad)


def test_dirichlet_small():
    assert fc.dirichlet(0) == {0: 1}
    assert fc.dirichlet(1) == {1: 1}
    assert fc.dirichlet(2) == {0: 1, 2: 1}
    # sin(3 pi/2) / sin(pi/2)
    assert fc.evaluate(fc.dirichlet(2), math.pi / 2) == pytest.approx(-1.0, abs=1e-15)


def test_dirichlet_matches_ratio():
    rng = np.random.default_rng(7)
    for N in range(51):
        xs = rng.uniform(0.01, math.pi / 2, 100)
        expected = np.sin((N + 1) * xs) / np.sin(xs)
        got = fc.evaluate(fc.dirichlet(N), xs)
        np.testing.assert_allclose(got, expected, rtol=1e-9, atol=1e-9)
        assert fc.evaluate(fc.dirichlet(N), 0.0) == N + 1


def test_scale_frequency():
    assert fc.scale_frequency(SymmetricTrigPoly({1: 1}), 3) == {3: 1}
    assert fc.scale_frequency(SymmetricTrigPoly({0: 1, 2: 1}), 2) == {0: 1, 4: 1}
    p = fc.scale_frequency(fc.dirichlet(2), 5)
    assert fc.evaluate(p, 0.3) == pytest.approx(fc.evaluate(fc.dirichlet(2), 1.5), abs=1e-12)
    with pytest.raises(InvalidArgument):
        fc.scale_frequency(p, 0)


def test_multiply_examples():
    two_cos = SymmetricTrigPoly({1: 1})
    assert fc.multiply(two_cos, two_cos) == {0: 2, 2: 1}
    p = SymmetricTrigPoly({0: 4, 3: -2, 7: 1})
    assert fc.multiply(p, fc.from_constant(1)) == p
    d2 = fc.dirichlet(2)
    expected = (math.sin(2.1) / math.sin(0.7)) ** 2
    assert fc.evaluate(fc.multiply(d2, d2), 0.7) == pytest.approx(expected, rel=1e-10)


def test_multiply_against_naive_convolution():
    # brute-force two-sided convolution as an independent check
    rng = np.random.default_rng(3)
    for _ in range(30):
        a = SymmetricTrigPoly({int(m): int(c) for m, c in
                               zip(rng.integers(0, 9, 4), rng.integers(-5, 6, 4))})
        b = SymmetricTrigPoly({int(m): int(c) for m, c in
                               zip(rng.integers(0, 9, 3), rng.integers(-5, 6, 3))})
        full = {}
        for u in range(-8, 9):
            for v in range(-8, 9):
                full[u + v] = full.get(u + v, 0) + a.coeffs.get(abs(u), 0) * b.coeffs.get(abs(v), 0)
        expected = {m: c for m, c in full.items() if m >= 0 and c}
        assert fc.multiply(a, b) == expected


def test_power_and_big_integers():
    p = fc.power(fc.dirichlet(30), 30)
    # value at x = 0 is 31**30, exceeding float precision
    assert sum(p.coeffs.values()) * 2 - p.constant_coefficient() == 31 ** 30
    assert fc.power(fc.dirichlet(3), 0) == {0: 1}


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * fc.from_constant(1) == p
    assert all(c != 0 for c in (p * q).coeffs.values())


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.floats(0, 2 * math.pi))
def test_multiply_is_pointwise(p, q, x):
    lhs = fc.evaluate(p * q, x)
    rhs = fc.evaluate(p, x) * fc.evaluate(q, x)
    scale = max(1.0, sum(abs(c) for c in p.coeffs.values()) * sum(abs(c) for c in q.coeffs.values()) * 4)
    assert abs(lhs - rhs) <= 1e-9 * scale


def test_mul_by_cos_exact_cases():
    assert fc.mul_by_cos(fc.from_constant(1), 0) == {0: 1}
    # (2cos 2x) cos x = cos x + cos 3x -> half-integers, so the strict product refuses
    with pytest.raises(ParityError):
        fc.mul_by_cos(SymmetricTrigPoly({2: 1}), 1)
    # 2 * (1 + 2cos 2x) cos 2x = 2 + 2cos 2x + 2cos 4x -> {0: 1, 2: 1, 4: 1}
    p = SymmetricTrigPoly({0: 2, 2: 2})
    got = fc.mul_by_cos(p, 2)
    assert got == {0: 2, 2: 1, 4: 1}
    assert fc.evaluate(got, 0.37) == pytest.approx(fc.evaluate(p, 0.37) * math.cos(0.74), rel=1e-14)


def test_mul_by_cos_half_integer_example():
    # (2cos x) cos x = 1 + cos 2x has coefficient 1/2 at frequency 2
    with pytest.raises(ParityError):
        fc.mul_by_cos(SymmetricTrigPoly({1: 1}), 1)
    doubled = fc.mul_by_double_cos(SymmetricTrigPoly({1: 1}), 1)
    assert doubled == {0: 2, 2: 1}
    assert doubled.constant_coefficient() // 2 == 1


def test_mul_by_double_cos_sign_and_zero():
    p = fc.dirichlet(3)
    assert fc.mul_by_double_cos(p, -4) == fc.mul_by_double_cos(p, 4)
    assert fc.mul_by_double_cos(p, 0) == {m: 2 * c for m, c in p.coeffs.items()}
    # B(1, 1): constant term of D_1 * cos(-x) is 1
    assert fc.mul_by_double_cos(fc.dirichlet(1), -1).constant_coefficient() == 2


def test_accessors():
    assert fc.constant_coefficient(SymmetricTrigPoly()) == 0
    assert fc.constant_coefficient(SymmetricTrigPoly({0: 5, 2: 1})) == 5
    assert fc.max_frequency(fc.dirichlet(4)) == 4
    assert fc.max_frequency(fc.from_constant(7)) == 0
    assert fc.evaluate(SymmetricTrigPoly({1: 1}), 0) == 2
    assert fc.evaluate(fc.dirichlet(3), 0.5) == pytest.approx(math.sin(2.0) / math.sin(0.5), rel=1e-12)


def test_immutable():
    p = fc.dirichlet(4)
    with pytest.raises(TypeError):
        p.coeffs[0] = 9
    q = fc.multiply(p, p)
    assert p == fc.dirichlet(4) and len(q) > len(p)
