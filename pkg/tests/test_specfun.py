import math

import pytest

from kgo.errors import NonConvergence, PoleAtC
from kgo.specfun import (KummerParams, hermite, hermite_from_kummer_even,
                         hermite_from_kummer_odd, hermite_value, kummer_m)

XI_SAMPLE = (-3.0, -1.0, -0.1, 0.0, 0.1, 1.0, 3.0)

# explicit coefficient forms, the independent check for the recurrence
DIRECT_POLYS = {
    0: lambda x: 1.0,
    1: lambda x: 2.0 * x,
    2: lambda x: 4.0 * x**2 - 2.0,
    3: lambda x: 8.0 * x**3 - 12.0 * x,
    4: lambda x: 16.0 * x**4 - 48.0 * x**2 + 12.0,
    5: lambda x: 32.0 * x**5 - 160.0 * x**3 + 120.0 * x,
    6: lambda x: 64.0 * x**6 - 480.0 * x**4 + 720.0 * x**2 - 120.0,
}


def test_hermite_low_orders():
    for xi in XI_SAMPLE:
        assert hermite(0, xi) == 1.0
        assert hermite(1, xi) == 2.0 * xi
    assert hermite(2, 0.0) == -2.0
    assert hermite(3, 1.0) == -4.0


def test_hermite_against_direct_polynomials():
    for n, poly in DIRECT_POLYS.items():
        for xi in XI_SAMPLE:
            got = hermite(n, xi)
            want = poly(xi)
            assert math.isclose(got, want, rel_tol=1e-10, abs_tol=1e-12), (n, xi)


def test_hermite_recurrence_self_consistency():
    for n in range(1, 26):
        for xi in XI_SAMPLE:
            lhs = hermite(n + 1, xi)
            rhs = 2.0 * xi * hermite(n, xi) - 2.0 * n * hermite(n - 1, xi)
            assert lhs == rhs, (n, xi)


def test_hermite_parity_bit_for_bit():
    for n in range(26):
        sign = (-1.0) ** n
        for xi in (0.1, 0.73, 1.0, 2.5, 3.0):
            assert hermite(n, -xi) == sign * hermite(n, xi), (n, xi)


def test_hermite_rejects_negative_degree():
    with pytest.raises(ValueError):
        hermite(-1, 0.5)


def test_hermite_overflow_signalled():
    with pytest.raises(OverflowError):
        hermite(500, 10.0)


def test_hermite_value_carries_parity():
    hv = hermite_value(5, 1.2)
    assert hv.n == 5 and hv.xi == 1.2
    assert hermite_value(5, -1.2).value == -hv.value


def test_kummer_at_origin_is_one():
    for a in (-3.0, -0.5, 0.0, 1.7):
        for c in (0.5, 1.5, 2.2):
            assert kummer_m(a, c, 0.0) == 1.0


def test_kummer_two_term_polynomial():
    # M(-1, 3/2, y) = 1 - (2/3) y
    for y in (-2.0, -0.3, 0.0, 0.25, 1.0, 9.0):
        assert kummer_m(-1.0, 1.5, y) == pytest.approx(1.0 - 2.0 * y / 3.0,
                                                       rel=1e-15, abs=1e-15)


def test_kummer_three_term_polynomial():
    # M(-2, 1/2, 1) = 1 - 4 + 4/3
    assert kummer_m(-2.0, 0.5, 1.0) == pytest.approx(-5.0 / 3.0, rel=1e-14)


def test_kummer_pole_at_nonpositive_integer_c():
    for c in (0.0, -1.0, -6.0, -2.0 + 1e-12):
        with pytest.raises(PoleAtC):
            kummer_m(1.0, c, 0.5)


def test_kummer_params_termination_flag():
    assert KummerParams(a=0.0, c=0.5).terminates
    assert KummerParams(a=-4.0, c=1.5).terminates
    assert KummerParams(a=-7.0 + 4e-10, c=0.5).terminates
    assert not KummerParams(a=-0.5, c=0.5).terminates
    assert not KummerParams(a=1.2, c=1.5).terminates


def test_kummer_terminating_next_coefficient_is_exactly_zero():
    # the (n+1)-th Pochhammer factor (a)_{n+1} vanishes identically at a = -n
    a = -5.0
    poch = 1.0
    for k in range(6):
        poch *= a + k
    assert poch == 0.0
    # summing the finitely many terms equals an explicit 6-term evaluation
    y, c = 2.3, 0.5
    s, term = 1.0, 1.0
    for k in range(5):
        term *= (a + k) / (c + k) * y / (k + 1)
        s += term
    assert kummer_m(a, c, y) == s


def test_kummer_terminating_tolerates_float_noise_in_a():
    noisy = kummer_m(-3.0 + 5e-10, 0.5, 1.7)
    exact = kummer_m(-3.0, 0.5, 1.7)
    assert noisy == pytest.approx(exact, rel=1e-8)


def test_kummer_convergent_branch_matches_exponential():
    # M(a, a, y) = e^y for non-integer a
    for y in (-3.0, -0.5, 0.1, 2.0, 10.0):
        assert kummer_m(1.5, 1.5, y) == pytest.approx(math.exp(y), rel=1e-13)


def test_kummer_nonconvergence_signalled():
    with pytest.raises(NonConvergence):
        kummer_m(0.5, 1.5, 400.0)
    with pytest.raises(NonConvergence):
        kummer_m(0.5, 1.5, 800.0)


def test_even_bridge_examples():
    for xi in XI_SAMPLE:
        assert hermite_from_kummer_even(0, xi) == 1.0
    assert hermite_from_kummer_even(2, 1.0) == pytest.approx(-20.0, rel=1e-13)
    assert hermite_from_kummer_even(1, 0.0) == -2.0


def test_odd_bridge_examples():
    for xi in XI_SAMPLE:
        assert hermite_from_kummer_odd(0, xi) == 2.0 * xi
    assert hermite_from_kummer_odd(1, 1.0) == pytest.approx(-4.0, rel=1e-13)
    for n in range(8):
        assert hermite_from_kummer_odd(n, 0.0) == 0.0


def test_bridge_matches_recurrence():
    xs = [-3.0 + 0.25 * i for i in range(25)]
    for n in range(11):
        for xi in xs:
            even = hermite_from_kummer_even(n, xi)
            assert math.isclose(even, hermite(2 * n, xi),
                                rel_tol=1e-10, abs_tol=1e-12), ("even", n, xi)
            odd = hermite_from_kummer_odd(n, xi)
            assert math.isclose(odd, hermite(2 * n + 1, xi),
                                rel_tol=1e-10, abs_tol=1e-12), ("odd", n, xi)


def test_bridge_prefactor_overflow_signalled():
    with pytest.raises(OverflowError):
        hermite_from_kummer_even(150, 1.0)
