"""Symbolic Blaschke arithmetic and rational inner-outer factorization."""

import numpy as np
import pytest

from hardy_na import (
    BlaschkeProduct,
    NotDivisible,
    PoleInDisk,
    RationalFunction,
    ZeroFunction,
    divide,
    gcd,
    inner_outer,
    is_inner_rational,
    multiply,
)

B = BlaschkeProduct
CIRCLE = np.exp(2j * np.pi * np.arange(256) / 256)


def random_blaschke(rng, max_degree=4, r_max=0.8, min_sep=1e-8):
    """Random product with well separated zeros, degree 1..max_degree."""
    deg = int(rng.integers(1, max_degree + 1))
    power = int(rng.integers(0, deg + 1))
    zeros = []
    while len(zeros) < deg - power:
        a = r_max * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        if abs(a) > 0.05 and all(abs(a - b) > min_sep for b in zeros):
            zeros.append(complex(a))
    phase = np.exp(2j * np.pi * rng.uniform())
    return B(phase, power, tuple((a, 1) for a in zeros))


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def test_rejects_nonunimodular_constant():
    with pytest.raises(ValueError):
        B(0.9, 0, ())


def test_rejects_boundary_zero():
    with pytest.raises(ValueError):
        B(1.0, 0, ((0.9999999999999, 1),))


def test_unimodular_on_circle():
    u = B(1j, 1, ((0.5, 2), (-0.3 + 0.2j, 1)))
    assert np.max(np.abs(np.abs(u(CIRCLE)) - 1.0)) < 1e-10


def test_degree_and_unit():
    assert B.unit().is_unit
    assert B(1.0, 2, ((0.5, 3),)).degree == 5


# ---------------------------------------------------------------------------
# multiply / gcd / divide
# ---------------------------------------------------------------------------


def test_multiply_z_times_factor():
    chi = multiply(B.monomial(1), B.factor(-0.3))
    assert chi.monomial_power == 1
    assert chi.zeros == ((-0.3 + 0j, 1),)


def test_multiply_unit_identity():
    a = B(1j, 1, ((0.4, 1),))
    assert multiply(a, B.unit()).equals_with_phase(a)


def test_multiply_merges_equal_zeros():
    sq = multiply(B.factor(0.5), B.factor(0.5))
    assert sq.zeros == ((0.5 + 0j, 2),)


def test_gcd_monomial_with_shifted_factor():
    assert gcd(B.monomial(1), multiply(B.monomial(1), B.factor(-0.3))) == B.monomial(1)


def test_gcd_with_unit():
    assert gcd(B.monomial(1), B.unit()) == B.unit()


def test_gcd_disjoint_zeros():
    assert gcd(B.factor(0.5), B.factor(-0.3)) == B.unit()


def test_divide_examples():
    assert divide(multiply(B.monomial(1), B.factor(-0.3)), B.monomial(1)) == B.factor(
        -0.3
    )
    a = B(1j, 2, ((0.4, 1),))
    assert divide(a, a) == B.unit()
    assert divide(B.monomial(2), B.monomial(1)) == B.monomial(1)


def test_divide_raises_when_not_divisible():
    with pytest.raises(NotDivisible):
        divide(B.monomial(1), B.factor(0.5))
    with pytest.raises(NotDivisible):
        divide(B.factor(0.5), B(1.0, 0, ((0.5, 2),)))


def test_gcd_distributivity_random():
    rng = np.random.default_rng(42)
    for _ in range(50):
        a, b, c = (random_blaschke(rng, 4, min_sep=1e-8 * 10) for _ in range(3))
        lhs = gcd(multiply(a, b), multiply(a, c))
        rhs = multiply(a, gcd(b, c))
        assert lhs == rhs.normalized() or lhs == rhs


def test_divide_multiply_round_trip_random():
    rng = np.random.default_rng(43)
    for _ in range(50):
        a, b = random_blaschke(rng), random_blaschke(rng)
        assert divide(multiply(a, b), b) == a


# ---------------------------------------------------------------------------
# coefficients
# ---------------------------------------------------------------------------


def test_coeffs_of_z_exact():
    from hardy_na import FourierVector

    assert B.monomial(1).coeffs(1e-6) == FourierVector.basis(1)


def test_coeffs_single_factor_low_order():
    # B_a(z) = (z - a)/(1 - a z) = -a + (1-a^2) z + ... for real a
    c = B.factor(0.5).coeffs(1e-14)
    assert c.coeff(0) == pytest.approx(-0.5, abs=1e-13)
    assert c.coeff(1) == pytest.approx(0.75, abs=1e-13)
    # grid-transform oracle for a few higher coefficients
    grid = 1 << 12
    z = np.exp(2j * np.pi * np.arange(grid) / grid)
    oracle = np.fft.fft(B.factor(0.5)(z)) / grid
    for n in (2, 5, 11):
        assert c.coeff(n) == pytest.approx(oracle[n], abs=1e-12)


def test_coeffs_tail_budget_and_resummation():
    rng = np.random.default_rng(44)
    for eps in (1e-8, 1e-12):
        u = random_blaschke(rng, 4)
        c = u.coeffs(eps)
        vals = c.evaluate(CIRCLE)
        assert np.max(np.abs(np.abs(vals) - 1.0)) < 2 * eps


# ---------------------------------------------------------------------------
# rational functions and factorization
# ---------------------------------------------------------------------------


def test_rational_reduction_cancels_common_roots():
    # (z - 0.5)(z - 2) / (z - 0.5) reduces to z - 2
    num = np.convolve([-0.5, 1.0], [-2.0, 1.0])
    f = RationalFunction(num, [-0.5, 1.0])
    assert f.degree_den == 0
    assert f(0.3) == pytest.approx(0.3 - 2.0)


def test_inner_outer_of_z():
    pair = inner_outer(RationalFunction([0.0, 1.0]))
    assert pair.inner == B.monomial(1)
    assert pair.outer(0.7) == pytest.approx(1.0)


def test_inner_outer_of_shifted_factor():
    # z - 1/2 = B_{1/2}(z) * (1 - z/2)
    pair = inner_outer(RationalFunction([-0.5, 1.0]))
    assert pair.inner == B.factor(0.5)
    np.testing.assert_allclose(pair.outer.num, [1.0, -0.5], atol=1e-12)
    assert np.max(np.abs(np.abs(pair.outer(CIRCLE)) - np.abs(0.5 - CIRCLE))) < 1e-12


def test_inner_outer_no_disk_zero():
    pair = inner_outer(RationalFunction([2.0, 1.0]))
    assert pair.inner.is_unit
    np.testing.assert_allclose(pair.outer.num, [2.0, 1.0], atol=1e-12)


def test_inner_outer_errors():
    with pytest.raises(PoleInDisk):
        inner_outer(RationalFunction([1.0], [-0.5, 1.0]))
    with pytest.raises(ZeroFunction):
        inner_outer(RationalFunction([0.0]))


def test_inner_outer_multiply_back_random():
    rng = np.random.default_rng(45)
    for _ in range(100):
        deg = int(rng.integers(1, 9))
        roots = []
        for _ in range(deg):
            if rng.uniform() < 0.5:
                roots.append(0.8 * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))
            else:
                roots.append((1.3 + 2.0 * rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))
        coeffs = np.array([1.0 + 0j])
        for r in roots:
            coeffs = np.convolve(coeffs, [-r, 1.0])
        f = RationalFunction(coeffs)
        pair = inner_outer(f)
        recon = pair.inner(CIRCLE) * pair.outer(CIRCLE)
        assert np.max(np.abs(recon - f(CIRCLE))) < 1e-9
        assert all(abs(r) > 1.0 - 1e-9 for r in pair.outer.num_roots())


def test_is_inner_blaschke_factor():
    ok, w = is_inner_rational(RationalFunction([-0.5, 1.0], [1.0, -0.5]))
    assert ok and w == B.factor(0.5)


def test_is_inner_rejects_half_plus_half_z():
    ok, w = is_inner_rational(RationalFunction([0.5, 0.5]))
    assert not ok and w is None


def test_is_inner_monomial():
    ok, w = is_inner_rational(RationalFunction([0.0, 0.0, 1.0]))
    assert ok and w.monomial_power == 2 and not w.zeros


def test_is_inner_recovers_phase():
    f = RationalFunction(1j * np.array([-0.5, 1.0]), [1.0, -0.5])
    ok, w = is_inner_rational(f)
    assert ok and w.equals_with_phase(B.factor(0.5).scale(1j))
