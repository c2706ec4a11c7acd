from fractions import Fraction
from itertools import product

import pytest

from fqtraces.partitions import partitions_of, transpose
from fqtraces.specializations import (
    GeometricSpread,
    Specialization,
    geometric_spread,
    spec_power_sum,
    specialize,
)
from fqtraces.symfunc import PowerSumElement, plethysm_pl, schur_in_p

HALF = Fraction(1, 2)


def test_power_sum_values():
    sp = Specialization.finite((1,), (), 1)
    assert spec_power_sum(sp, 5) == 1
    sp = Specialization.finite((), (1,), 1)
    assert spec_power_sum(sp, 2) == -1
    assert spec_power_sum(sp, 3) == 1
    sp = Specialization.finite((HALF, HALF), (), 1)
    assert spec_power_sum(sp, 2) == HALF


def test_finite_form_validation():
    with pytest.raises(ValueError):
        Specialization.finite((HALF, 1), (), 1)  # not decreasing
    with pytest.raises(ValueError):
        Specialization.finite((1,), (HALF,), 1)  # mass above gamma
    with pytest.raises(ValueError):
        Specialization.finite((-1,), (), 1)


def test_schur_values_single_parameter():
    sp_a = Specialization.finite((1,), (), 1)
    assert specialize(sp_a, schur_in_p((2,))) == 1
    assert specialize(sp_a, schur_in_p((1, 1))) == 0
    sp_b = Specialization.finite((), (1,), 1)
    assert specialize(sp_b, schur_in_p((1, 1))) == 1
    assert specialize(sp_b, schur_in_p((2,))) == 0


@pytest.mark.parametrize(
    "betas",
    [(Fraction(1),), (HALF, Fraction(1, 4)), (Fraction(1, 3), Fraction(1, 3))],
)
def test_omega_duality(betas):
    # swapping the parameter sides transposes the diagram
    sp_beta = Specialization.finite((), betas, 1)
    sp_alpha = Specialization.finite(betas, (), 1)
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert sp_beta.apply(schur_in_p(lam)) == sp_alpha.apply(
                schur_in_p(transpose(lam))
            )


def test_specialization_is_ring_homomorphism():
    sp = Specialization.finite((HALF,), (Fraction(1, 4),), 1)
    elements = [
        schur_in_p((2,)),
        schur_in_p((1, 1)),
        PowerSumElement({(2, 1): Fraction(3), (1,): Fraction(-1, 2)}),
        PowerSumElement({(4,): 1}),
    ]
    for f, g in product(elements, repeat=2):
        assert sp.apply(f * g) == sp.apply(f) * sp.apply(g)


def test_geometric_spread_examples():
    sp = geometric_spread((1,), 2)
    assert sp.power_sum(1) == 1
    assert sp.power_sum(2) == Fraction(1, 3)
    assert geometric_spread((), 2).power_sum(3) == 0
    with pytest.raises(ValueError):
        geometric_spread((1, 1), 2)  # mass 2 > 1


def test_geometric_spread_matches_truncated_sums():
    # closed form vs explicitly summing many terms of the array
    seq = (HALF, Fraction(1, 4))
    q = Fraction(3)
    spread = GeometricSpread(seq, q)
    for k in (1, 2, 3, 5):
        direct = sum(
            ((1 - 1 / q) * s * q ** (1 - j)) ** k for s in seq for j in range(1, 60)
        )
        closed = spread.power(k)
        assert abs(closed - direct) < Fraction(1, 10**20)


def test_spread_frequencies_sorted():
    spread = GeometricSpread((HALF, Fraction(1, 3)), Fraction(2))
    freqs = spread.frequencies(6)
    assert freqs == sorted(freqs, reverse=True)
    assert freqs[0] == Fraction(1, 4)
    assert GeometricSpread((1,), 2).frequencies(3) == [HALF, Fraction(1, 4), Fraction(1, 8)]


def test_plethysm_specialization_identity():
    # composing with index stretching equals the power-twisted parameters
    alphas = (HALF,)
    betas = (Fraction(1, 4), Fraction(1, 8))
    sp = Specialization.finite(alphas, betas, 1)
    for n in (2, 3):
        twisted_beta = [-((-b) ** n) for b in betas]

        def pk(k, n=n):
            return sum(a ** (n * k) for a in alphas) + (-1) ** (k - 1) * sum(
                tb**k for tb in twisted_beta
            )

        gamma = sp.power_sum(n)
        twisted = Specialization.from_power_values(gamma, pk)
        for deg in range(1, 5):
            for lam in partitions_of(deg):
                f = schur_in_p(lam)
                assert sp.apply(plethysm_pl(f, n)) == twisted.apply(f), (n, lam)


def test_power_values_presentation():
    sp = Specialization.from_power_values(1, lambda k: Fraction(1, 2**k))
    assert sp.power_sum(1) == 1
    assert sp.power_sum(3) == Fraction(1, 8)
