from fractions import Fraction

import pytest

from fqtraces.partitions import dominance_leq, partitions_of, size
from fqtraces.specializations import Specialization
from fqtraces.symfunc import (
    PowerSumElement,
    charge,
    hl_q_in_p,
    kostka,
    kostka_foulkes,
    modified_hl_q,
    plethysm_pl,
    schur_expand,
    schur_in_p,
    sym_character,
)

from hl_reference import kostka_foulkes_branching, kostka_foulkes_reference

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


# ---------------------------------------------------------------------------
# Schur functions in the power-sum basis


def test_schur_in_p_small():
    assert schur_in_p((1,)).terms == {(1,): Fraction(1)}
    assert schur_in_p((2,)).terms == {(1, 1): HALF, (2,): HALF}
    assert schur_in_p((1, 1)).terms == {(1, 1): HALF, (2,): -HALF}


def brute_ssyt_fillings(shape, letters):
    """All column-strict fillings with entries in 1..letters, cell by cell."""
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]

    def rec(i, grid):
        if i == len(cells):
            yield [row[:] for row in grid]
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, letters + 1):
            grid[r][c] = v
            yield from rec(i + 1, grid)
        grid[r][c] = 0

    yield from rec(0, [[0] * w for w in shape])


@pytest.mark.parametrize("lam", [(2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1)])
def test_schur_in_p_against_tableau_evaluation(lam):
    # independent oracle: evaluate the tableau monomial sum at an explicit
    # alphabet and compare with the character expansion specialized there
    alphabet = (Fraction(1), HALF, THIRD)
    tableau_value = Fraction(0)
    for filling in brute_ssyt_fillings(lam, len(alphabet)):
        term = Fraction(1)
        for row in filling:
            for v in row:
                term *= alphabet[v - 1]
        tableau_value += term
    sp = Specialization.finite(
        tuple(sorted(alphabet, reverse=True)), (), sum(alphabet)
    )
    assert sp.apply(schur_in_p(lam)) == tableau_value


def test_sym_character_values():
    assert sym_character((2,), (2,)) == 1
    assert sym_character((1, 1), (2,)) == -1
    assert sym_character((2, 1), (1, 1, 1)) == 2
    assert sym_character((2, 1), (3,)) == -1
    assert sym_character((3, 2), (2, 2, 1)) == 1


# ---------------------------------------------------------------------------
# Kostka numbers


def brute_kostka(shape, content):
    count = 0
    for filling in brute_ssyt_fillings(shape, len(content)):
        tally = [0] * len(content)
        for row in filling:
            for v in row:
                tally[v - 1] += 1
        if tuple(tally) == tuple(content):
            count += 1
    return count


def test_kostka_examples():
    assert kostka((2,), (1, 1)) == 1
    assert kostka((1, 1), (2,)) == 0
    for lam in partitions_of(5):
        assert kostka(lam, lam) == 1


def test_kostka_against_brute_force():
    for n in range(1, 6):
        for shape in partitions_of(n):
            for content in partitions_of(n):
                assert kostka(shape, content) == brute_kostka(shape, content)


def test_kostka_size_mismatch():
    with pytest.raises(ValueError):
        kostka((2,), (1,))


# ---------------------------------------------------------------------------
# Charge and the Kostka-Foulkes polynomials


def test_charge_words():
    assert charge([1]) == 0
    assert charge([2, 1]) == 1
    assert charge([1, 2]) == 0
    assert charge([2, 1, 3]) == 2
    assert charge([3, 1, 2]) == 1
    assert charge([1, 1, 2, 2]) == 0


def test_kostka_foulkes_examples():
    assert kostka_foulkes((2,), (1, 1)).to_list() == [0, 1]
    assert kostka_foulkes((1, 1), (1, 1)).to_list() == [1]
    assert kostka_foulkes((2, 1), (1, 1, 1)).to_list() == [0, 1, 1]
    for mu in partitions_of(6):
        assert kostka_foulkes(mu, mu).to_list() == [1]


def test_kostka_foulkes_frozen_degree5_column():
    # frozen from the orthogonality reference construction
    column = {
        (5,): [0, 0, 0, 0, 1],
        (4, 1): [0, 0, 1, 1],
        (3, 2): [0, 1, 1],
        (3, 1, 1): [0, 1],
        (2, 2, 1): [1],
        (2, 1, 1, 1): [],
        (1, 1, 1, 1, 1): [],
    }
    for mu, coeffs in column.items():
        assert kostka_foulkes(mu, (2, 2, 1)).to_list() == coeffs


def test_kostka_foulkes_top_row_is_n_stat_power():
    for n in range(1, 7):
        for lam in partitions_of(n):
            poly = kostka_foulkes((n,), lam)
            assert poly.to_list() == [0] * (sum((i) * p for i, p in enumerate(lam))) + [1]


def test_kostka_foulkes_t1_and_unitriangular():
    for n in range(1, 7):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                poly = kostka_foulkes(mu, lam)
                assert poly(1) == kostka(mu, lam)
                if poly:
                    assert dominance_leq(lam, mu)


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_foulkes_against_orthogonality_oracle(n):
    for t in (HALF, THIRD):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                assert kostka_foulkes(mu, lam)(t) == kostka_foulkes_reference(
                    mu, lam, t
                )


@pytest.mark.parametrize("shape", [(3, 2), (4, 1), (2, 2, 1), (3, 1, 1)])
def test_kostka_foulkes_against_branching_oracle(shape):
    t = Fraction(2, 7)
    row = kostka_foulkes_branching(shape, t)
    for lam in partitions_of(size(shape)):
        assert kostka_foulkes(shape, lam)(t) == row.get(lam, Fraction(0))


# ---------------------------------------------------------------------------
# Hall-Littlewood Q and the modified version


def test_hl_q_examples():
    t = THIRD
    assert hl_q_in_p((1,), t).terms == {(1,): 1 - t}
    s11 = schur_in_p((1, 1))
    assert hl_q_in_p((1, 1), t) == s11 * ((1 - t) * (1 - t**2))
    expected = PowerSumElement(
        {(1, 1): HALF * (1 - t) * (1 - t), (2,): HALF * (1 - t) * (1 + t)}
    )
    assert hl_q_in_p((2,), t) == expected


def test_modified_hl_examples():
    t = THIRD
    assert modified_hl_q((1,), t).terms == {(1,): Fraction(1)}
    assert modified_hl_q((2,), t) == schur_in_p((2,))
    m11 = modified_hl_q((1, 1), t)
    assert m11.terms == {(1, 1): HALF * (1 + t), (2,): -HALF * (1 - t)}


def test_modified_hl_rejects_roots_of_unity():
    with pytest.raises(ValueError):
        modified_hl_q((2, 1), 1)
    with pytest.raises(ValueError):
        modified_hl_q((2,), -1)


def test_schur_expand_of_modified_hl_matches_charge_polynomials():
    for t in (HALF, THIRD):
        for n in range(1, 6):
            for lam in partitions_of(n):
                got = schur_expand(modified_hl_q(lam, t))
                expected = {
                    mu: kostka_foulkes(mu, lam)(t)
                    for mu in partitions_of(n)
                    if kostka_foulkes(mu, lam)
                }
                assert got == expected


# ---------------------------------------------------------------------------
# schur_expand and plethysm


def test_schur_expand_examples():
    assert schur_expand(PowerSumElement({(1, 1): 1})) == {(2,): 1, (1, 1): 1}
    for lam in [(3,), (2, 1), (2, 2), (1, 1, 1, 1)]:
        assert schur_expand(schur_in_p(lam)) == {lam: Fraction(1)}


def test_schur_expand_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        schur_expand(PowerSumElement({(1,): 1, (2,): 1}))


def test_plethysm_examples():
    f = PowerSumElement({(1, 1): HALF, (2,): HALF})
    assert plethysm_pl(f, 1) == f
    assert plethysm_pl(PowerSumElement.p(1), 2).terms == {(2,): 1}
    assert plethysm_pl(f, 2).terms == {(2, 2): HALF, (4,): HALF}


def test_plethysm_composition():
    for n in range(0, 9):
        for rho in partitions_of(n):
            f = PowerSumElement({rho: Fraction(3, 7)})
            for m, k in ((2, 3), (2, 2), (3, 2)):
                assert plethysm_pl(plethysm_pl(f, m), k) == plethysm_pl(f, m * k)


# ---------------------------------------------------------------------------
# The carrier type itself


def test_power_sum_element_product_concatenates_indices():
    f = PowerSumElement({(2, 1): Fraction(2)})
    g = PowerSumElement({(3,): HALF, (1,): 1})
    h = f * g
    assert h.terms == {(3, 2, 1): Fraction(1), (2, 1, 1): Fraction(2)}


def test_power_sum_element_json_round_trip():
    f = PowerSumElement({(2, 1): HALF, (1, 1, 1): Fraction(-1, 3)})
    blob = f.to_json_obj()
    assert blob == [
        {"rho": "2,1", "coeff": "1/2"},
        {"rho": "1,1,1", "coeff": "-1/3"},
    ]
    assert PowerSumElement.from_json_obj(blob) == f


def test_power_sum_element_drops_zeros():
    f = PowerSumElement({(1,): Fraction(0), (2,): Fraction(1)})
    assert list(f.terms) == [(2,)]
