"""Binomial parity, the Hopf condition, and the bound table."""

import math

import pytest

from sosforms.hopf import (
    HopfTriple,
    binom_parity,
    binom_parity_pascal,
    bound_table,
    bound_table_csv,
    bound_table_text,
    hopf_admissible,
    hopf_lower_bound,
    hopf_violation_witness,
    hurwitz_radon_upper_bound,
    rho,
)


def test_parity_examples():
    assert binom_parity(3, 1) == "odd"
    assert binom_parity(8, 4) == "even"
    for n in (0, 1, 7, 100):
        assert binom_parity(n, 0) == "odd"
    assert binom_parity(5, -1) == "even"
    assert binom_parity(5, 6) == "even"


def test_parity_against_math_comb():
    for n in range(0, 30):
        for i in range(-1, n + 2):
            expected = "odd" if 0 <= i <= n and math.comb(n, i) % 2 else "even"
            assert binom_parity(n, i) == expected


def test_lucas_vs_pascal_full_range():
    for n in range(0, 513):
        for i in range(0, n + 1):
            assert binom_parity(n, i) == binom_parity_pascal(n, i)


def test_admissible_examples():
    assert hopf_admissible(1, 1, 1)  # empty range
    assert not hopf_admissible(3, 3, 3)  # C(3,1) odd
    assert hopf_admissible(4, 4, 4)  # 4, 6, 4 all even
    assert hopf_violation_witness(3, 3, 3) == 1
    assert hopf_violation_witness(4, 4, 4) is None


def test_admissible_symmetry():
    for r in range(1, 65):
        for s in range(r, 65):
            for n in range(1, 65):
                assert hopf_admissible(r, s, n) == hopf_admissible(s, r, n)


def test_admissible_monotone_in_r_s():
    for r in range(1, 13):
        for s in range(1, 13):
            for n in range(max(r, s), 17):
                if hopf_admissible(r, s, n):
                    assert hopf_admissible(max(r - 1, 1), s, n)
                    assert hopf_admissible(r, max(s - 1, 1), n)


def test_powers_of_two_always_admissible():
    for k in range(1, 8):
        n = 2 ** k
        assert hopf_admissible(n, n, n)


def test_lower_bound_spot_values():
    assert hopf_lower_bound(2, 2) == 2
    assert hopf_lower_bound(3, 3) == 4
    assert hopf_lower_bound(5, 5) == 8
    assert hopf_lower_bound(9, 9) == 16
    for s in (1, 2, 5, 11):
        assert hopf_lower_bound(1, s) == s


def test_lower_bound_below_next_power_of_two():
    for r in range(1, 20):
        for s in range(1, 20):
            n = hopf_lower_bound(r, s)
            assert max(r, s) <= n <= 1 << (max(r, s) - 1).bit_length()


def test_rho_values():
    assert [rho(n) for n in (1, 2, 4, 8, 16, 32, 64, 128, 256)] == [
        1, 2, 4, 8, 9, 10, 12, 16, 17,
    ]
    assert rho(12) == 4
    assert rho(48) == 9  # 48 = 16 * 3
    for odd in (1, 3, 5, 7, 9):
        assert rho(odd) == 1


def test_upper_bound_recipe():
    assert hurwitz_radon_upper_bound(2, 2) == 2
    assert hurwitz_radon_upper_bound(3, 3) == 4
    assert hurwitz_radon_upper_bound(5, 5) == 8
    assert hurwitz_radon_upper_bound(1, 7) == 7
    assert hurwitz_radon_upper_bound(10, 10) == 32


def test_bound_table_entries():
    entries = {(e.r, e.s): e for e in bound_table(3, 3)}
    assert entries[(2, 2)].hopf_lower == 2
    assert entries[(2, 2)].construct_upper == 2
    assert entries[(2, 2)].tight
    assert entries[(3, 3)].hopf_lower == 4
    assert entries[(3, 3)].construct_upper == 4
    assert entries[(3, 3)].tight
    for s in (1, 2, 3):
        assert entries[(1, s)].tight


def test_bound_table_lower_le_upper():
    for e in bound_table(6, 6, verify=False):
        assert e.hopf_lower <= e.construct_upper


def test_bound_table_csv_header():
    text = bound_table_csv(bound_table(2, 2, verify=False))
    assert text.splitlines()[0] == "r,s,hopf_lower,construct_upper,tight"
    assert "2,2,2,2,true" in text


def test_bound_table_text_alignment():
    text = bound_table_text(bound_table(2, 2, verify=False))
    lines = text.splitlines()
    assert "lower" in lines[0] and "tight" in lines[0]
    assert any("yes" in line for line in lines[2:])


def test_hopf_triple_unpacks():
    triple = HopfTriple(3, 3, 4)
    assert hopf_admissible(*triple)
    assert triple.n == 4


def test_input_validation():
    with pytest.raises(ValueError):
        hopf_admissible(0, 1, 1)
    with pytest.raises(ValueError):
        hopf_lower_bound(0, 1)
    with pytest.raises(ValueError):
        rho(0)
