"""Ladder and series coefficients: recurrences vs step formulas, exactly."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from exact_reference import E_STEPWISE, d_closed
from oddzeta.coeffs import (
    build_table,
    d_coeff,
    e_coeff,
    f_ratio,
    table_to_csv,
    table_to_json,
)
from oddzeta.errors import ResourceLimitError


def test_d_coeff_small_values():
    assert d_coeff(1, 1) == Fraction(1, 4)
    assert d_coeff(1, 2) == Fraction(1, 12)
    assert d_coeff(2, 1) == Fraction(1, 96)
    assert d_coeff(1, 3) == Fraction(1, 48)


def test_d_recurrence_from_closed_form():
    for n in range(1, 21):
        for k in range(1, 9):
            assert d_coeff(n, k) == d_closed(n, k)


def test_d_ladder_identity():
    # D_n(k+1) * (2n + k) recovers D_n(k) exactly
    for n in range(1, 51):
        for k in range(1, 13):
            assert d_coeff(n, k + 1) * (2 * n + k) == d_coeff(n, k)


def test_e_coeff_small_values():
    assert e_coeff(1, 1) == Fraction(1, 4)
    assert e_coeff(1, 2) == Fraction(5, 24)
    assert e_coeff(1, 3) == Fraction(11, 84)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_general_recurrence_equals_step_formulas(k):
    step = E_STEPWISE[k]
    for n in range(1, 51):
        assert e_coeff(n, k) == step(n)


def test_e_base_column_equals_ladder_base():
    for n in range(1, 51):
        assert e_coeff(n, 1) == d_coeff(n, 1)


def test_f_ratio_values():
    assert f_ratio(1, 1) == 1
    assert f_ratio(1, 2) == Fraction(5, 6)
    assert f_ratio(2, 2) == Fraction(9, 10)


def test_f_ratio_second_column_closed_form():
    for n in range(1, 51):
        assert f_ratio(n, 2) == 1 - Fraction(1, 2 * (2 * n + 1))


@given(
    st.integers(min_value=1, max_value=40),
    st.integers(min_value=1, max_value=10),
)
def test_coefficients_canonical_form(n, k):
    for value in (d_coeff(n, k), e_coeff(n, k)):
        assert value.denominator > 0
        assert gcd(abs(value.numerator), value.denominator) == 1


def test_build_table_single_cell():
    table = build_table(1, 1)
    assert table.k_max == 1 and table.n_max == 1
    assert table.e(1, 1) == Fraction(1, 4)
    assert table.d1(1) == Fraction(1, 4)


def test_build_table_matches_point_queries():
    table = build_table(3, 2)
    assert table.e(2, 3) == e_coeff(2, 3)
    for k in range(1, 4):
        for n in range(1, 3):
            assert table.e(n, k) == e_coeff(n, k)


def test_build_table_deterministic_and_immutable():
    a = build_table(4, 10)
    b = build_table(4, 10)
    assert a == b
    assert isinstance(a.entries, tuple)
    with pytest.raises(AttributeError):
        a.n_max = 99


def test_build_table_full_grid_matches_steps():
    table = build_table(5, 50)
    for k in range(2, 6):
        step = E_STEPWISE[k]
        for n in range(1, 51):
            assert table.e(n, k) == step(n)


def test_table_bounds_checked():
    table = build_table(2, 3)
    with pytest.raises(IndexError):
        table.e(4, 1)
    with pytest.raises(IndexError):
        table.e(1, 3)


def test_table_cell_ceiling():
    with pytest.raises(ResourceLimitError):
        build_table(2000, 2000)


def test_csv_dump_exact():
    assert table_to_csv(build_table(1, 1)) == "k,n,numerator,denominator\n1,1,1,4\n"


def test_csv_dump_rows_ordered():
    text = table_to_csv(build_table(2, 2))
    assert text.splitlines() == [
        "k,n,numerator,denominator",
        "1,1,1,4",
        "1,2,1,96",
        "2,1,5,24",
        "2,2,3,320",
    ]


def test_json_dump():
    import json

    rows = json.loads(table_to_json(build_table(2, 1)))
    assert rows == [
        {"k": 1, "n": 1, "value": "1/4"},
        {"k": 2, "n": 1, "value": "5/24"},
    ]


def test_argument_validation():
    for bad in ((0, 1), (1, 0), (-3, 2)):
        with pytest.raises(ValueError):
            d_coeff(*bad)
        with pytest.raises(ValueError):
            e_coeff(*bad)
