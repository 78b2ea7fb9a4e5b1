from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from ppcd.counting import (
    COUNT_SERIES,
    REFERENCE_COUNTS,
    REFERENCE_FIRST_GENUS,
    CountReport,
    CountRow,
    KnotSpec,
    RationalGF,
    euler_char,
    euler_totient,
    gf_expand,
    sc_curve_count,
    sequence_report,
    spheres_for_genus,
    surface_count,
)
from ppcd.errors import GenusTooSmall, NonPositive, NotExpandable, TooFewTangles

EXPECTED_COUNTS = (
    12, 8, 16, 16, 32, 16, 48, 32, 48, 32,
    80, 32, 96, 48, 64, 64, 128, 48, 144, 64,
)


def test_reference_counts_frozen():
    assert REFERENCE_COUNTS == EXPECTED_COUNTS
    assert REFERENCE_FIRST_GENUS == 2


def test_surface_count_matches_reference():
    for i, want in enumerate(EXPECTED_COUNTS):
        assert surface_count(i + 2) == want


def test_surface_count_formula():
    assert surface_count(2) == 12
    for genus in range(3, 200):
        assert surface_count(genus) == 8 * euler_totient(genus - 1)
    with pytest.raises(GenusTooSmall):
        surface_count(1)


def test_euler_totient_against_sympy():
    for n in range(1, 200):
        assert euler_totient(n) == int(sympy.totient(n))
    with pytest.raises(NonPositive):
        euler_totient(0)


@given(st.integers(min_value=1, max_value=5000))
def test_euler_totient_property(n):
    assert euler_totient(n) == int(sympy.totient(n))


def test_sc_curve_count():
    assert sc_curve_count(4) == 2
    assert sc_curve_count(5) == 5
    assert sc_curve_count(6) == 9
    with pytest.raises(TooFewTangles):
        sc_curve_count(3)


def test_sphere_bookkeeping():
    assert spheres_for_genus(3) == 2
    assert euler_char(spheres_for_genus(5)) == -8


def test_knot_spec():
    assert KnotSpec((3, 4, 5, 7)).counts_apply() is True
    assert KnotSpec((2, 4, 5, 7)).counts_apply() is False
    assert KnotSpec((3, 4, 5)).counts_apply() is False
    assert KnotSpec((3, 3, 3, 3, 3)).counts_apply() is False
    assert KnotSpec((3, 4, 5)).tangles == 3


def test_gf_expand_first_terms():
    assert gf_expand(COUNT_SERIES, 6) == (0, 12, 38, 88, 170, 292)


def test_gf_expand_convolution_identity():
    # independent oracle: denominator * series must reproduce the numerator
    terms = 30
    coeffs = gf_expand(COUNT_SERIES, terms)
    num, den = COUNT_SERIES.numerator, COUNT_SERIES.denominator
    for k in range(terms):
        conv = sum(
            den[j] * coeffs[k - j] for j in range(len(den)) if j <= k
        )
        want = num[k] if k < len(num) else 0
        assert conv == want


def test_gf_expand_recurrence():
    # past the numerator the series obeys the (1-x)^4 recurrence
    c = gf_expand(COUNT_SERIES, 30)
    for k in range(5, 30):
        assert c[k] == 4 * c[k - 1] - 6 * c[k - 2] + 4 * c[k - 3] - c[k - 4]


def test_gf_expand_against_sympy():
    x = sympy.symbols("x")
    num = sum(c * x**i for i, c in enumerate(COUNT_SERIES.numerator))
    den = sum(c * x**i for i, c in enumerate(COUNT_SERIES.denominator))
    series = sympy.series(num / den, x, 0, 30).removeO()
    want = tuple(int(series.coeff(x, k)) for k in range(30))
    assert gf_expand(COUNT_SERIES, 30) == want


def test_series_agrees_with_count_only_at_genus_2():
    c = gf_expand(COUNT_SERIES, 6)
    assert c[1] == surface_count(2) == 12
    assert c[2] == 38
    assert c[2] != surface_count(3) == 8


def test_gf_expand_fraction_coefficients():
    assert gf_expand(RationalGF((1,), (2,)), 2) == (Fraction(1, 2), Fraction(1, 2) * 0)
    assert gf_expand(RationalGF((1, 1), (1, -2)), 4) == (1, 3, 6, 12)


def test_gf_expand_not_expandable():
    with pytest.raises(NotExpandable):
        gf_expand(RationalGF((1,), (0, 1)), 3)
    with pytest.raises(NotExpandable):
        gf_expand(RationalGF((1,), ()), 3)


def test_sequence_report_rows():
    report = sequence_report(5, enumerated={3: 4})
    assert isinstance(report, CountReport)
    assert [r.genus for r in report.rows] == [2, 3, 4, 5]
    row2, row3, row4, _ = report.rows
    assert row2 == CountRow(
        genus=2,
        count=12,
        reference=12,
        doubled_enumeration=None,
        series_coefficient=12,
        matches_reference=True,
        matches_series=True,
    )
    assert row3.doubled_enumeration == 8
    assert row3.count == 8
    assert row3.matches_series is False
    assert row4.doubled_enumeration is None
    assert report.all_references_match()


def test_sequence_report_past_reference_table():
    report = sequence_report(23)
    tail = report.rows[-2:]
    assert [r.genus for r in tail] == [22, 23]
    assert all(r.reference is None for r in tail)
    assert all(r.matches_reference is None for r in tail)
    assert report.all_references_match()
    with pytest.raises(GenusTooSmall):
        sequence_report(1)
