"""Tests for recurrence verification and Gosper-style derivation."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperaccel.exact_arith import MultiPoly, RatFunc
from hyperaccel.hypergeom_terms import (
    FamilyId,
    alt_control_double_offset,
    alt_control_single_offset,
    family_instantiate,
    family_term,
)
from hyperaccel.telescoper import (
    builtin_recurrence,
    builtin_residual,
    derive_recurrence,
    gosper,
    recurrence_residual,
    same_ratio,
    specialize,
    verify_recurrence,
    zeilberger_two_term,
)

_N_IDX = 6  # position of n in the exponent vectors


def _coeff(p: MultiPoly, **powers: int) -> F:
    names = "abcdefnkj"
    key = tuple(powers.get(v, 0) for v in names)
    return p.as_dict().get(key, F(0))


# ---------------------------------------------------------------------------
# Stored recurrences: exact symbolic verification
# ---------------------------------------------------------------------------


def test_builtin_quarter_residual_is_zero():
    assert builtin_residual(FamilyId.QUARTER).is_zero


def test_builtin_neg_quarter_residual_is_zero():
    assert builtin_residual(FamilyId.NEG_QUARTER).is_zero


def test_builtin_neg_27_residual_is_zero():
    assert builtin_residual(FamilyId.NEG_27).is_zero


def test_builtin_dataset_spot_values():
    q = builtin_recurrence(FamilyId.QUARTER)
    assert _coeff(q.p1, n=4) == -1
    assert _coeff(q.p2, n=4) == 4
    assert q.r == 1
    nq = builtin_recurrence(FamilyId.NEG_QUARTER)
    assert nq.r == 2
    assert _coeff(nq.p1, n=4) == -1
    assert _coeff(nq.p2, n=4) == -4
    n27 = builtin_recurrence(FamilyId.NEG_27)
    assert n27.r == 1
    assert _coeff(n27.p1, n=6) == -16
    assert _coeff(n27.p2, n=6) == -432


def test_builtin_recurrence_only_for_stored_families():
    assert builtin_recurrence(FamilyId.FOUR_27) is None
    assert builtin_recurrence(FamilyId.TWENTY7_32) is None


# ---------------------------------------------------------------------------
# Plain Gosper summation
# ---------------------------------------------------------------------------


def test_gosper_constant_sequence():
    cert = gosper(RatFunc.const(1))
    assert cert is not None
    assert cert.equals(RatFunc.from_poly(MultiPoly.var("k")))


def test_gosper_k_times_factorial():
    k = MultiPoly.var("k")
    one = MultiPoly.one()
    cert = gosper(RatFunc.new((k + one) * (k + one), k))
    assert cert is not None
    assert cert.equals(RatFunc.new(one, k))


def test_gosper_inverse_factorial_has_no_certificate():
    k = MultiPoly.var("k")
    assert gosper(RatFunc.new(MultiPoly.one(), k + MultiPoly.one())) is None


def test_gosper_k_times_geometric():
    # sum of k 2^k has the closed form (K - 2) 2^K + 2, so R = (k - 2)/k
    k = MultiPoly.var("k")
    one = MultiPoly.one()
    cert = gosper(RatFunc.new(2 * (k + one), k))
    assert cert is not None
    assert cert.equals(RatFunc.new(k - 2 * one, k))


def test_gosper_rejects_extra_variables():
    with pytest.raises(ValueError):
        gosper(RatFunc.from_poly(MultiPoly.var("n")))


@settings(max_examples=30, deadline=None)
@given(
    m=st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(
        lambda v: v not in (0, 1)),
    c=st.fractions(min_value=F(1, 7), max_value=4, max_denominator=7),
)
def test_gosper_linear_geometric_property(m, c):
    # t(k) = (k + c) m^k always has a hypergeometric antidifference for m != 1
    k = MultiPoly.var("k")
    ratio = RatFunc.new(m * (k + MultiPoly.const(c + 1)), k + MultiPoly.const(c))
    cert = gosper(ratio)
    assert cert is not None
    # antidifference identity at a point, with g = cert * t and t(k) = (k+c) m^k
    def t(j):
        return (F(j) + c) * m ** j
    for j in (0, 1, 5):
        g_next = cert.eval({"k": j + 1}) * t(j + 1)
        g_here = cert.eval({"k": j}) * t(j)
        assert g_next - g_here == t(j)


# ---------------------------------------------------------------------------
# Parameterized derivation against the stored data
# ---------------------------------------------------------------------------


def test_derive_matches_stored_quarter():
    params = (F(1, 3), F(1, 3), F(1), F(1, 3), F(1, 3), F(2, 3))
    term = family_instantiate(FamilyId.QUARTER, params)
    rec = zeilberger_two_term(term, 1)
    assert rec is not None
    assert verify_recurrence(term, rec)
    spec = specialize(builtin_recurrence(FamilyId.QUARTER),
                      dict(zip("abcdef", params)))
    assert same_ratio(rec, spec)


def test_derive_matches_stored_neg_quarter():
    params = (F(2, 3), F(1), F(-1, 3))
    term = family_instantiate(FamilyId.NEG_QUARTER, params)
    rec = zeilberger_two_term(term, 2)
    assert rec is not None
    assert verify_recurrence(term, rec)
    spec = specialize(builtin_recurrence(FamilyId.NEG_QUARTER),
                      dict(zip("abc", params)))
    assert same_ratio(rec, spec)


def test_derive_matches_stored_neg_27():
    params = (F(1, 2), F(0), F(-1, 2), F(0))
    term = family_instantiate(FamilyId.NEG_27, params)
    rec = zeilberger_two_term(term, 1)
    assert rec is not None
    assert verify_recurrence(term, rec)
    spec = specialize(builtin_recurrence(FamilyId.NEG_27),
                      dict(zip("abcd", params)))
    assert same_ratio(rec, spec)


@pytest.mark.parametrize("family,params", [
    (FamilyId.FOUR_27, (F(1, 4), F(3, 4), F(-1, 2))),
    (FamilyId.SIXTEEN_27_A, (F(-1, 3), F(1, 3))),
    (FamilyId.SIXTEEN_27_B, (F(1, 4), F(1, 4))),
    (FamilyId.SIXTY4_B, (F(-3, 4), F(1, 2), F(-1))),
    (FamilyId.TWENTY7_64, (F(1), F(0), F(0))),
    (FamilyId.NEG_64, (F(-2, 3), F(2, 3), F(0))),
])
def test_derive_families_without_stored_data(family, params):
    term = family_instantiate(family, params)
    rec = zeilberger_two_term(term, 1)
    assert rec is not None
    assert recurrence_residual(term, rec).is_zero
    assert not rec.p2.is_zero


def test_derive_search_walks_shift_values():
    params = (F(2, 3), F(1), F(-1, 3))
    term = family_instantiate(FamilyId.NEG_QUARTER, params)
    assert zeilberger_two_term(term, 1) is None
    rec = derive_recurrence(term)
    assert rec is not None and rec.r == 2


def test_staircase_family_has_no_recurrence():
    term = family_instantiate(FamilyId.TWENTY7_32, (F(1), F(1, 2)))
    assert derive_recurrence(term) is None


def test_alternating_controls_have_no_unit_shift_recurrence():
    single = alt_control_single_offset(F(1, 3), F(1, 2), F(1, 4))
    double = alt_control_double_offset(F(1, 3), F(1, 2), F(1, 4), F(3, 4))
    for term in (single, double):
        assert zeilberger_two_term(term, 1, max_deg=8) is None


def test_derivation_requires_instantiated_summand():
    with pytest.raises(ValueError):
        zeilberger_two_term(family_term(FamilyId.QUARTER), 1)


def test_derived_normalization_conventions():
    params = (F(1, 3), F(1, 3), F(1), F(1, 3), F(1, 3), F(2, 3))
    term = family_instantiate(FamilyId.QUARTER, params)
    rec = zeilberger_two_term(term, 1)
    p1 = rec.p1.as_unipoly("n")
    p2 = rec.p2.as_unipoly("n")
    assert p2.lc > 0
    c1, c2 = p1.content(), p2.content()
    assert c1.denominator == 1 and c2.denominator == 1
    from math import gcd
    assert gcd(c1.numerator, c2.numerator) == 1
