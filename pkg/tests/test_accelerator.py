"""Tests for accelerated stream generation and bracket normal form."""

from fractions import Fraction as F

import pytest

from hyperaccel.accelerator import (
    AccelStream,
    ChuSeries,
    accelerated_stream,
    chu_normalize,
    convergence_rate,
    direct_sum_estimate,
    iter_accelerated,
    stream_proportional,
    stream_ratio,
    vanishing_check,
)
from hyperaccel.exact_arith import MultiPoly, RatFunc, UniPoly
from hyperaccel.hypergeom_terms import FamilyId, family_instantiate
from hyperaccel.telescoper import Recurrence, zeilberger_two_term


def _instance(family: FamilyId, params, r: int):
    term = family_instantiate(family, [F(p) for p in params])
    rec = zeilberger_two_term(term, r)
    assert rec is not None
    return term, rec


def _quarter_example():
    return _instance(FamilyId.QUARTER, ["1/3", "1/3", "1", "1/3", "1/3", "2/3"], 1)


def _neg_quarter_example():
    return _instance(FamilyId.NEG_QUARTER, ["2/3", "1", "-1/3"], 2)


def _neg_27_example():
    return _instance(FamilyId.NEG_27, ["1/2", "0", "-1/2", "0"], 1)


def _fake_rec(g2: F, r: int = 1) -> Recurrence:
    return Recurrence(r=r, p1=MultiPoly.const(-g2), p2=MultiPoly.const(F(1)),
                      cert=RatFunc.const(F(1)))


def _upoly(coeffs) -> UniPoly:
    return UniPoly.from_coeffs([F(c) for c in coeffs])


# ---------------------------------------------------------------------------
# Convergence rate
# ---------------------------------------------------------------------------


def test_rate_quarter_family():
    _, rec = _quarter_example()
    assert convergence_rate(rec) == F(1, 4)


def test_rate_neg_quarter_family():
    _, rec = _neg_quarter_example()
    assert convergence_rate(rec) == F(-1, 4)


def test_rate_neg_27_family():
    _, rec = _neg_27_example()
    assert convergence_rate(rec) == F(-1, 27)


def test_rate_zero_when_p1_degree_smaller():
    rec = Recurrence(r=1, p1=MultiPoly.const(F(3)),
                     p2=MultiPoly.affine(F(1), n=F(2)),
                     cert=RatFunc.const(F(1)))
    assert convergence_rate(rec) == 0


def test_rate_divergent_when_p1_degree_larger():
    rec = Recurrence(r=1, p1=MultiPoly.affine(F(0), n=F(1)),
                     p2=MultiPoly.const(F(1)), cert=RatFunc.const(F(1)))
    with pytest.raises(ValueError, match="divergent acceleration"):
        convergence_rate(rec)


# ---------------------------------------------------------------------------
# Remainder estimate
# ---------------------------------------------------------------------------


def test_direct_sum_matches_exact_partial_sum():
    term, _ = _quarter_example()
    from hyperaccel.hypergeom_terms import k_shift_ratio

    rho = k_shift_ratio(term)
    total, t = F(0), F(1)
    for k in range(300):
        total += t
        t *= rho.eval({"n": F(5), "k": k})
    assert abs(direct_sum_estimate(term, F(5)) - float(total)) < 1e-9


def test_direct_sum_divergence_is_an_error():
    # (2)_k / (1)_k has term ratio (k+2)/(k+1) -> terms grow linearly
    from hyperaccel.hypergeom_terms import GammaFactor, HypTerm

    grow = HypTerm(gammas=(
        GammaFactor(MultiPoly.affine(F(2), k=F(1)), 1),
        GammaFactor(MultiPoly.affine(F(2)), -1),
        GammaFactor(MultiPoly.affine(F(1), k=F(1)), -1),
        GammaFactor(MultiPoly.affine(F(1)), 1),
    ), sign_base=1)
    with pytest.raises(ValueError, match="diverges"):
        direct_sum_estimate(grow, F(3))


def test_vanishing_check_passes_quarter_example():
    term, rec = _quarter_example()
    assert vanishing_check(term, rec, F(1), m_max=200)


def test_vanishing_check_passes_neg_27_example():
    term, rec = _neg_27_example()
    assert vanishing_check(term, rec, F(1), m_max=200)


def test_vanishing_check_rejects_fabricated_growth():
    term, _ = _quarter_example()
    assert not vanishing_check(term, _fake_rec(F(2)), F(1), m_max=200)


# ---------------------------------------------------------------------------
# Exact stream generation
# ---------------------------------------------------------------------------


def test_stream_first_term_is_g1_over_term0():
    term, rec = _quarter_example()
    t0 = next(iter_accelerated(term, rec, F(1)))
    cert0 = rec.cert.eval({"n": F(1), "k": 0})
    p2v = rec.p2.as_unipoly("n").eval(F(1))
    assert t0 == -cert0 / p2v


def test_dual_path_exactness_quarter():
    term, rec = _quarter_example()
    s = accelerated_stream(term, rec, F(1))
    terms = s.take(201)
    acc = terms[0]
    for j in range(200):
        acc *= s.ratio.eval({"j": j})
        assert acc == terms[j + 1]


def test_dual_path_exactness_neg_quarter():
    term, rec = _neg_quarter_example()
    s = accelerated_stream(term, rec, F(2, 3))
    terms = s.take(101)
    acc = terms[0]
    for j in range(100):
        acc *= s.ratio.eval({"j": j})
        assert acc == terms[j + 1]


def test_stream_cache_is_stable():
    term, rec = _quarter_example()
    s = accelerated_stream(term, rec, F(1), check_vanishing=False)
    a = s.term(5)
    assert s.take(6)[5] == a
    assert s.term(5) == a


def test_pole_on_progression_is_reported_with_its_index():
    term, rec = _quarter_example()
    # p2 vanishing at n = n0 + 3 turns into a pole at stream term 3
    shifted = Recurrence(r=1, p1=rec.p1,
                         p2=MultiPoly.affine(F(-4), n=F(1)),
                         cert=rec.cert)
    with pytest.raises(ValueError, match="at term 3"):
        accelerated_stream(term, shifted, F(1), check_vanishing=False)


def test_remainder_failure_blocks_stream():
    term, _ = _quarter_example()
    with pytest.raises(ValueError, match="remainder does not vanish"):
        accelerated_stream(term, _fake_rec(F(2)), F(1))


def test_stream_ratio_matches_consecutive_terms():
    term, rec = _neg_27_example()
    ratio = stream_ratio(term, rec, F(1))
    terms = list(zip(range(12), iter_accelerated(term, rec, F(1))))
    for j, _ in terms[:-1]:
        assert ratio.eval({"j": j}) == terms[j + 1][1] / terms[j][1]


# ---------------------------------------------------------------------------
# Stream proportionality
# ---------------------------------------------------------------------------


def test_proportional_finds_the_constant():
    s2 = [F(1, 2) ** j for j in range(20)]
    s1 = [F(7, 3) * x for x in s2]
    assert stream_proportional(s1, s2) == F(7, 3)


def test_proportional_respects_window():
    s2 = [F(1)] * 10
    s1 = [F(2)] * 9 + [F(3)]
    assert stream_proportional(s1, s2, j_max=8) == F(2)
    assert stream_proportional(s1, s2) is None


def test_proportional_zero_pattern_mismatch_is_none():
    assert stream_proportional([F(0), F(1)], [F(1), F(1)]) is None


def test_proportional_all_zero_is_undetermined():
    assert stream_proportional([F(0)] * 5, [F(0)] * 5) is None


def test_proportional_short_window_is_an_error():
    with pytest.raises(ValueError):
        stream_proportional([F(1)], [F(1)], j_max=3)


# ---------------------------------------------------------------------------
# Bracket normal form
# ---------------------------------------------------------------------------


def test_chu_normalize_quarter_example():
    term, rec = _quarter_example()
    s = accelerated_stream(term, rec, F(1), check_vanishing=False)
    series, scale = chu_normalize(s.ratio, s.term(0))
    assert series.z == F(1, 4)
    assert series.upper == (F(2, 3),)
    assert series.lower == (F(11, 6),)
    assert series.num == _upoly([17, 42, 27])
    assert series.den == _upoly([1, 4, 3])  # (j+1)(3j+1)
    assert scale * series.term(0) == s.term(0)


def test_chu_normalize_neg_quarter_example():
    term, rec = _neg_quarter_example()
    s = accelerated_stream(term, rec, F(2, 3), check_vanishing=False)
    series, _ = chu_normalize(s.ratio, s.term(0))
    assert series.z == F(-1, 4)
    assert series.upper == (F(1, 2), F(1))
    assert series.lower == (F(4, 3), F(5, 3))
    assert series.num == _upoly([17, 30])
    assert series.den == UniPoly.one()


def test_chu_normalize_neg_27_example():
    term, rec = _neg_27_example()
    s = accelerated_stream(term, rec, F(1), check_vanishing=False)
    series, _ = chu_normalize(s.ratio, s.term(0))
    assert series.z == F(-1, 27)
    assert series.upper == (F(1, 2), F(1))
    assert series.lower == (F(4, 3), F(5, 3))
    assert series.num == _upoly([17, 28])
    assert series.den == UniPoly.one()


def test_chu_scale_reproduces_stream_termwise():
    term, rec = _quarter_example()
    s = accelerated_stream(term, rec, F(1), check_vanishing=False)
    series, scale = chu_normalize(s.ratio, s.term(0))
    got = stream_proportional(s.take(40), [series.term(j) for j in range(40)])
    assert got == scale


def test_chu_round_trip_ratio_identity():
    term, rec = _neg_quarter_example()
    s = accelerated_stream(term, rec, F(2, 3), check_vanishing=False)
    series, _ = chu_normalize(s.ratio, s.term(0))
    assert series.ratio().equals(s.ratio)


def test_chu_rejects_unequal_degrees():
    # ratio (j+1) has numerator degree 1, denominator degree 0
    ratio = RatFunc.new(MultiPoly.affine(F(1), j=F(1)), MultiPoly.const(F(1)))
    with pytest.raises(ValueError, match="non-Chu-normalizable"):
        chu_normalize(ratio, F(1))


def test_chu_rejects_zero_first_term():
    ratio = RatFunc.const(F(1, 2))
    with pytest.raises(ValueError, match="non-Chu-normalizable"):
        chu_normalize(ratio, F(0))


def test_chu_rejects_foreign_variables():
    ratio = RatFunc.new(MultiPoly.affine(F(1), n=F(1)),
                        MultiPoly.affine(F(2), n=F(1)))
    with pytest.raises(ValueError, match="non-Chu-normalizable"):
        chu_normalize(ratio, F(1))


def test_chu_constant_ratio_is_pure_geometric():
    series, scale = chu_normalize(RatFunc.const(F(-1, 3)), F(5))
    assert series == ChuSeries(z=F(-1, 3), upper=(), lower=(),
                               num=UniPoly.one(), den=UniPoly.one())
    assert scale == F(5)


def test_chu_folds_integer_gap_parameters():
    # z^j (1/3)_j / (7/3)_j: gap 2 folds into den (j+1/3)(j+4/3) scaled primitive
    base = ChuSeries(z=F(1, 2), upper=(F(1, 3),), lower=(F(7, 3),),
                     num=UniPoly.one(), den=UniPoly.one())
    series, _ = chu_normalize(base.ratio(), base.term(0))
    assert series.upper == ()
    assert series.lower == ()
    assert series.den == _upoly([1, 3]) * _upoly([4, 3])  # (3j+1)(3j+4)
    assert series.ratio().equals(base.ratio())


def test_chu_den_has_no_nonnegative_integer_roots():
    # upper 0 would put a root of den at j = 0 after folding against lower 2
    base = ChuSeries(z=F(1, 2), upper=(F(0),), lower=(F(2),),
                     num=UniPoly.one(), den=UniPoly.one())
    with pytest.raises(ValueError, match="non-Chu-normalizable"):
        chu_normalize(base.ratio(), F(1))


def test_chu_series_term_values():
    series = ChuSeries(z=F(1, 4), upper=(F(2, 3),), lower=(F(11, 6),),
                       num=_upoly([17, 42, 27]), den=_upoly([1, 4, 3]))
    assert series.term(0) == F(17)
    assert series.term(1) == F(1, 4) * F(2, 3) / F(11, 6) * F(86, 8)
