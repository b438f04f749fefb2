"""Catalog integrity: transcription invariants, verification, derivation."""

import re
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperaccel.accelerator import ChuSeries, stream_proportional
from hyperaccel.catalog import (CatalogEntry, catalog_entries, closed_text,
                                default_term_budget, derive_entry, entry,
                                export_lines, parse_closed_text,
                                parse_series_text, series_text, verify_entry,
                                verify_series)
from hyperaccel.exact_arith import UniPoly
from hyperaccel.numerics import ClosedForm

ENTRIES = catalog_entries()
BY_ID = {e.id: e for e in ENTRIES}

SECTION_PATTERNS = (
    (re.compile(r"Q\d+\Z"), 18),
    (re.compile(r"NQ\d+\Z"), 8),
    (re.compile(r"N27-\d+\Z"), 12),
    (re.compile(r"F427-\d+\Z"), 11),
    (re.compile(r"S1627-\d+\Z"), 4),
    (re.compile(r"S64-\d+\Z"), 8),
    (re.compile(r"S2764-\d+\Z"), 3),
    (re.compile(r"FR-\d+\Z"), 2),
)


def test_entry_totals():
    assert len(ENTRIES) == 123
    assert sum(1 for e in ENTRIES if e.chu is not None) == 95
    assert sum(1 for e in ENTRIES if e.derivation is not None) == 95
    assert sum(1 for e in ENTRIES
               if e.chu is None and e.derivation is not None) == 28
    assert sum(1 for e in ENTRIES
               if e.chu is not None and e.derivation is not None) == 67


def test_section_example_counts():
    for pattern, expected in SECTION_PATTERNS:
        assert sum(1 for e in ENTRIES if pattern.match(e.id)) == expected


def test_ids_unique():
    assert len(BY_ID) == len(ENTRIES)


def test_anchors_nonempty_unique():
    anchors = [e.anchor for e in ENTRIES]
    assert all(anchors)
    assert len(set(anchors)) == len(anchors)


def test_every_entry_has_series_or_derivation():
    for e in ENTRIES:
        assert e.chu is not None or e.derivation is not None


def test_rate_equals_series_z():
    for e in ENTRIES:
        if e.chu is not None:
            assert e.rate == e.chu.z, e.id


def test_display_entries_have_closed_forms():
    for e in ENTRIES:
        assert (e.chu is None) == (e.closed is None), e.id


def test_tentative_set():
    tentative = {e.id for e in ENTRIES if e.tentative}
    assert tentative == {"Q16", "N27-5", "N27-7", "S2764-1", "FR-2"}
    for rid in tentative:
        assert BY_ID[rid].note


def test_series_text_roundtrip():
    for e in ENTRIES:
        if e.chu is not None:
            assert parse_series_text(series_text(e.chu)) == e.chu, e.id


def test_closed_text_roundtrip():
    for e in ENTRIES:
        if e.closed is not None:
            assert parse_closed_text(closed_text(e.closed)) == e.closed, e.id


@given(coeff=st.fractions(min_value=-100, max_value=100).filter(bool),
       e_pi=st.integers(-3, 3), e_log2=st.integers(-3, 3),
       e_2=st.fractions(min_value=-3, max_value=3),
       e_3=st.fractions(min_value=-3, max_value=3))
@settings(max_examples=60, deadline=None)
def test_closed_text_roundtrip_property(coeff, e_pi, e_log2, e_2, e_3):
    cf = ClosedForm.make(coeff, Fraction(e_pi), Fraction(e_log2), e_2, e_3)
    assert parse_closed_text(closed_text(cf)) == cf


def test_export_lines_parse_back():
    lines = export_lines()
    assert len(lines) == len(ENTRIES)
    for line, e in zip(lines, ENTRIES):
        rid, series, closed = line.split("\t")
        assert rid == e.id
        if e.chu is None:
            assert series == "-"
        else:
            assert parse_series_text(series) == e.chu
        if e.closed is None:
            assert closed == "-"
        else:
            assert parse_closed_text(closed) == e.closed


def test_unknown_id_raises():
    with pytest.raises(KeyError):
        entry("NO-SUCH-ID")


def test_verify_requires_display():
    with pytest.raises(ValueError):
        verify_entry("Q-R1", 20)


def test_derive_requires_derivation():
    with pytest.raises(ValueError):
        derive_entry("RAMANUJAN-1")


def test_verify_rt1_50_digits():
    rep = verify_entry("RT1", 50)
    assert rep.passed
    assert rep.lhs.decimal(20).startswith("2.2672492052927723132")


def test_verify_guillera_quarter_50_digits():
    rep = verify_entry("GUILLERA-QUARTER", 50)
    assert rep.passed
    assert rep.lhs.decimal(20).startswith("2.4674011002723396547")


def test_verify_corrupted_display_fails():
    e = entry("RT1")
    bad = ChuSeries(z=e.chu.z, upper=e.chu.upper, lower=e.chu.lower,
                    num=UniPoly.from_coeffs([3, 3]), den=e.chu.den)
    rep = verify_series(bad, e.closed, 50)
    assert not rep.passed


@pytest.mark.parametrize("rid", [
    "Q4", "RT5", "CHU-1", "CHU-3", "CHU-5", "RT8", "PM6",
    "S1627-4", "S2764-3", "FR-1", "FR-2",
])
def test_verify_one_display_per_rate(rid):
    rep = verify_entry(rid, 20)
    assert rep.passed, rid


def test_derive_q1():
    rep = derive_entry("Q1")
    assert rep.recurrence_found
    assert rep.rate == Fraction(1, 4)
    assert rep.proportional is not None


def test_derive_guillera_quarter_from_recovered_tuple():
    rep = derive_entry("GUILLERA-QUARTER")
    assert rep.recurrence_found
    assert rep.rate == Fraction(1, 4)
    assert rep.proportional == Fraction(1, 2)


def test_derive_f427_11_matches_its_display():
    rep = derive_entry("F427-11")
    assert rep.recurrence_found
    assert rep.rate == Fraction(4, 27)
    assert rep.proportional == Fraction(2, 45)


def test_eq19_eq20_not_termwise_proportional():
    a = entry("EQ19").chu
    b = entry("EQ20").chu
    lhs = [a.term(j) for j in range(101)]
    rhs = [b.term(j) for j in range(101)]
    assert stream_proportional(lhs, rhs, j_max=100) is None


def test_all_derivations():
    """Every recipe rebuilds: recurrence found, rate matches, and any
    stored display is termwise proportional to the derived stream."""
    for e in ENTRIES:
        if e.derivation is None:
            continue
        rep = derive_entry(e.id)
        assert rep.recurrence_found, e.id
        assert rep.rate == e.rate, e.id
        if e.chu is not None:
            assert rep.proportional is not None, e.id


def test_term_budget_covers_slow_rates():
    assert default_term_budget(Fraction(27, 32), 50) >= 700
    assert default_term_budget(Fraction(1, 4), 50) >= 83
    assert default_term_budget(Fraction(0), 50) == 170


def test_presentation_order_groups_sections():
    ids = [e.id for e in ENTRIES]
    for pattern, count in SECTION_PATTERNS:
        positions = [i for i, rid in enumerate(ids) if pattern.match(rid)]
        assert len(positions) == count
        # displayed examples of one section are stored contiguously with
        # their section's recovered tuples
        span = positions[-1] - positions[0]
        assert span <= count + 16
