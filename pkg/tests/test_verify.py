from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chebmax.ff import is_prime
from chebmax.verify import (COLUMNS, ScanRecord, cm_group, cm_mul, cm_slopes, cm_type,
                            decomposition_group, judge, verify_cm_against_newton,
                            verify_conjecture, verify_decompositions, verify_statement)

HALF = Fraction(1, 2)
ODD_PRIMES = [p for p in range(3, 120) if is_prime(p)]


def one(records, **match):
    hits = [r for r in records if all(getattr(r, k) == v for k, v in match.items())]
    assert len(hits) == 1, hits
    return hits[0]


def test_judge():
    assert judge("iff", True, True) and judge("iff", False, False)
    assert not judge("iff", True, False)
    assert judge("sufficient", False, True) and not judge("sufficient", True, False)
    assert judge("necessary", True, False) and not judge("necessary", False, True)
    with pytest.raises(ValueError):
        judge("maybe", True, True)


def test_record_row_shape():
    r = ScanRecord("T12", "C+", 2, 7, 7, 1, True, True, True, 64, 64, "iff")
    assert tuple(r.row()) == COLUMNS
    assert not r.skipped and not r.violation
    bad = ScanRecord("X", "f", 1, 3, 3, 1, True, False, False)
    assert bad.violation
    finding = ScanRecord("CONJ-B", "f", 1, 3, 3, 1, True, False, False, gating=False)
    assert not finding.violation


def test_statement_examples():
    t12 = verify_statement("T12", [2], 7)
    r = one(t12, family="C+", q=7)
    assert (r.predicted, r.observed, r.passed, r.N, r.bound) == (True, True, True, 64, 64)
    r = one(verify_statement("T13", [3], 7), family="C+", q=7)
    assert (r.predicted, r.observed, r.passed) == (False, False, True)
    r = one(verify_statement("PCM5", [], 19), q=19)
    assert (r.predicted, r.observed, r.passed) == (True, True, True)


def test_statement_skips_and_parity():
    recs = verify_statement("T12", [2, 3], 9)
    assert {r.d for r in recs} == {2}
    r = one(recs, family="C+", q=4)
    assert r.skipped and r.note.startswith("skip") and not r.violation
    assert one(verify_statement("T31", [3], 9), q=9).skipped


def test_t14_records_all_three_equivalences():
    recs = [r for r in verify_statement("T14", [2], 11) if not r.skipped]
    assert {r.note for r in recs} == {"iff; (i)<=>(iii)", "iff; (ii)<=>(iii)", "iff; (i)<=>(ii)"}
    assert all(r.passed for r in recs)


def test_t15_records_directions():
    recs = [r for r in verify_statement("T15", [3], 11) if r.q == 11]
    assert sorted(r.note for r in recs) == ["necessary; joint", "sufficient", "sufficient"]
    assert all(r.passed for r in recs)


def test_lsep_small():
    recs = verify_statement("LSEP", range(1, 7), 16)
    assert len(recs) == 6 * 10 and all(r.passed for r in recs)


def test_unknown_statement_and_empty_range():
    with pytest.raises(ValueError):
        verify_statement("T99", [1], 10)
    with pytest.raises(ValueError):
        verify_statement("T12", [], 10)


def test_conjecture_examples():
    recs = verify_conjecture([3], 11)
    r = one(recs, statement="CONJ-A", q=11)
    assert (r.predicted, r.observed, r.passed) == (True, True, True)
    assert not r.gating
    assert one(verify_conjecture([9], 3), statement="CONJ-A", q=3).skipped
    with pytest.raises(ValueError):
        verify_conjecture([4], 10)


def test_conjecture_b_records_witness():
    recs = verify_conjecture([3], 7)
    assert one(recs, statement="CONJ-B", q=7).passed
    # d = 3, q = 5: the F_5 factorization does not hold, and the record says so
    r = one(recs, statement="CONJ-B", q=5)
    assert r.passed is False and not r.violation
    assert "L_C1=[1 2 2 10 25]" in r.note


def test_decomposition_examples():
    recs = verify_decompositions(3, 5)
    x_split = [r for r in recs if r.family == "X=C+C1"]
    assert [r.note for r in x_split] == ["iff; r=1 defect -2 vs -2", "iff; r=2 defect -6 vs -6"]
    assert all(r.passed for r in x_split)
    recs = verify_decompositions(2, 7)
    r = one(recs, family="X=2C+")
    assert r.passed and r.note == "iff; r=2 defect 28 vs 28"
    recs = verify_decompositions(3, 7)
    assert all(r.passed for r in recs)
    assert {"C1=E+ + E108", "E-3=E+", "E+|C1"} <= {r.family for r in recs}


def test_decomposition_skips_bad_gcd():
    recs = verify_decompositions(3, 9)
    assert len(recs) == 1 and recs[0].skipped


def test_cm_examples():
    assert cm_slopes(5, 19) == [HALF] * 4
    assert decomposition_group(5, 19) == {(0, 1), (1, 1)}
    assert cm_slopes(5, 11) == [HALF] * 4
    assert decomposition_group(5, 11) == {(0, 1), (1, 1)}
    slopes = cm_slopes(5, 7)
    assert decomposition_group(5, 7) == {(0, 1), (1, 2)}
    assert 0 in slopes and slopes == [0, 0, 1, 1]
    assert cm_type(5) == {(0, 1), (1, 2)}
    assert len(cm_group(7)) == 6
    with pytest.raises(ValueError):
        cm_slopes(5, 5)
    with pytest.raises(ValueError):
        cm_slopes(4, 7)


@given(st.sampled_from([3, 5, 7, 11, 13, 17]), st.sampled_from(ODD_PRIMES))
def test_cm_slope_mass_and_symmetry(ell, p):
    if p == ell:
        return
    slopes = cm_slopes(ell, p)
    assert len(slopes) == ell - 1
    assert sum(slopes) == Fraction(ell - 1, 2)
    assert sorted(1 - s for s in slopes) == slopes


@given(st.sampled_from([5, 7, 11, 13]))
def test_cm_group_law(ell):
    G = cm_group(ell)
    e = (0, 1)
    for a in G:
        assert cm_mul(a, e, ell) == a
        assert any(cm_mul(a, b, ell) == e for b in G)
        for b in G:
            assert cm_mul(a, b, ell) == cm_mul(b, a, ell) and cm_mul(a, b, ell) in G


def test_cm_against_newton_is_deterministic_and_non_gating():
    a = verify_cm_against_newton(3, 30)
    b = verify_cm_against_newton(3, 30)
    assert [r.row() for r in a] == [r.row() for r in b]
    assert all(not r.gating for r in a)
    assert one(a, q=7).note == "iff; newton 1/2 1/2 | formula 1/2 1/2"
