import pytest

from pellrep.sequences import (
    SequenceKind,
    binet_check,
    growth_bounds_hold,
    term,
    terms_up_to,
)

PELL = SequenceKind.PELL
PELL_LUCAS = SequenceKind.PELL_LUCAS


def test_term_examples():
    assert term(PELL, 11).value == 5741
    assert term(PELL, 0).value == 0
    assert term(PELL_LUCAS, 5).value == 82
    assert term(PELL_LUCAS, 0).value == 2
    assert term(PELL_LUCAS, 1).value == 2


def test_terms_up_to():
    assert [t.value for t in terms_up_to(PELL, 5)] == [0, 1, 2, 5, 12, 29]
    assert [t.value for t in terms_up_to(PELL_LUCAS, 4)] == [2, 2, 6, 14, 34]
    assert [t.value for t in terms_up_to(PELL, 0)] == [0]


def test_terms_match_recurrence():
    for kind in SequenceKind:
        vals = [t.value for t in terms_up_to(kind, 200)]
        for n in range(2, 201):
            assert vals[n] == 2 * vals[n - 1] + vals[n - 2]
        assert term(kind, 200).value == vals[200]


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        term(PELL, -1)
    with pytest.raises(ValueError):
        binet_check(PELL, 0, 64)


def test_binet_examples():
    assert binet_check(PELL, 11, 128)
    assert binet_check(PELL_LUCAS, 2, 128)
    assert binet_check(PELL, 1, 64)


def test_binet_closed_form_agrees_with_recurrence_up_to_500():
    for kind in SequenceKind:
        for n in range(1, 501):
            assert binet_check(kind, n, 1024), (kind, n)


def test_growth_bounds_up_to_1000():
    for kind in SequenceKind:
        for n in range(1, 1001):
            assert growth_bounds_hold(kind, n), (kind, n)


def test_companion_identity_up_to_500():
    # Q_n == 2 (P_{n-1} + P_n); verified by brute force, then usable as an
    # independent cross-sequence oracle
    pell = [t.value for t in terms_up_to(PELL, 500)]
    lucas = [t.value for t in terms_up_to(PELL_LUCAS, 500)]
    for n in range(1, 501):
        assert lucas[n] == 2 * (pell[n - 1] + pell[n])


def test_labels():
    assert term(PELL, 11).label() == "P_11"
    assert term(PELL_LUCAS, 5).label() == "Q_5"
