from annseq.curtis import (
    STRUCTURAL_INVARIANTS,
    FailureKind,
    Sequence,
    SequenceFormatError,
    check_augmented,
    check_curtis,
    excess,
    is_admissible,
    structural_report,
)
from annseq.engine import naive_oracle, oracle_candidates
from annseq.test.utils import SEARCH_256
from hypothesis import given, strategies as st
import pytest


def test_sequence_fields():
    seq = Sequence.of(19, 11, 7)
    assert seq.entries == (19, 11, 7)
    assert seq.dim == 37
    assert seq.length == 3
    assert seq.text == "19,11,7"
    assert str(seq) == "(19,11,7)"
    assert seq.sort_key == (37, 3, (19, 11, 7))
    assert seq == Sequence([19, 11, 7])
    assert len({seq, Sequence.of(19, 11, 7)}) == 1


@pytest.mark.parametrize("text, entries", [
    ("19,11,7", (19, 11, 7)),
    ("1", (1,)),
    (" 9,5,3\n", (9, 5, 3)),
])
def test_parse(text, entries):
    assert Sequence.parse(text).entries == entries


@pytest.mark.parametrize("text", ["", "19,,7", "19;11", "(19,11,7)", "19, 11", "-3", "0", "1.5", "١"])
def test_parse_malformed(text):
    with pytest.raises(SequenceFormatError):
        Sequence.parse(text)


@pytest.mark.parametrize("entries", [(), (0,), (3, -1), (True,), (2.0,)])
def test_sequence_rejects_bad_entries(entries):
    with pytest.raises(SequenceFormatError):
        Sequence(entries)


@pytest.mark.parametrize("entries", [(1,), (3,), (7,), (9, 5, 3), (19, 11, 7), (67, 35, 19, 11), (65, 33, 17, 9, 5), (2049, 1025, 513, 257, 129, 65, 33, 17, 9)])
def test_accepted(entries):
    report = check_curtis(Sequence(entries))
    assert report.accepted
    assert report.failure is None
    assert report.describe() == "accepted"


@pytest.mark.parametrize("entries, kind, position, description", [
    ((17, 9, 5), FailureKind.EXCESS_TOO_LARGE, 1, "rejected: excess 3 >= 2^phi(i1)=2 [ExcessTooLarge at 1]"),
    ((5,), FailureKind.EXCESS_TOO_LARGE, 1, "rejected: excess 5 >= 2^phi(i1)=2 [ExcessTooLarge at 1]"),
    ((2,), FailureKind.EXCESS_TOO_LARGE, 1, "rejected: excess 2 >= 2^phi(i1)=1 [ExcessTooLarge at 1]"),
    ((5, 2), FailureKind.NOT_ADMISSIBLE, 1, "rejected: i1=5 > 2*i2=4 [NotAdmissible at 1]"),
    ((73, 37, 19, 9, 7), FailureKind.NOT_ADMISSIBLE, 3, "rejected: i3=19 > 2*i4=18 [NotAdmissible at 3]"),
    ((3, 3), FailureKind.EXCESS_NON_POSITIVE, 1, "rejected: excess 0 <= 0 [ExcessNonPositive at 1]"),
    ((7, 5, 3), FailureKind.EXCESS_NON_POSITIVE, 1, "rejected: excess -1 <= 0 [ExcessNonPositive at 1]"),
    ((13, 7, 5), FailureKind.WINDOW_UPPER, 2, "rejected: 2*i3-i2=3 >= 2^phi(i3)=2 [WindowUpper at 2]"),
])
def test_rejected(entries, kind, position, description):
    report = check_curtis(Sequence(entries))
    assert not report.accepted
    assert report.failure.kind is kind
    assert report.failure.position == position
    assert report.describe() == description


def test_report_fields():
    report = check_curtis(Sequence.of(17, 9, 5))
    assert report.excess == 3
    assert report.admissible
    report = check_curtis(Sequence.of(5, 2))
    assert not report.admissible


def test_excess_and_admissibility():
    assert excess(Sequence.of(19, 11, 7)) == 1
    assert excess(Sequence.of(7)) == 7
    assert is_admissible(Sequence.of(8, 4, 2))
    assert not is_admissible(Sequence.of(9, 4))


def test_allow_square():
    seq = Sequence.of(3, 3)
    assert not check_curtis(seq).accepted
    assert check_curtis(seq, allow_square=True).accepted
    # negative excess stays rejected
    assert not check_curtis(Sequence.of(7, 5, 3), allow_square=True).accepted


def test_structural_invariants_do_not_decide():
    seq = Sequence.of(17, 9, 5)
    assert all(holds for _, holds in structural_report(seq))
    assert not check_curtis(seq).accepted


def test_structural_report_names():
    report = structural_report(Sequence.of(10, 2))
    assert [name for name, _ in report] == list(STRUCTURAL_INVARIANTS)
    values = dict(report)
    assert not values["AllOdd"]
    assert not values["PsiChain"]
    assert values["StrictlyDecreasing"]


@pytest.mark.parametrize("entries, broken", [
    ((7, 5, 3), {"PhiMonotone", "SpikeOnlyLast", "PsiChain"}),
    ((11, 3), {"PhiStrictAtSpikeTail", "PsiChain"}),
    ((4, 1), {"AllOdd", "PsiChain", "ParityMatch"}),
    ((3, 1), {"PhiMonotone", "SpikeOnlyLast", "PhiStrictAtSpikeTail", "DimLowerBound"}),
])
def test_structural_violations(entries, broken):
    report = structural_report(Sequence(entries))
    assert {name for name, holds in report if not holds} == broken


def test_accepted_sequences_are_structured():
    for seq in naive_oracle(2048):
        assert all(holds for _, holds in structural_report(seq)), seq


@pytest.mark.parametrize("seq", SEARCH_256)
def test_augmented_form_on_accepted(seq):
    assert check_augmented(seq)


def test_augmented_form_agrees_on_window_candidates():
    # every sequence check_augmented accepts lies inside this walk
    accepted = 0
    for seq in oracle_candidates(256):
        verdict = check_curtis(seq).accepted
        assert check_augmented(seq) == verdict, seq
        accepted += verdict
    assert accepted == len(SEARCH_256)


def test_augmented_form_agrees_on_all_admissible_sequences():
    for seq in oracle_candidates(16, exhaustive=True):
        assert check_augmented(seq) == check_curtis(seq).accepted, seq


def test_augmented_form_rejections():
    assert not check_augmented(Sequence.of(3, 3))
    assert not check_augmented(Sequence.of(17, 9, 5))


@given(st.lists(st.integers(min_value=1, max_value=300), min_size=1, max_size=6))
def test_augmented_form_agrees(entries):
    seq = Sequence(tuple(entries))
    assert check_augmented(seq) == check_curtis(seq).accepted


@given(st.lists(st.integers(min_value=1, max_value=10**9), min_size=1, max_size=8))
def test_text_form_round_trip(entries):
    seq = Sequence(tuple(entries))
    assert Sequence.parse(seq.text) == seq


@pytest.mark.parametrize("entries, admissible", [((19, 11, 7), True), ((3, 1), False), ((5,), True)])
def test_is_admissible(entries, admissible):
    assert is_admissible(Sequence(entries)) == admissible


def test_two_entries_rejected():
    assert not check_curtis(Sequence.of(5, 3)).accepted


@pytest.mark.parametrize("n", range(1, 300))
def test_single_entry_accepted_iff_spike(n):
    assert check_curtis(Sequence.of(n)).accepted == (n & (n + 1) == 0)
    assert check_augmented(Sequence.of(n)) == check_curtis(Sequence.of(n)).accepted


def test_structural_report_examples():
    assert all(holds for _, holds in structural_report(Sequence.of(19, 11, 7)))
    assert not dict(structural_report(Sequence.of(4, 2)))["AllOdd"]
