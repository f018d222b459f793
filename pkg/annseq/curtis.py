"""Sequences and the acceptance predicates on them."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from annseq.bitcore import phi, psi, is_spike


class SequenceFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Sequence:
    """An ordered tuple (i_1, ..., i_r) of positive integers, written as in I."""
    entries: tuple[int, ...]
    dim: int = field(init=False, compare=False)
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise SequenceFormatError("A sequence needs at least one entry.")
        for entry in entries:
            if not isinstance(entry, int) or isinstance(entry, bool) or entry < 1:
                raise SequenceFormatError(f"Entry {entry!r} is not a positive integer.")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "dim", sum(entries))
        object.__setattr__(self, "length", len(entries))

    @classmethod
    def of(cls, *entries: int) -> "Sequence":
        return cls(entries)

    @classmethod
    def parse(cls, text: str) -> "Sequence":
        """Parses the comma-joined text form, e.g. ``19,11,7``.

        Args:
            text (str): Entries separated by commas, without spaces or brackets.

        Returns:
            Sequence: The parsed sequence.
        """
        parts = text.strip().split(",")
        if not all(part.isdigit() and part.isascii() for part in parts):
            raise SequenceFormatError(f"Malformed sequence {text!r}; expected e.g. 19,11,7.")
        return cls(tuple(int(part) for part in parts))

    @property
    def text(self) -> str:
        return ",".join(str(entry) for entry in self.entries)

    @property
    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.dim, self.length, self.entries)

    def __str__(self) -> str:
        return f"({self.text})"


class FailureKind(Enum):
    NOT_ADMISSIBLE = "NotAdmissible"
    EXCESS_NON_POSITIVE = "ExcessNonPositive"
    EXCESS_TOO_LARGE = "ExcessTooLarge"
    WINDOW_LOWER = "WindowLower"
    WINDOW_UPPER = "WindowUpper"


@dataclass(frozen=True)
class Failure:
    kind: FailureKind
    position: int


@dataclass(frozen=True)
class CheckReport:
    sequence: Sequence
    accepted: bool
    excess: int
    admissible: bool
    failure: Optional[Failure] = None

    def describe(self) -> str:
        """Renders the verdict as a single diagnostic line."""
        if self.accepted:
            return "accepted"
        entries = self.sequence.entries
        kind = self.failure.kind
        j = self.failure.position
        if kind is FailureKind.NOT_ADMISSIBLE:
            detail = f"i{j}={entries[j - 1]} > 2*i{j + 1}={2 * entries[j]}"
        elif kind is FailureKind.EXCESS_NON_POSITIVE:
            detail = f"excess {self.excess} <= 0"
        elif kind is FailureKind.EXCESS_TOO_LARGE:
            detail = f"excess {self.excess} >= 2^phi(i1)={1 << phi(entries[0])}"
        else:
            gap = 2 * entries[j] - entries[j - 1]
            bound = 1 << phi(entries[j])
            if kind is FailureKind.WINDOW_LOWER:
                detail = f"2*i{j + 1}-i{j}={gap} < 0"
            else:
                detail = f"2*i{j + 1}-i{j}={gap} >= 2^phi(i{j + 1})={bound}"
        return f"rejected: {detail} [{kind.value} at {j}]"


def excess(seq: Sequence) -> int:
    # i_1 - (i_2 + ... + i_r) == 2*i_1 - |I|
    return 2 * seq.entries[0] - seq.dim


def is_admissible(seq: Sequence) -> bool:
    entries = seq.entries
    return all(entries[j] <= 2 * entries[j + 1] for j in range(len(entries) - 1))


def check_curtis(seq: Sequence, allow_square: bool = False) -> CheckReport:
    """Decides whether Q^I[1] satisfies the Curtis annihilation conditions.

    The clauses are tested in a fixed order and the first violation is
    reported: admissibility, positive excess, the excess bound, then the
    window 0 <= 2*i_{j+1} - i_j < 2^phi(i_{j+1}) for ascending j. For a single
    entry this accepts exactly the spikes.

    Args:
        seq (Sequence): The sequence to check.
        allow_square (bool, optional): Accept excess 0 in the positivity
            clause. Only for inspecting square classes, never for emission.

    Returns:
        CheckReport: The verdict with the first failure, if any.
    """
    entries = seq.entries
    ex = excess(seq)

    def reject(kind: FailureKind, position: int, admissible: bool = True) -> CheckReport:
        return CheckReport(seq, False, ex, admissible, Failure(kind, position))

    for j in range(len(entries) - 1):
        if entries[j] > 2 * entries[j + 1]:
            return reject(FailureKind.NOT_ADMISSIBLE, j + 1, admissible=False)
    if ex < 0 or (ex == 0 and not allow_square):
        return reject(FailureKind.EXCESS_NON_POSITIVE, 1)
    if ex >= 1 << phi(entries[0]):
        return reject(FailureKind.EXCESS_TOO_LARGE, 1)
    for j in range(len(entries) - 1):
        gap = 2 * entries[j + 1] - entries[j]
        if gap < 0:
            return reject(FailureKind.WINDOW_LOWER, j + 1)
        if gap >= 1 << phi(entries[j + 1]):
            return reject(FailureKind.WINDOW_UPPER, j + 1)
    return CheckReport(seq, True, ex, True)


def check_augmented(seq: Sequence) -> bool:
    """Single-window form of the conditions on (i_0, i_1, ..., i_r), i_0 = |I|.

    Every step must satisfy 0 < 2*i_{j+1} - i_j < 2^phi(i_{j+1}), including
    j = 0 where the gap is the excess.
    """
    augmented = (seq.dim,) + seq.entries
    for j in range(len(augmented) - 1):
        gap = 2 * augmented[j + 1] - augmented[j]
        if not 0 < gap < 1 << phi(augmented[j + 1]):
            return False
    return True


STRUCTURAL_INVARIANTS = (
    "AllOdd",
    "StrictlyDecreasing",
    "PhiMonotone",
    "SpikeOnlyLast",
    "PhiStrictAtSpikeTail",
    "PsiChain",
    "ParityMatch",
    "DimLowerBound",
)


def structural_report(seq: Sequence) -> list[tuple[str, bool]]:
    """Evaluates the derived invariants every accepted sequence satisfies.

    Invariants whose precondition does not apply (e.g. chains on a single
    entry) hold vacuously. This is a diagnostic and never decides acceptance.

    Args:
        seq (Sequence): The sequence to inspect.

    Returns:
        list[tuple[str, bool]]: One (name, holds) pair per invariant, in
            STRUCTURAL_INVARIANTS order.
    """
    entries = seq.entries
    r = seq.length
    pairs = list(zip(entries, entries[1:]))
    phis = [phi(entry) for entry in entries]
    psis = [psi(entry) for entry in entries]
    spike_tail = r > 1 and is_spike(entries[-1])
    values = {
        "AllOdd": all(entry % 2 == 1 for entry in entries),
        "StrictlyDecreasing": all(a > b for a, b in pairs),
        "PhiMonotone": all(a <= b for a, b in zip(phis, phis[1:])),
        "SpikeOnlyLast": not any(is_spike(entry) for entry in entries[:-1]),
        "PhiStrictAtSpikeTail": not spike_tail or phis[-2] < phis[-1],
        "PsiChain": all(b == a - 1 for a, b in zip(psis, psis[1:])),
        "ParityMatch": (seq.dim - r) % 2 == 0,
        "DimLowerBound": r == 1 or seq.dim > 1 << r,
    }
    return [(name, values[name]) for name in STRUCTURAL_INVARIANTS]
