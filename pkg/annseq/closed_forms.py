"""Parametric families of accepted sequences of length 1, 3, 4 and 5.

Every instance is passed through ``check_curtis`` before it is emitted.
Instances inside a family's stated parameter range that fail the check are
dropped and recorded in a ``ValidationReport``. Parameters start below the
stated ranges, and instances there that pass the check are kept and recorded
as well.
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import count
from typing import Iterable, Iterator, Optional
import logging

from annseq.curtis import Sequence, CheckReport, check_curtis


class ArityError(ValueError):
    pass


class FamilyId(Enum):
    L1 = "L1"
    L3 = "L3"
    L4A = "L4A"
    L4B = "L4B"
    L5A = "L5A"
    L5B = "L5B"
    L5C = "L5C"
    L5D = "L5D"

    @property
    def length(self) -> int:
        return int(self.value[1])


@dataclass(frozen=True)
class FamilyParams:
    n: Optional[int] = None
    m: Optional[int] = None
    m2: Optional[int] = None
    t: Optional[int] = None

    def given(self) -> frozenset[str]:
        return frozenset(name for name in ("n", "m", "m2", "t") if getattr(self, name) is not None)

    def __str__(self) -> str:
        return ", ".join(f"{name}={getattr(self, name)}" for name in ("t", "n", "m", "m2") if getattr(self, name) is not None)


ARITY: dict[FamilyId, frozenset[str]] = {
    FamilyId.L1: frozenset({"t"}),
    FamilyId.L3: frozenset({"n", "m"}),
    FamilyId.L4A: frozenset({"n"}),
    FamilyId.L4B: frozenset({"n", "m", "m2"}),
    FamilyId.L5A: frozenset({"n"}),
    FamilyId.L5B: frozenset({"n"}),
    FamilyId.L5C: frozenset({"n", "m", "m2"}),
    FamilyId.L5D: frozenset({"n"}),
}


def _pow2(k: int) -> int:
    return 1 << k


def _entries(family: FamilyId, n: int, m: int, m2: int) -> tuple[int, ...]:
    p = _pow2
    if family is FamilyId.L3:
        return (p(n + 1) + p(m) - 1, p(n) + p(m) - 1, p(n) - 1)
    if family is FamilyId.L4A:
        return (p(n + 3) + p(n - 1) - 1, p(n + 2) + p(n - 1) - 1, p(n + 1) + p(n - 1) - 1, p(n) + p(n - 1) - 1)
    if family is FamilyId.L4B:
        return (p(n + 2) + p(m + 1) + p(m2) - 1, p(n + 1) + p(m) + p(m2) - 1, p(n) + p(m) - 1, p(n) - 1)
    if family is FamilyId.L5A:
        return (
            p(n + 4) + p(n) - 3,
            p(n + 3) + p(n - 1) - 2,
            p(n + 2) + p(n - 1) - 1,
            p(n + 1) + p(n - 1) - 1,
            p(n) + p(n - 1) - 1,
        )
    if family is FamilyId.L5B:
        return (
            p(n + 3) + p(n + 2) + p(n - 2) - 1,
            p(n + 2) + p(n + 1) + p(n - 2) - 1,
            p(n + 1) + p(n) + p(n - 2) - 1,
            p(n) + p(n - 1) + p(n - 2) - 1,
            p(n) - 1,
        )
    if family is FamilyId.L5C:
        return (
            p(n + 3) + p(n) + p(m + 1) + p(m2) - 1,
            p(n + 2) + p(n - 1) + p(m) + p(m2) - 1,
            p(n + 1) + p(n - 2) + p(m) - 1,
            p(n) + p(n - 2) - 1,
            p(n) - 1,
        )
    return (
        p(n + 3) + p(n) + 1,
        p(n + 2) + p(n - 1) + 1,
        p(n + 1) + p(n - 2) + 1,
        p(n) + p(n - 2) - 1,
        p(n) - 1,
    )


def instantiate(family: FamilyId, params: FamilyParams) -> Sequence:
    """Substitutes params into the family's formula.

    Parameter bounds are not enforced here, so callers can probe the edges of
    a family's range.

    Args:
        family (FamilyId): The family.
        params (FamilyParams): Exactly the parameters the family uses.

    Returns:
        Sequence: The literal sequence given by the formula.
    """
    if params.given() != ARITY[family]:
        expected = ", ".join(sorted(ARITY[family]))
        raise ArityError(f"{family.value} takes ({expected}), got ({params}).")
    if family is FamilyId.L1:
        return Sequence.of((1 << params.t) - 1)
    return Sequence(_entries(family, params.n, params.m, params.m2))


def _params_for_n(family: FamilyId, n: int) -> Iterator[FamilyParams]:
    if family is FamilyId.L1:
        yield FamilyParams(t=n)
    elif family is FamilyId.L3:
        # m = n - 1 is attained, e.g. (19,11,7)
        for m in range(1, n):
            yield FamilyParams(n=n, m=m)
    elif family in (FamilyId.L4B, FamilyId.L5C):
        for m in range(2, n):
            for m2 in range(1, m):
                yield FamilyParams(n=n, m=m, m2=m2)
    else:
        yield FamilyParams(n=n)


# smallest n for which the formula has non-negative exponents and n > m > m2 >= 1
FIRST_N: dict[FamilyId, int] = {
    FamilyId.L1: 1,
    FamilyId.L3: 2,
    FamilyId.L4A: 1,
    FamilyId.L4B: 3,
    FamilyId.L5A: 1,
    FamilyId.L5B: 2,
    FamilyId.L5C: 3,
    FamilyId.L5D: 2,
}


def in_stated_range(family: FamilyId, params: FamilyParams) -> bool:
    """Whether params lie in the range the family is claimed for.

    L1: t >= 1. L3: n > m >= 1. L4A: n >= 3. L4B: n > m > m2 >= 2.
    L5A, L5D: n >= 3. L5B: n >= 4. L5C: n > m > m2 >= 3.
    """
    if family in (FamilyId.L1, FamilyId.L3):
        return True
    if family in (FamilyId.L4B, FamilyId.L5C):
        return params.m2 >= (2 if family is FamilyId.L4B else 3)
    return params.n >= (4 if family is FamilyId.L5B else 3)


@dataclass(frozen=True)
class FlaggedInstance:
    family: FamilyId
    params: FamilyParams
    report: CheckReport


@dataclass
class ValidationReport:
    """Instances whose verdict disagrees with the stated parameter ranges.

    ``dropped`` holds instances inside the stated range that fail
    check_curtis. ``extended`` holds instances outside it that pass.
    """
    dropped: list[FlaggedInstance] = field(default_factory=list)
    extended: list[FlaggedInstance] = field(default_factory=list)

    def count(self, family: Optional[FamilyId] = None) -> int:
        return sum(1 for item in self.dropped if family is None or item.family is family)

    def count_extended(self, family: Optional[FamilyId] = None) -> int:
        return sum(1 for item in self.extended if family is None or item.family is family)

    def lines(self) -> list[str]:
        lines = [
            f"dropped {item.family.value} ({item.params}) {item.report.sequence.text}: {item.report.describe()}"
            for item in self.dropped
        ]
        lines += [
            f"outside stated range {item.family.value} ({item.params}) {item.report.sequence.text}: accepted"
            for item in self.extended
        ]
        return lines


def enumerate_family(family: FamilyId, max_dim: int, report: Optional[ValidationReport] = None, logger: Optional[logging.Logger] = None) -> list[Sequence]:
    """Lists the family's accepted instances of dimension at most max_dim.

    Parameters run from the smallest values the formula allows, in
    increasing n, then m, then m2, stopping once every instance for some n is
    above max_dim. check_curtis alone decides which instances are kept, so
    accepted instances below the stated range are included too.

    Args:
        family (FamilyId): The family to enumerate.
        max_dim (int): Dimension bound, at least 1.
        report (ValidationReport, optional): Collects instances within the
            bound that fail check_curtis inside the stated range, and those
            that pass outside it.
        logger (logging.Logger, optional): Logger for drop diagnostics.

    Returns:
        list[Sequence]: Accepted instances sorted by (dim, text form).
    """
    logger = logger if logger is not None else logging.getLogger("closed_forms")
    if max_dim < 1:
        raise ValueError(f"max_dim must be at least 1, got {max_dim}.")
    accepted = []
    for n in count(FIRST_N[family]):
        candidates = [(params, instantiate(family, params)) for params in _params_for_n(family, n)]
        if candidates and min(seq.dim for _, seq in candidates) > max_dim:
            break
        for params, seq in candidates:
            if seq.dim > max_dim:
                continue
            verdict = check_curtis(seq)
            stated = in_stated_range(family, params)
            if verdict.accepted:
                accepted.append(seq)
                if not stated:
                    logger.info(f"Accepted {family.value} ({params}) {seq.text} outside the stated range.")
                    if report is not None:
                        report.extended.append(FlaggedInstance(family, params, verdict))
                continue
            if not stated:
                continue
            logger.debug(f"Dropping {family.value} ({params}) {seq.text}: {verdict.describe()}")
            if report is not None:
                report.dropped.append(FlaggedInstance(family, params, verdict))
    return sorted(accepted, key=lambda seq: (seq.dim, seq.text))


def enumerate_closed(lengths: Iterable[int], max_dim: int, report: Optional[ValidationReport] = None, logger: Optional[logging.Logger] = None) -> list[Sequence]:
    """Merges every family of the requested lengths, in emit order."""
    logger = logger if logger is not None else logging.getLogger("closed_forms")
    wanted = set(lengths)
    merged: set[Sequence] = set()
    for family in FamilyId:
        if family.length in wanted:
            instances = enumerate_family(family, max_dim, report, logger.getChild(family.value))
            logger.info(f"{family.value}: {len(instances)} instances up to dimension {max_dim}.")
            merged.update(instances)
    return sorted(merged, key=lambda seq: seq.sort_key)
