"""Enumeration of every accepted sequence up to a dimension bound.

``search`` builds sequences tail-first: once i_{j+1} is fixed, the window
0 <= 2*i_{j+1} - i_j < 2^phi(i_{j+1}) and the bit-length chain
psi(i_j) = psi(i_{j+1}) + 1 leave only a handful of odd candidates for i_j.
``naive_oracle`` shares none of that pruning and trusts ``check_curtis`` alone.
"""
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional
import heapq
import logging

from annseq.bitcore import phi, psi, is_spike
from annseq.curtis import Sequence, CheckReport, check_curtis, structural_report
from annseq.utils import TimeRecorder

DEFAULT_ORACLE_CEILING = 4096


class SearchError(RuntimeError):
    pass


class OracleCeilingError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    max_dim: int
    min_dim: int = 1
    lengths: Optional[frozenset[int]] = None
    shards: int = 1

    def __post_init__(self):
        if self.lengths is not None:
            object.__setattr__(self, "lengths", frozenset(self.lengths))
            if any(length < 1 for length in self.lengths):
                raise ValueError(f"Lengths must be positive, got {sorted(self.lengths)}.")
        if self.min_dim < 1:
            raise ValueError(f"min_dim must be at least 1, got {self.min_dim}.")
        if self.min_dim > self.max_dim:
            raise ValueError(f"min_dim {self.min_dim} exceeds max_dim {self.max_dim}.")
        if self.shards < 1:
            raise ValueError(f"shards must be at least 1, got {self.shards}.")

    @property
    def max_length(self) -> int:
        # a sequence of length s > 1 has dimension above 2^s
        bound = max(1, (self.max_dim - 1).bit_length() - 1)
        if self.lengths:
            bound = min(bound, max(self.lengths))
        return bound


def _entries_key(entries: tuple[int, ...]) -> tuple[int, int, tuple[int, ...]]:
    return (sum(entries), len(entries), entries)


@dataclass
class ResultSet:
    sequences: list[Sequence]
    counts: dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @classmethod
    def from_sequences(cls, sequences: Iterable[Sequence], elapsed: float = 0.0) -> "ResultSet":
        ordered = sorted(set(sequences), key=lambda seq: seq.sort_key)
        counts: dict[int, int] = {}
        for seq in ordered:
            counts[seq.length] = counts.get(seq.length, 0) + 1
        return cls(ordered, dict(sorted(counts.items())), elapsed)

    @property
    def total(self) -> int:
        return len(self.sequences)

    @property
    def max_length(self) -> int:
        return max(self.counts, default=0)

    def of_length(self, length: int) -> list[Sequence]:
        return [seq for seq in self.sequences if seq.length == length]

    def __len__(self) -> int:
        return len(self.sequences)

    def __iter__(self) -> Iterator[Sequence]:
        return iter(self.sequences)


class _ShardWalker:
    def __init__(self, max_dim: int, min_dim: int, lengths: Optional[frozenset[int]], max_length: int):
        self.max_dim = max_dim
        self.min_dim = min_dim
        self.lengths = lengths
        self.max_length = max_length
        self.found: list[tuple[int, ...]] = []
        self.branch: tuple[int, ...] = ()

    def walk(self, tail: int):
        self._grow(tail, tail, (tail,))

    def _grow(self, head: int, total: int, entries: tuple[int, ...]):
        self.branch = entries
        k = len(entries)
        phi_head = phi(head)
        # augmented head condition with i_0 = |I|
        gap = 2 * head - total
        if (0 < gap < 1 << phi_head and total >= self.min_dim
                and (self.lengths is None or k in self.lengths) and (total - k) % 2 == 0):
            self.found.append(entries)
        if k >= self.max_length:
            return
        psi_head = psi(head)
        lo = max(2 * head - (1 << phi_head) + 1, 1 << psi_head) | 1
        hi = min(2 * head, (1 << (psi_head + 1)) - 1)
        if total + lo > self.max_dim:
            return
        for p in range(lo, hi + 1, 2):
            if total + p > self.max_dim:
                break
            if is_spike(p):
                continue
            self._grow(p, total + p, (p,) + entries)


def _audit(entries: tuple[int, ...]):
    seq = Sequence(entries)
    report = check_curtis(seq)
    if not report.accepted:
        raise SearchError(f"Self-audit rejected {seq.text}: {report.describe()}")
    broken = [name for name, holds in structural_report(seq) if not holds]
    if broken:
        raise SearchError(f"Self-audit found {seq.text} violating {', '.join(broken)}")


def _run_shard(max_dim: int, min_dim: int, lengths: Optional[frozenset[int]], max_length: int, tails: list[int]) -> list[tuple[int, ...]]:
    walker = _ShardWalker(max_dim, min_dim, lengths, max_length)
    for tail in tails:
        try:
            walker.walk(tail)
        except (MemoryError, RecursionError) as e:
            raise SearchError(f"Search exhausted resources on shard tail i_r={tail} at branch {walker.branch}: {e!r}") from e
    for entries in walker.found:
        _audit(entries)
    return sorted(walker.found, key=_entries_key)


def _shard_tails(config: SearchConfig) -> list[list[int]]:
    tails = list(range(1, config.max_dim + 1, 2))
    return [tails[i::config.shards] for i in range(config.shards)]


def _collect_runs(config: SearchConfig, logger: logging.Logger) -> list[list[tuple[int, ...]]]:
    args = (config.max_dim, config.min_dim, config.lengths, config.max_length)
    chunks = _shard_tails(config)
    if config.shards == 1:
        run = _run_shard(*args, chunks[0])
        logger.info(f"Single shard done: {len(run)} sequences.")
        return [run]
    runs: list[list[tuple[int, ...]]] = [[] for _ in chunks]
    with ProcessPoolExecutor(max_workers=config.shards) as executor:
        futures = {executor.submit(_run_shard, *args, chunk): index for index, chunk in enumerate(chunks)}
        done = 0
        for future in as_completed(futures):
            index = futures[future]
            runs[index] = future.result()
            done += 1
            logger.info(f"Shard {index} done ({done}/{len(chunks)}): {len(runs[index])} sequences.")
    return runs


def iter_search(config: SearchConfig, logger: Optional[logging.Logger] = None) -> Iterator[Sequence]:
    """Yields accepted sequences in emit order, merging the shard-local sorted runs."""
    logger = logger if logger is not None else logging.getLogger("engine")
    logger.info(f"Searching up to dimension {config.max_dim} over {config.shards} shard(s), lengths <= {config.max_length}.")
    runs = _collect_runs(config, logger)
    for entries in heapq.merge(*runs, key=_entries_key):
        yield Sequence(entries)


def search(config: SearchConfig, logger: Optional[logging.Logger] = None) -> ResultSet:
    """Computes every accepted sequence with min_dim <= |I| <= max_dim.

    Args:
        config (SearchConfig): Dimension bounds, length filter and shard count.
        logger (logging.Logger, optional): Logger for progress.

    Returns:
        ResultSet: The sequences in emit order, identical for any shard count.
    """
    logger = logger if logger is not None else logging.getLogger("engine")
    with TimeRecorder(f"Search up to {config.max_dim}", logger) as timer:
        sequences = list(iter_search(config, logger))
    result = ResultSet.from_sequences(sequences, timer.elapsed)
    logger.info(f"Found {result.total} sequences, per length {result.counts}.")
    return result


def oracle_candidates(max_dim: int, exhaustive: bool = False) -> Iterator[Sequence]:
    """Yields every candidate the oracle judges, grown tail-first with an explicit stack.

    By default a predecessor i_j is only generated inside the pairwise window
    0 <= 2*i_{j+1} - i_j < 2^phi(i_{j+1}), which is a clause of check_curtis
    itself. With exhaustive=True every admissible predecessor in
    [1, 2*i_{j+1}] is generated, which is only feasible for small dimensions.
    No oddness, bit-length or spike rule is used.
    """
    if max_dim < 1:
        raise ValueError(f"max_dim must be at least 1, got {max_dim}.")
    stack = [((tail,), tail) for tail in range(max_dim, 0, -1)]
    while stack:
        entries, total = stack.pop()
        yield Sequence(entries)
        head = entries[0]
        lo = 1 if exhaustive else max(1, 2 * head - (1 << phi(head)) + 1)
        for p in range(lo, 2 * head + 1):
            if total + p > max_dim:
                break
            stack.append(((p,) + entries, total + p))


def naive_oracle(max_dim: int, ceiling: int = DEFAULT_ORACLE_CEILING, exhaustive: bool = False, logger: Optional[logging.Logger] = None) -> ResultSet:
    """Independent enumeration that judges every candidate with check_curtis.

    Args:
        max_dim (int): Dimension bound.
        ceiling (int, optional): Largest max_dim the oracle accepts.
        exhaustive (bool, optional): Walk every admissible sequence, see
            oracle_candidates.
        logger (logging.Logger, optional): Logger for progress.

    Returns:
        ResultSet: The accepted sequences in emit order.
    """
    logger = logger if logger is not None else logging.getLogger("oracle")
    if max_dim < 1:
        raise ValueError(f"max_dim must be at least 1, got {max_dim}.")
    if max_dim > ceiling:
        raise OracleCeilingError(f"Oracle ceiling is {ceiling}, asked for dimension {max_dim}.")
    found = []
    visited = 0
    with TimeRecorder(f"Oracle up to {max_dim}", logger) as timer:
        for seq in oracle_candidates(max_dim, exhaustive):
            visited += 1
            if check_curtis(seq).accepted:
                found.append(seq)
    logger.info(f"Oracle visited {visited} candidates, accepted {len(found)}.")
    return ResultSet.from_sequences(found, timer.elapsed)


@dataclass
class DiffReport:
    left_only: list[CheckReport]
    right_only: list[CheckReport]

    @property
    def empty(self) -> bool:
        return not self.left_only and not self.right_only

    def lines(self) -> list[str]:
        lines = [f"< {report.sequence.text} (dim {report.sequence.dim}): {report.describe()}" for report in self.left_only]
        lines += [f"> {report.sequence.text} (dim {report.sequence.dim}): {report.describe()}" for report in self.right_only]
        return lines


def diff(a: ResultSet, b: ResultSet) -> DiffReport:
    """Symmetric difference of two result sets, each side annotated with its CheckReport."""
    left, right = set(a.sequences), set(b.sequences)
    return DiffReport(
        left_only=[check_curtis(seq) for seq in sorted(left - right, key=lambda seq: seq.sort_key)],
        right_only=[check_curtis(seq) for seq in sorted(right - left, key=lambda seq: seq.sort_key)],
    )
