"""Table and statistics output in the dimension / sequence / length layout.

Output is ASCII with LF line endings so that golden files compare byte for
byte on every platform.
"""
from dataclasses import dataclass, asdict
from typing import Iterable, NamedTuple, TextIO
import csv
import io
import json

from annseq.curtis import Sequence
from annseq.engine import ResultSet

FORMATS = ("csv", "tsv", "json")
TABLE_HEADER = ("dim", "sequence", "length")
STATS_HEADER = ("lo", "hi", "count", "max_length", "cumulative")


@dataclass(frozen=True)
class TableRow:
    dim: int
    entries: str
    length: int

    @classmethod
    def of(cls, seq: Sequence) -> "TableRow":
        return cls(seq.dim, seq.text, seq.length)

    def to_dict(self) -> dict:
        return {"dim": self.dim, "sequence": self.entries, "length": self.length}


class Interval(NamedTuple):
    lo: int
    hi: int

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class StatsRow:
    lo: int
    hi: int
    count: int
    max_length: int
    cumulative: int


def _check_format(fmt: str):
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}.")


def _writer(out: TextIO, fmt: str):
    return csv.writer(out, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n", quoting=csv.QUOTE_MINIMAL)


def _dump_json(payload, out: TextIO):
    out.write(json.dumps(payload, separators=(",", ":")))
    out.write("\n")


def emit(results: Iterable[Sequence], fmt: str, out: TextIO):
    """Writes one row per sequence.

    Args:
        results (Iterable[Sequence]): Sequences in emit order.
        fmt (str): ``csv``, ``tsv`` or ``json``.
        out (TextIO): Destination stream.
    """
    _check_format(fmt)
    rows = (TableRow.of(seq) for seq in results)
    if fmt == "json":
        _dump_json([row.to_dict() for row in rows], out)
        return
    writer = _writer(out, fmt)
    writer.writerow(TABLE_HEADER)
    for row in rows:
        writer.writerow((row.dim, row.entries, row.length))


def dumps(results: Iterable[Sequence], fmt: str) -> str:
    buffer = io.StringIO()
    emit(results, fmt, buffer)
    return buffer.getvalue()


def group_pow2(results: Iterable[Sequence]) -> list[tuple[Interval, list[TableRow]]]:
    """Partitions rows by the dyadic block [2^n, 2^(n+1)) containing their dimension.

    Empty blocks between the smallest and largest dimension are kept.
    """
    rows = [TableRow.of(seq) for seq in results]
    if not rows:
        return []
    buckets: dict[int, list[TableRow]] = {}
    for row in rows:
        buckets.setdefault(row.dim.bit_length() - 1, []).append(row)
    first, last = min(buckets), max(buckets)
    return [(Interval(1 << e, (1 << (e + 1)) - 1), buckets.get(e, [])) for e in range(first, last + 1)]


def stats(results: Iterable[Sequence]) -> list[StatsRow]:
    cumulative = 0
    table = []
    for interval, rows in group_pow2(results):
        cumulative += len(rows)
        table.append(StatsRow(interval.lo, interval.hi, len(rows), max((row.length for row in rows), default=0), cumulative))
    return table


def emit_grouped(results: Iterable[Sequence], fmt: str, out: TextIO):
    """Like emit, with each dyadic interval introduced by a ``# [lo,hi] N rows`` line (json: nested objects)."""
    _check_format(fmt)
    groups = group_pow2(results)
    if fmt == "json":
        _dump_json([{"lo": i.lo, "hi": i.hi, "rows": [row.to_dict() for row in rows]} for i, rows in groups], out)
        return
    writer = _writer(out, fmt)
    writer.writerow(TABLE_HEADER)
    for interval, rows in groups:
        out.write(f"# {interval} {len(rows)} rows\n")
        for row in rows:
            writer.writerow((row.dim, row.entries, row.length))


def emit_stats(table: list[StatsRow], fmt: str, out: TextIO):
    _check_format(fmt)
    if fmt == "json":
        _dump_json([asdict(row) for row in table], out)
        return
    writer = _writer(out, fmt)
    writer.writerow(STATS_HEADER)
    for row in table:
        writer.writerow((row.lo, row.hi, row.count, row.max_length, row.cumulative))


def _row_to_sequence(dim: int, text: str, length: int) -> Sequence:
    seq = Sequence.parse(text)
    if (seq.dim, seq.length) != (dim, length):
        raise ValueError(f"Row {dim},{text},{length} is inconsistent with its sequence.")
    return seq


def parse(text: str, fmt: str) -> ResultSet:
    """Reads back what emit or emit_grouped wrote."""
    _check_format(fmt)
    sequences = []
    if fmt == "json":
        payload = json.loads(text)
        if payload and "rows" in payload[0]:
            payload = [row for group in payload for row in group["rows"]]
        for row in payload:
            sequences.append(_row_to_sequence(row["dim"], row["sequence"], row["length"]))
        return ResultSet.from_sequences(sequences)
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    reader = csv.reader(lines, delimiter="\t" if fmt == "tsv" else ",")
    header = next(reader, None)
    if header is not None and tuple(header) != TABLE_HEADER:
        raise ValueError(f"Unexpected header {header}.")
    for dim, entries, length in reader:
        sequences.append(_row_to_sequence(int(dim), entries, int(length)))
    return ResultSet.from_sequences(sequences)
