from pathlib import Path

from annseq.curtis import Sequence

GOLDEN_DIR = Path(__file__).parent / "golden"

SEARCH_40 = [
    Sequence.of(1),
    Sequence.of(3),
    Sequence.of(7),
    Sequence.of(15),
    Sequence.of(9, 5, 3),
    Sequence.of(31),
    Sequence.of(17, 9, 7),
    Sequence.of(19, 11, 7),
]

SEARCH_256 = SEARCH_40 + [
    Sequence.of(63),
    Sequence.of(33, 17, 15),
    Sequence.of(35, 19, 15),
    Sequence.of(39, 23, 15),
    Sequence.of(127),
    Sequence.of(65, 33, 31),
    Sequence.of(65, 33, 17, 9, 5),
    Sequence.of(67, 35, 19, 11),
    Sequence.of(67, 35, 31),
    Sequence.of(71, 39, 31),
    Sequence.of(79, 47, 31),
    Sequence.of(81, 41, 21, 11, 7),
    Sequence.of(83, 43, 23, 15),
    Sequence.of(255),
]

# per-length counts of the full search
COUNTS_16384 = {1: 14, 3: 55, 4: 91, 5: 197, 6: 36, 7: 110, 8: 16, 9: 19}
COUNTS_131072 = {1: 17, 3: 91, 4: 230, 5: 641, 6: 285, 7: 772, 8: 334, 9: 471, 11: 68, 13: 2}
TOTAL_16348 = 537
