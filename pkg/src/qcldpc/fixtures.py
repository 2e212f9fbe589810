"""Edge spreadings and circulant exponents of the four asymptotically regular (3,6) examples.

``EXAMPLES`` maps a fixture name to an :class:`Example`: the spreading, the
termination factor used by default, and (where a concrete code is known) a
shift assignment for the terminated base matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .protograph import EdgeSpreading, check_cover, spreading_from_parts, terminate
from .qc_lift import ShiftAssignment

_ONES = np.ones((3, 6), dtype=np.int64)

# (3,6) chain with B_0 = B_1 = B_2 = [1 1]
EX1 = spreading_from_parts([[[1, 1]], [[1, 1]], [[1, 1]]])

_EX2_B0 = np.array([
    [1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 1],
])
EX2 = spreading_from_parts([_EX2_B0, _ONES - _EX2_B0])

_EX3_B0 = np.array([
    [1, 1, 1, 0, 0, 0],
    [1, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 1],
])
EX3 = spreading_from_parts([_EX3_B0, _ONES - _EX3_B0])

EX4 = spreading_from_parts([[[2, 1]], [[1, 2]]])

EX4_COVER2 = spreading_from_parts([
    [[1, 1, 1, 0],
     [1, 1, 0, 1]],
    [[1, 0, 1, 1],
     [0, 1, 1, 1]],
])

EX4_COVER3 = spreading_from_parts([
    [[1, 1, 0, 1, 0, 0],
     [1, 0, 1, 0, 1, 0],
     [0, 1, 1, 0, 0, 1]],
    [[1, 0, 0, 1, 0, 1],
     [0, 1, 0, 1, 1, 0],
     [0, 0, 1, 0, 1, 1]],
])

# [294, 51, 56] code: Example 1 at L = 3, N = 49
EX1_SHIFTS = ShiftAssignment.from_grid(49, [
    [[1], [2], [], [], [], []],
    [[5], [10], [20], [9], [], []],
    [[25], [19], [7], [14], [28], [11]],
    [[], [], [4], [8], [16], [22]],
    [[], [], [], [], [18], [34]],
])

# [152, 38, 30] code: Example 4 at L = 2, N = 38
EX4_SHIFTS = ShiftAssignment.from_grid(38, [
    [[1, 2], [4], [], []],
    [[5], [10, 20], [9, 18], [7]],
    [[], [], [11], [23, 17]],
])


@dataclass(frozen=True)
class Example:
    name: str
    spreading: EdgeSpreading
    L: int
    shifts: ShiftAssignment | None = None
    cover_of: EdgeSpreading | None = None
    cover_degree: int = 1

    def terminated(self, L: int | None = None):
        return terminate(self.spreading, self.L if L is None else L)


EXAMPLES = {
    "ex1": Example("ex1", EX1, 3, EX1_SHIFTS),
    "ex2": Example("ex2", EX2, 2),
    "ex3": Example("ex3", EX3, 2),
    "ex4": Example("ex4", EX4, 2, EX4_SHIFTS),
    "ex4-cover2": Example("ex4-cover2", EX4_COVER2, 2, cover_of=EX4, cover_degree=2),
    "ex4-cover3": Example("ex4-cover3", EX4_COVER3, 2, cover_of=EX4, cover_degree=3),
}

# reference table: (row label, fixture, L at rate 1/4, delta_min, epsilon*) as printed
TABLE1_REFERENCE = [
    ("1", "ex1", 4, 0.0815, 0.6353),
    ("2", "ex2", 2, 0.0920, 0.6471),
    ("3", "ex3", 2, 0.0296, 0.4949),
    ("4 (3-cover)", "ex4-cover3", 2, 0.0950, 0.6447),
]


def verify_covers() -> None:
    """Raise if a cover fixture is not a cover of its original spreading."""
    for ex in EXAMPLES.values():
        if ex.cover_of is not None:
            check_cover(ex.cover_of, ex.spreading, ex.cover_degree)
