"""Dyck paths, bicoloured Motzkin paths and plain Motzkin paths.

A Dyck path of semilength ``n`` is written as a word over ``N`` (north) and
``E`` (east).  Rows and columns of the ambient ``n x n`` array are numbered
from 1, bottom to top and left to right, and every index in this module is
1-based.

Motzkin words use ``U`` (up), ``D`` (down) and ``L`` (level).  In bicoloured
words ``L`` is only allowed at height zero, and levels above zero are
coloured ``B`` (blue) or ``R`` (red).  Plain Motzkin words allow ``L`` at any
height.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "PathError",
    "ForeignCharacterError",
    "PrefixViolationError",
    "UnbalancedError",
    "LevelColourError",
    "DyckPath",
    "AreaProfile",
    "Valley",
    "BicolouredMotzkinPath",
    "MotzkinPath",
    "parse_dyck",
    "format_dyck",
    "area_profile",
    "valleys",
    "parse_motzkin",
    "format_motzkin",
    "parse_plain_motzkin",
    "render_ascii",
]


class PathError(ValueError):
    """A word that does not describe a valid path.

    ``position`` is the 1-based index of the first offending step.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at step {position})")
        self.position = position


class ForeignCharacterError(PathError):
    pass


class PrefixViolationError(PathError):
    """The path dips below the diagonal (Dyck) or the x-axis (Motzkin)."""


class UnbalancedError(PathError):
    """The path does not end on the diagonal (Dyck) or at height 0 (Motzkin)."""


class LevelColourError(PathError):
    """A level step whose colour is not allowed at its height."""


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path stored as its step word over ``N`` and ``E``."""

    steps: str = ""

    def __post_init__(self):
        height = 0
        for i, s in enumerate(self.steps, 1):
            if s == "N":
                height += 1
            elif s == "E":
                height -= 1
                if height < 0:
                    raise PrefixViolationError("path goes below the diagonal", i)
            else:
                raise ForeignCharacterError(f"unexpected character {s!r}", i)
        if height != 0:
            raise UnbalancedError(
                f"{height} more north than east steps", len(self.steps)
            )

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)


class Valley(NamedTuple):
    """An east step directly followed by a north step.

    ``east_index`` counts east steps, ``north_index`` counts north steps;
    the valley is the cell in column ``east_index`` and row ``north_index``.
    """

    east_index: int
    north_index: int


@dataclass(frozen=True)
class AreaProfile:
    """Row-area ``(r_0, ..., r_n)`` and column-area ``(c_1, ..., c_{n+1})``.

    The sentinels ``r_0 = -1`` and ``c_{n+1} = -1`` are stored, so
    ``row_area[k]`` is ``r_k`` and ``column_area[k - 1]`` is ``c_k``.
    """

    row_area: tuple[int, ...]
    column_area: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.row_area) - 1

    def r(self, k: int) -> int:
        return self.row_area[k]

    def c(self, k: int) -> int:
        return self.column_area[k - 1]


def parse_dyck(text: str) -> DyckPath:
    """Parse a Dyck word; surrounding whitespace is ignored, inner whitespace is not."""
    return DyckPath(text.strip())


def format_dyck(path: DyckPath) -> str:
    return path.steps


def area_profile(path: DyckPath) -> AreaProfile:
    """Row- and column-area sequences of ``path``, sentinels included.

    The k-th north step starting at x-coordinate ``x`` leaves ``k - 1 - x``
    full squares between itself and the diagonal; the k-th east step at
    height ``y`` leaves ``y - k``.
    """
    rows = [-1]
    cols = []
    x = y = 0
    for s in path.steps:
        if s == "N":
            y += 1
            rows.append(y - 1 - x)
        else:
            x += 1
            cols.append(y - x)
    cols.append(-1)
    return AreaProfile(tuple(rows), tuple(cols))


def valleys(path: DyckPath) -> list[Valley]:
    result = []
    east = north = 0
    prev = ""
    for s in path.steps:
        if s == "N":
            north += 1
            if prev == "E":
                result.append(Valley(east, north))
        else:
            east += 1
        prev = s
    return result


_MOTZKIN_LETTERS = "UDLBR"


@dataclass(frozen=True)
class BicolouredMotzkinPath:
    """Motzkin path whose level steps above height zero are blue or red."""

    steps: str = ""

    def __post_init__(self):
        _check_motzkin(self.steps, coloured=True)

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)

    def positions(self, letter: str) -> list[int]:
        """1-based indices of the steps equal to ``letter``."""
        return [i for i, s in enumerate(self.steps, 1) if s == letter]


@dataclass(frozen=True)
class MotzkinPath:
    """Uncoloured Motzkin path; ``L`` may occur at any height."""

    steps: str = ""

    def __post_init__(self):
        _check_motzkin(self.steps, coloured=False)

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)

    def is_riordan(self) -> bool:
        """True if no level step sits at height zero."""
        height = 0
        for s in self.steps:
            if s == "L" and height == 0:
                return False
            height += (s == "U") - (s == "D")
        return True


def _check_motzkin(steps: str, coloured: bool) -> None:
    alphabet = _MOTZKIN_LETTERS if coloured else "UDL"
    height = 0
    for i, s in enumerate(steps, 1):
        if s not in alphabet:
            raise ForeignCharacterError(f"unexpected character {s!r}", i)
        if s == "U":
            height += 1
        elif s == "D":
            height -= 1
            if height < 0:
                raise PrefixViolationError("path goes below height 0", i)
        elif coloured and s == "L" and height != 0:
            raise LevelColourError(f"'L' at height {height}", i)
        elif s in "BR" and height == 0:
            raise LevelColourError(f"{s!r} at height 0", i)
    if height != 0:
        raise UnbalancedError(f"path ends at height {height}", len(steps))


def parse_motzkin(text: str) -> BicolouredMotzkinPath:
    return BicolouredMotzkinPath(text.strip())


def format_motzkin(path: BicolouredMotzkinPath | MotzkinPath) -> str:
    return path.steps


def parse_plain_motzkin(text: str) -> MotzkinPath:
    return MotzkinPath(text.strip())


def render_ascii(
    path: DyckPath, marks: Iterable[tuple[int, int]] | None = None
) -> str:
    """Draw ``path`` in its ``n x n`` array, top row first.

    The canvas has ``2n`` text lines: for each row (from ``n`` down to 1)
    a line holding the horizontal edges on top of that row, then a line
    holding the vertical edges and the cells of the row.  Path edges are
    ``_`` and ``|``, diagonal cells ``.``, marked cells ``x``.  Marks are
    ``(column, row)`` pairs.  Trailing blanks are stripped.
    """
    n = path.semilength
    marked = set()
    for col, row in marks or ():
        if not (1 <= col <= n and 1 <= row <= n):
            raise ValueError(f"mark {(col, row)} outside the {n}x{n} array")
        marked.add((col, row))

    width = 2 * n + 1
    # canvas[i][j]: i = 2 * (n - y) for the line y, j = 2 * x for the line x
    canvas = [[" "] * width for _ in range(2 * n + 1)]
    for row in range(1, n + 1):
        for col in range(1, n + 1):
            if (col, row) in marked:
                ch = "x"
            elif col == row:
                ch = "."
            else:
                continue
            canvas[2 * (n - row) + 1][2 * col - 1] = ch
    x = y = 0
    for s in path.steps:
        if s == "N":
            canvas[2 * (n - y) - 1][2 * x] = "|"
            y += 1
        else:
            canvas[2 * (n - y)][2 * x + 1] = "_"
            x += 1
    # the bottom lattice line never carries a path edge
    lines = ["".join(line).rstrip() for line in canvas[:-1]]
    return "\n".join(lines)
