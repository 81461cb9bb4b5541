"""Tableau projections: restriction to an index window [i, j].

Two primitive moves compose into the projection. Removing the largest
label restricts to 1..n-1. Stripping the smallest runs a jeu de taquin
slide from the top-left corner: the hole repeatedly swallows the smaller
of its right and lower neighbours until it reaches an outer corner, and
the surviving labels shift down by one. project(t, i, j) applies n-j
removals then i-1 strips, and the result describes how matrices supported
on the variety behave after cutting to rows and columns i..j.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BadRange, TooSmall
from .tableaux import Partition, StandardTableau, validate_syt

Grid = tuple[tuple[int | None, ...], ...]


def remove_largest(t: StandardTableau) -> StandardTableau:
    """Delete the box holding n; it always sits at the end of some row."""
    if t.n < 2:
        raise TooSmall("cannot remove from a single-box tableau")
    r, c = t.position(t.n)
    rows = [list(row) for row in t.rows]
    assert rows[r - 1][-1] == t.n and c == len(rows[r - 1])
    rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop(r - 1)
    return validate_syt(rows)


def strip_first_steps(t: StandardTableau) -> tuple[StandardTableau, list[Grid]]:
    """Jeu de taquin slide from (1,1), returning every intermediate grid.

    Each snapshot shows the hole as None. The final tableau has the hole's
    corner removed and all labels decremented.
    """
    if t.n < 2:
        raise TooSmall("cannot strip a single-box tableau")
    rows: list[list[int | None]] = [list(row) for row in t.rows]
    steps: list[Grid] = []

    def snap() -> None:
        steps.append(tuple(tuple(row) for row in rows))

    r = c = 0
    rows[0][0] = None
    snap()
    while True:
        right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
        below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[r][c] = right
            c += 1
        else:
            rows[r][c] = below
            r += 1
        rows[r][c] = None
        snap()
    # hole has reached an outer corner, necessarily the end of its row
    assert c == len(rows[r]) - 1
    rows[r].pop()
    if not rows[r]:
        rows.pop(r)
    return validate_syt([[e - 1 for e in row] for row in rows]), steps


def strip_first(t: StandardTableau) -> StandardTableau:
    return strip_first_steps(t)[0]


@lru_cache(maxsize=None)
def project(t: StandardTableau, i: int, j: int) -> StandardTableau:
    """Restrict t to the window [i, j]: drop boxes above j, strip below i.

    The two kinds of moves commute, so applying all removals first is a
    normal form, not a choice.
    """
    if not 1 <= i <= j <= t.n:
        raise BadRange(f"need 1 <= i <= j <= {t.n}, got i={i}, j={j}")
    out = t
    for _ in range(t.n - j):
        out = remove_largest(out)
    for _ in range(i - 1):
        out = strip_first(out)
    return out


def projected_shape(t: StandardTableau, i: int, j: int) -> Partition:
    """Shape of the window restriction; bounds ranks of matrix corners."""
    return project(t, i, j).shape
