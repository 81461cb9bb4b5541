"""Robinson-Schensted correspondence and the inverse word search.

rs_pair implements classical row insertion: the word w(1), ..., w(n) is
inserted left to right, bumping along rows; the insertion tableau collects
the values and the recording tableau collects the order in which boxes
appear. The pair (insertion, recording) determines w uniquely.

find_word_for_tableau inverts the recording side: it returns the
lexicographically smallest permutation whose recording tableau is T. That
word picks out a concrete dense subset of the orbital variety labelled by T,
which the finite-field sampling layer conjugates into position.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundExceeded
from .tableaux import StandardTableau

WORD_SEARCH_BOUND = 8


@dataclass(frozen=True)
class Permutation:
    """One-line notation: images[k] is the image of k+1."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def __str__(self) -> str:
        return "[" + " ".join(str(v) for v in self.images) + "]"


def _row_insert(rows: list[list[int]], value: int) -> tuple[int, int]:
    """Bump value through the rows; returns the (row, col) of the new box."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([value])
            return (r + 1, 1)
        row = rows[r]
        idx = bisect_right(row, value)
        if idx == len(row):
            row.append(value)
            return (r + 1, idx + 1)
        value, row[idx] = row[idx], value
        r += 1


def rs_pair(w: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """Insertion and recording tableaux of the word w(1), ..., w(n)."""
    ins: list[list[int]] = []
    rec: list[list[int]] = []
    for step in range(1, w.n + 1):
        r, c = _row_insert(ins, w(step))
        if r > len(rec):
            rec.append([])
        rec[r - 1].append(step)
        assert len(rec[r - 1]) == c
    return (
        StandardTableau(tuple(tuple(row) for row in ins)),
        StandardTableau(tuple(tuple(row) for row in rec)),
    )


@lru_cache(maxsize=None)
def find_word_for_tableau(t: StandardTableau, bound: int = WORD_SEARCH_BOUND) -> Permutation:
    """Lexicographically smallest w whose recording tableau is t.

    Depth-first search over prefixes: at step k every unused value is tried
    in increasing order, and a branch survives only if inserting the value
    creates the new box exactly where t holds the label k. The first
    complete word found is therefore the lex-smallest. The recording
    constraint prunes hard enough that n <= 8 resolves instantly; larger
    tableaux raise BoundExceeded rather than risk a blowup.
    """
    n = t.n
    if n > bound:
        raise BoundExceeded(f"word search capped at n <= {bound}, got {n}")
    rows: list[list[int]] = []
    used = [False] * (n + 1)
    word: list[int] = []

    def attempt(step: int) -> bool:
        if step > n:
            return True
        want = t.position(step)
        for v in range(1, n + 1):
            if used[v]:
                continue
            snapshot = [row[:] for row in rows]
            pos = _row_insert(rows, v)
            if pos != want:
                rows[:] = snapshot
                continue
            used[v] = True
            word.append(v)
            if attempt(step + 1):
                return True
            used[v] = False
            word.pop()
            rows[:] = snapshot
        return False

    found = attempt(1)
    assert found, "every standard tableau is a recording tableau"
    return Permutation(tuple(word))
