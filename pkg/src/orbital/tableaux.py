"""Partitions, standard Young tableaux, tau-invariants, Richardson tableaux.

Everything here is 1-indexed: rows, columns, and box labels all start at 1,
matching the usual tableau conventions. All types are immutable and all
functions are pure.

A standard Young tableau T with n boxes labels an irreducible component
(orbital variety) of O intersected with the strictly upper triangular
matrices, where O is the nilpotent orbit of Jordan type shape(T). The
tau-invariant of T records which simple root coordinates vanish identically
on that component, and each tau-set has a unique component of maximal
dimension whose tableau is built greedily (the Richardson tableau).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    ColumnNotIncreasing,
    DuplicateEntry,
    NotRichardson,
    RaggedShape,
    RowNotIncreasing,
    SizeMismatch,
    TableauError,
)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        for k, p in enumerate(self.parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if k and self.parts[k - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {self.parts}")

    @property
    def n(self) -> int:
        """Total number of boxes."""
        return sum(self.parts)

    def part(self, k: int) -> int:
        """The k-th part (1-indexed), or 0 past the last row."""
        return self.parts[k - 1] if 1 <= k <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k: int) -> int:
        return self.parts[k]

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.parts) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)


def dual_partition(lam: Partition) -> Partition:
    """Transpose of the Young diagram: part k counts rows of length >= k."""
    if not lam.parts:
        return Partition(())
    return Partition(
        tuple(sum(1 for p in lam.parts if p >= k) for k in range(1, lam.parts[0] + 1))
    )


def dominance_le(mu: Partition, lam: Partition) -> bool:
    """Dominance order via partial sums: mu <= lam iff every prefix sum of mu
    is at most the corresponding prefix sum of lam. Both must partition the
    same n; the order is partial, so neither direction may hold."""
    if mu.n != lam.n:
        raise SizeMismatch(f"cannot compare partitions of {mu.n} and {lam.n}")
    sm = sl = 0
    for k in range(max(len(mu), len(lam))):
        sm += mu.part(k + 1)
        sl += lam.part(k + 1)
        if sm > sl:
            return False
    return True


def variety_dim(lam: Partition, n: int) -> int:
    """Dimension of any orbital variety of Jordan type lam inside sl(n):
    half of n^2 minus the sum of squared dual parts."""
    if lam.n != n:
        raise SizeMismatch(f"partition of {lam.n} cannot index an orbit in sl({n})")
    sq = sum(d * d for d in dual_partition(lam).parts)
    return (n * n - sq) // 2


@dataclass(frozen=True)
class StandardTableau:
    """Rows of box labels; entries increase along rows and down columns.

    Construct through validate_syt (or from_json) so the standardness
    errors are raised with their precise reasons.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @cached_property
    def _positions(self) -> dict[int, tuple[int, int]]:
        pos: dict[int, tuple[int, int]] = {}
        for r, row in enumerate(self.rows, start=1):
            for c, entry in enumerate(row, start=1):
                pos[entry] = (r, c)
        return pos

    def position(self, entry: int) -> tuple[int, int]:
        """(row, column) of a box label, both 1-indexed."""
        return self._positions[entry]

    def row_of(self, entry: int) -> int:
        return self._positions[entry][0]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "StandardTableau":
        if not isinstance(obj, dict) or "rows" not in obj:
            raise TableauError("tableau JSON needs a 'rows' key")
        t = validate_syt(obj["rows"])
        if "n" in obj and obj["n"] != t.n:
            raise TableauError(f"declared n={obj['n']} but found {t.n} boxes")
        return t

    def __str__(self) -> str:
        return render_tableau(self)


def validate_syt(rows) -> StandardTableau:
    """Check standardness and build the tableau.

    Raises RaggedShape, DuplicateEntry, RowNotIncreasing or
    ColumnNotIncreasing naming the offending boxes; a well-formed input
    comes back as an immutable StandardTableau.
    """
    rows = tuple(tuple(int(e) for e in row) for row in rows)
    if not rows or any(len(r) == 0 for r in rows):
        raise RaggedShape("rows must be nonempty")
    for k in range(1, len(rows)):
        if len(rows[k]) > len(rows[k - 1]):
            raise RaggedShape(
                f"row {k + 1} is longer than row {k} ({len(rows[k])} > {len(rows[k - 1])})"
            )
    entries = [e for row in rows for e in row]
    n = len(entries)
    seen: set[int] = set()
    for e in entries:
        if e in seen:
            raise DuplicateEntry(f"entry {e} appears twice")
        seen.add(e)
    if seen != set(range(1, n + 1)):
        raise TableauError(f"entries must be exactly 1..{n}, got {sorted(seen)}")
    for r, row in enumerate(rows, start=1):
        for c in range(1, len(row)):
            if row[c - 1] >= row[c]:
                raise RowNotIncreasing(f"row {r}: {row[c - 1]} >= {row[c]}")
    for r in range(1, len(rows)):
        upper, lower = rows[r - 1], rows[r]
        for c in range(len(lower)):
            if upper[c] >= lower[c]:
                raise ColumnNotIncreasing(
                    f"column {c + 1}: {upper[c]} >= {lower[c]}"
                )
    return StandardTableau(rows)


def render_tableau(t: StandardTableau) -> str:
    """ASCII boxes, one tableau row per content line."""
    w = len(str(t.n))

    def border(cells: int) -> str:
        return "+" + "+".join(["-" * (w + 2)] * cells) + "+"

    lines = [border(len(t.rows[0]))]
    for k, row in enumerate(t.rows):
        lines.append("|" + "|".join(f" {e:>{w}} " for e in row) + "|")
        nxt = len(t.rows[k + 1]) if k + 1 < len(t.rows) else 0
        lines.append(border(max(len(row), nxt)))
    return "\n".join(lines)


@dataclass(frozen=True)
class TauSet:
    """Subset of simple-root indices {1, ..., n-1} inside rank-(n-1) type A."""

    indices: frozenset[int]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", frozenset(int(i) for i in self.indices))
        if self.n < 1:
            raise ValueError("n must be at least 1")
        for i in self.indices:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"index {i} outside 1..{self.n - 1}")

    def sorted(self) -> list[int]:
        return sorted(self.indices)

    def runs(self) -> list[tuple[int, int]]:
        """Maximal intervals [a, b] with a..b all in the set."""
        out: list[tuple[int, int]] = []
        start = None
        for i in range(1, self.n):
            if i in self.indices:
                if start is None:
                    start = i
            elif start is not None:
                out.append((start, i - 1))
                start = None
        if start is not None:
            out.append((start, self.n - 1))
        return out

    def positive_roots(self) -> list[tuple[int, int]]:
        """All (u, v) with alpha_u + ... + alpha_v supported inside one run.

        These index exactly the matrix positions (u, v+1) forced to zero on
        every orbital variety with this tau-invariant.
        """
        out: list[tuple[int, int]] = []
        for a, b in self.runs():
            for u in range(a, b + 1):
                for v in range(u, b + 1):
                    out.append((u, v))
        return sorted(out)

    def contains_root(self, u: int, v: int) -> bool:
        """Whether alpha_u + ... + alpha_v lies in the span of the set."""
        return all(i in self.indices for i in range(u, v + 1))

    def __str__(self) -> str:
        return "{" + ", ".join(str(i) for i in self.sorted()) + "}"

    def to_json(self) -> list[int]:
        return self.sorted()


def _as_tau(tau, n: int) -> TauSet:
    if isinstance(tau, TauSet):
        if tau.n != n:
            raise SizeMismatch(f"tau has ambient size {tau.n}, expected {n}")
        return tau
    return TauSet(frozenset(tau), n)


def tau_invariant(t: StandardTableau) -> TauSet:
    """Indices i whose box sits strictly above the box of i+1."""
    return TauSet(
        frozenset(i for i in range(1, t.n) if t.row_of(i) < t.row_of(i + 1)),
        t.n,
    )


def richardson_tableau(tau, n: int) -> StandardTableau:
    """Greedy filling that realizes tau with maximal-dimension shape.

    Box k goes to row 1 whenever alpha_{k-1} is not in tau (the constraint
    row(k) <= row(k-1) is then free); otherwise it goes to the topmost row
    strictly below row(k-1) where appending keeps the shape a partition.
    """
    tau = _as_tau(tau, n)
    rows: list[list[int]] = []
    prev_row = 0
    for k in range(1, n + 1):
        if k == 1 or (k - 1) not in tau.indices:
            row = 1
        else:
            row = prev_row + 1
            while row <= len(rows) and len(rows[row - 1]) >= len(rows[row - 2]):
                row += 1
        if row > len(rows):
            rows.append([])
        rows[row - 1].append(k)
        prev_row = row
    return StandardTableau(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class Chain:
    """Maximal run of consecutive box labels linked through tau.

    Labels lo..hi with alpha_m in tau for lo <= m < hi; in the Richardson
    tableau the run occupies one box per row, rows 1..(hi-lo+1), so the
    chain lengths read off the column lengths.
    """

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"bad chain bounds [{self.lo}, {self.hi}]")

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def members(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self) -> str:
        return "{" + ",".join(str(m) for m in self.members()) + "}"


def chains(t_r: StandardTableau) -> list[Chain]:
    """Split 1..n into chains at every m with alpha_m outside tau.

    Only defined for Richardson tableaux; anything else raises NotRichardson.
    """
    tau = tau_invariant(t_r)
    if richardson_tableau(tau, t_r.n) != t_r:
        raise NotRichardson("chains are defined on Richardson tableaux only")
    out: list[Chain] = []
    lo = 1
    for m in range(1, t_r.n):
        if m not in tau.indices:
            out.append(Chain(lo, m))
            lo = m + 1
    out.append(Chain(lo, t_r.n))
    return out
