"""Finite-field sampling probes for the conjectured defining equation.

Symbolic identities are cheap to claim and expensive to trust. This module
samples actual matrices over large prime fields and checks three things
per descriptor: the candidate equation f vanishes on points of the
component (necessity), f is not the zero function on the ambient linear
span (non-degeneracy), and points of the hypersurface f = 0 inside the
span look like the component (matching Jordan type and window rank
bounds, a sufficiency surrogate).

Points of the component come from the Robinson-Schensted word: with
B(w) = T the span of positions (a, b) with w(a) < w(b) meets the
component densely, and conjugating a random such point by a random
invertible upper triangular matrix lands in general position.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    ClassificationError,
    DegenerateSample,
    NotApplicable,
    NotHomogeneousWeight,
    NotNilpotent,
)
from .generator import generator_report, generic_richardson_matrix
from .hypersurface import HypersurfaceDescriptor, classify_hypersurface
from .polyalg import PolyMatrix, _var_key, determinant, poly_eval, weight_of
from .projections import project, projected_shape
from .rs import find_word_for_tableau
from .tableaux import Partition, StandardTableau, chains, dual_partition

DEFAULT_PRIME = 2147483647  # 2^31 - 1
SECOND_PRIME = 2147483629  # largest prime below it


@dataclass(frozen=True)
class FieldMatrix:
    """Square matrix over GF(prime), or exact rationals when prime is None."""

    rows: tuple[tuple[int, ...], ...]
    prime: int | None = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if self.prime is None:
            rows = tuple(tuple(row) for row in self.rows)
        else:
            rows = tuple(
                tuple(int(e) % self.prime for e in row) for row in self.rows
            )
        object.__setattr__(self, "rows", rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """1-indexed access."""
        return self.rows[i - 1][j - 1]

    def submatrix(self, i: int, j: int) -> "FieldMatrix":
        """Principal corner on rows and columns i..j, 1-indexed."""
        return FieldMatrix(
            tuple(tuple(row[i - 1 : j]) for row in self.rows[i - 1 : j]),
            self.prime,
        )

    def is_strictly_upper(self) -> bool:
        return all(
            not self.rows[r][c]
            for r in range(self.n)
            for c in range(0, min(r + 1, self.n))
        )


# -- modular linear algebra on plain lists (hot path) ---------------------------


def _mat_mul(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    n = len(a)
    out = []
    for i in range(n):
        ai = a[i]
        acc = [0] * n
        for k in range(n):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(n):
                    acc[j] += v * bk[j]
        out.append([val % p for val in acc])
    return out


def _rank_mod(rows: list[list[int]], p: int) -> int:
    mat = [row[:] for row in rows]
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if mat[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        prow = [v * inv % p for v in mat[rank]]
        mat[rank] = prow
        for r in range(rank + 1, nr):
            f = mat[r][col] % p
            if f:
                row = mat[r]
                for c in range(col, nc):
                    row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        if rank == nr:
            break
    return rank


def _rank_exact(rows: list[list]) -> int:
    from fractions import Fraction

    mat = [[Fraction(v) for v in row] for row in rows]
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(rank + 1, nr):
            f = mat[r][col]
            if f:
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def _upper_inverse(b: list[list[int]], p: int) -> list[list[int]]:
    """Inverse of an invertible upper triangular matrix mod p."""
    n = len(b)
    inv = [[0] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        inv[i][i] = pow(b[i][i], -1, p)
        for j in range(i + 1, n):
            s = 0
            for k in range(i + 1, j + 1):
                s += b[i][k] * inv[k][j]
            inv[i][j] = -inv[i][i] * s % p
    return inv


def matrix_rank(m: FieldMatrix) -> int:
    rows = [list(r) for r in m.rows]
    return _rank_mod(rows, m.prime) if m.prime else _rank_exact(rows)


# -- rank bounds and Jordan type -------------------------------------------------


def rank_bound(lam: Partition, k: int) -> int:
    """Boxes beyond column k: the rank ceiling for the k-th power of any
    matrix whose restriction has Jordan type at most lam."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    return sum(p - k for p in lam.parts if p > k)


def jordan_type(x: FieldMatrix) -> Partition:
    """Partition of the nilpotent x: dual parts are the kernel-dimension
    increments of successive powers. Raises NotNilpotent if the rank
    sequence bottoms out above zero."""
    n = x.n
    if n == 0:
        return Partition(())
    cur = [list(r) for r in x.rows]
    p = x.prime
    ranks = [n, _rank_mod(cur, p) if p else _rank_exact(cur)]
    while ranks[-1] > 0:
        if len(ranks) > n or ranks[-1] == ranks[-2]:
            raise NotNilpotent(f"rank sequence stabilised at {ranks[-1]}")
        if p:
            cur = _mat_mul(cur, [list(r) for r in x.rows], p)
            ranks.append(_rank_mod(cur, p))
        else:
            cur = [
                [sum(a * b for a, b in zip(row, col)) for col in zip(*x.rows)]
                for row in cur
            ]
            ranks.append(_rank_exact(cur))
    cols = tuple(ranks[k - 1] - ranks[k] for k in range(1, len(ranks)))
    return dual_partition(Partition(cols))


class Violation(NamedTuple):
    i: int
    j: int
    k: int
    rank: int
    bound: int


def check_power_rank(x: FieldMatrix, t: StandardTableau) -> list[Violation]:
    """Every window power-rank inequality for x against the tableau t.

    For each corner [i, j] and power k, the rank of the corner's k-th
    power may not exceed the bound from the shape of t projected to
    [i, j]. Returns all violations (empty list = consistent with t).
    """
    if not x.is_strictly_upper():
        raise NotApplicable("power-rank checks need a strictly upper matrix")
    n = x.n
    if n != t.n:
        raise NotApplicable(f"matrix size {n} vs tableau size {t.n}")
    p = x.prime
    out: list[Violation] = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            sub = [list(row[i - 1 : j]) for row in x.rows[i - 1 : j]]
            lam = projected_shape(t, i, j)
            cur = sub
            for k in range(1, j - i + 2):
                r = _rank_mod(cur, p) if p else _rank_exact(cur)
                if r == 0:
                    break
                bound = rank_bound(lam, k)
                if r > bound:
                    out.append(Violation(i, j, k, r, bound))
                if p:
                    cur = _mat_mul(cur, sub, p)
                else:
                    cur = [
                        [sum(a * b for a, b in zip(row, col)) for col in zip(*sub)]
                        for row in cur
                    ]
    return out


# -- samplers --------------------------------------------------------------------


def sample_variety_point(
    t: StandardTableau, seed, prime: int = DEFAULT_PRIME
) -> FieldMatrix:
    """Random point of the orbital variety labelled by t, over GF(prime).

    Takes the lexicographically smallest word w with recording tableau t,
    fills the positions (a, b) with w(a) < w(b) uniformly, and conjugates
    by a random invertible upper triangular matrix. The result is strictly
    upper triangular with Jordan type at most shape(t), equal generically.
    """
    w = find_word_for_tableau(t)
    n = t.n
    rng = random.Random(f"variety:{seed}:{prime}")
    u = [[0] * n for _ in range(n)]
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            if w(a) < w(b):
                u[a - 1][b - 1] = rng.randrange(prime)
    bmat = [[0] * n for _ in range(n)]
    for i in range(n):
        bmat[i][i] = rng.randrange(1, prime)
        for j in range(i + 1, n):
            bmat[i][j] = rng.randrange(prime)
    x = _mat_mul(_mat_mul(bmat, u, prime), _upper_inverse(bmat, prime), prime)
    return FieldMatrix(tuple(tuple(r) for r in x), prime)


def _free_positions(d: HypersurfaceDescriptor) -> list[tuple[int, int]]:
    tau = d.tau
    n = d.n
    return [
        (a, b)
        for a in range(1, n)
        for b in range(a + 1, n + 1)
        if not tau.contains_root(a, b - 1)
    ]


def sample_hypersurface_point(
    d: HypersurfaceDescriptor, seed, prime: int = DEFAULT_PRIME
) -> FieldMatrix:
    """Random point of {f = 0} inside the linear span m_tau.

    Draws the free coordinates uniformly, then solves f = 0 for one
    variable: f is multilinear, so any variable whose linear coefficient
    is nonzero at the draw can absorb the constraint. Draws where every
    coefficient degenerates are rejected; fifty straight rejections raise
    DegenerateSample.
    """
    f = generator_report(d).f
    free = _free_positions(d)
    fvars = f.variables()
    rng = random.Random(f"hyper:{seed}:{prime}")
    for _ in range(50):
        vals = {pos: rng.randrange(prime) for pos in free}
        solved = False
        for var in fvars:
            g = h = 0
            for mono, c in f.terms.items():
                coeff = c % prime
                hit = False
                for v, e in mono:
                    if v == var:
                        assert e == 1, "window determinants are multilinear"
                        hit = True
                    else:
                        coeff = coeff * pow(vals[v], e, prime) % prime
                if hit:
                    g = (g + coeff) % prime
                else:
                    h = (h + coeff) % prime
            if g:
                vals[var] = -h * pow(g, -1, prime) % prime
                solved = True
                break
        if solved:
            n = d.n
            rows = [[0] * n for _ in range(n)]
            for (a, b), v in vals.items():
                rows[a - 1][b - 1] = v
            return FieldMatrix(tuple(tuple(r) for r in rows), prime)
    raise DegenerateSample(
        f"no solvable coordinate for {d.descriptor_id} after 50 draws"
    )


# -- the conjecture probes ---------------------------------------------------------


class Failure(NamedTuple):
    probe: str
    trial: int
    prime: int
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    descriptor_id: str
    trials: int
    primes: tuple[int, ...]
    f_vanishes_on_v: int
    f_nonzero_on_richardson: int
    jordan_match: int
    power_rank_ok: int
    failures: tuple[Failure, ...]

    @property
    def necessity_ok(self) -> bool:
        """The deterministic part: f and the linear conditions vanished on
        every sampled variety point, under every prime."""
        return self.f_vanishes_on_v == self.trials

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor_id,
            "trials": self.trials,
            "primes": list(self.primes),
            "f_vanishes_on_v": self.f_vanishes_on_v,
            "f_nonzero_on_richardson": self.f_nonzero_on_richardson,
            "jordan_match": self.jordan_match,
            "power_rank_ok": self.power_rank_ok,
            "failures": [f._asdict() for f in self.failures],
        }


def verify_conjecture(
    d: HypersurfaceDescriptor,
    trials: int,
    seed=0,
    primes: tuple[int, ...] = (DEFAULT_PRIME, SECOND_PRIME),
) -> VerificationReport:
    """Run the three probes for `trials` independent seeds.

    A trial counts toward a probe only if the probe holds under every
    prime, so coincidences modulo a single prime cannot inflate the
    numbers. Necessity (probe one) is expected to hold on every trial;
    the two generic probes are expected to hold on the vast majority.
    """
    report = generator_report(d)
    f = report.f
    fvars = f.variables()
    tau = d.tau
    zero_positions = [(u, v + 1) for u, v in tau.positive_roots()]
    free = _free_positions(d)
    shape = d.tableau.shape
    failures: list[Failure] = []
    ok_counts = {"vanish": 0, "nonzero": 0, "jordan": 0, "rank": 0}
    for trial in range(trials):
        ok = {"vanish": True, "nonzero": True, "jordan": True, "rank": True}
        for p in primes:
            xm = sample_variety_point(d.tableau, seed=f"{seed}:{trial}", prime=p)
            assign = {v: xm.entry(v[0], v[1]) for v in fvars}
            if poly_eval(f, assign, prime=p) != 0:
                ok["vanish"] = False
                failures.append(
                    Failure("f_vanishes_on_v", trial, p, "f nonzero at variety point")
                )
            for r, c in zero_positions:
                if xm.entry(r, c):
                    ok["vanish"] = False
                    failures.append(
                        Failure(
                            "linear_conditions", trial, p, f"x{r},{c} nonzero at variety point"
                        )
                    )
                    break
            rng = random.Random(f"mtau:{seed}:{trial}:{p}")
            pt = {pos: rng.randrange(p) for pos in free}
            if poly_eval(f, {v: pt[v] for v in fvars}, prime=p) == 0:
                ok["nonzero"] = False
                failures.append(
                    Failure("f_nonzero_on_richardson", trial, p, "f vanished at generic point")
                )
            try:
                z = sample_hypersurface_point(d, seed=f"{seed}:{trial}", prime=p)
                if jordan_type(z) != shape:
                    ok["jordan"] = False
                    failures.append(
                        Failure("jordan_match", trial, p, f"jordan type {jordan_type(z)}")
                    )
                violations = check_power_rank(z, d.tableau)
                if violations:
                    ok["rank"] = False
                    failures.append(
                        Failure("power_rank", trial, p, f"{len(violations)} window violations")
                    )
            except DegenerateSample as exc:
                ok["jordan"] = ok["rank"] = False
                failures.append(Failure("degenerate_sample", trial, p, str(exc)))
        for key in ok_counts:
            ok_counts[key] += ok[key]
    return VerificationReport(
        descriptor_id=d.descriptor_id,
        trials=trials,
        primes=tuple(primes),
        f_vanishes_on_v=ok_counts["vanish"],
        f_nonzero_on_richardson=ok_counts["nonzero"],
        jordan_match=ok_counts["jordan"],
        power_rank_ok=ok_counts["rank"],
        failures=tuple(failures),
    )


# -- the power-minor comparison ------------------------------------------------------


class RemarkResult(NamedTuple):
    detm_equals_f: bool
    chain_condition: bool


def remark_minor(d: HypersurfaceDescriptor) -> tuple[PolyMatrix, int, int]:
    """Symbolic minor matching the generator on the projected problem.

    Projects the descriptor to its window (so the window spans everything),
    sets k one less than the column of the last box in the projected
    Richardson tableau, and r the rank bound of the projected shape at k.
    Returns (top-right r x r corner of x_R^k, k, r).
    """
    a, b = d.window
    dw = classify_hypersurface(project(d.tableau, a, b))
    if dw is None:
        raise ClassificationError("projection to the window lost the descriptor")
    lam = dw.richardson.shape
    k = lam.part(dw.thickness) - 1
    r = rank_bound(lam, k)
    corner = generic_richardson_matrix(dw.tau, dw.n).power(k).top_right(r)
    return corner, k, r


def remark_check(
    d: HypersurfaceDescriptor,
    evaluations: int = 20,
    seed=0,
    prime: int = DEFAULT_PRIME,
) -> RemarkResult:
    """Does det of the power minor reproduce f, and does the chain pattern
    predict it?

    Equality is decided up to one global sign: the weights and total
    degrees must agree, and the two polynomials must agree with a
    consistent sign at `evaluations` random points. The chain condition
    asks that the interior chains of the projected Richardson tableau all
    be shorter, or all longer, than the thickness.
    """
    corner, k, r = remark_minor(d)
    a, b = d.window
    dw = classify_hypersurface(project(d.tableau, a, b))
    assert dw is not None
    f = generator_report(dw).f
    det_m = determinant(corner)

    interior = chains(dw.richardson)[1:-1]
    i_thick = dw.thickness
    chain_condition = all(c.length < i_thick for c in interior) or all(
        c.length > i_thick for c in interior
    )

    equal = False
    if not det_m.is_zero and det_m.total_degree() == f.total_degree():
        try:
            same_weight = weight_of(det_m, rank=dw.n - 1) == weight_of(
                f, rank=dw.n - 1
            )
        except NotHomogeneousWeight:
            same_weight = False
        if same_weight:
            rng = random.Random(f"remark:{seed}:{prime}")
            variables = sorted(
                set(det_m.variables()) | set(f.variables()), key=_var_key
            )
            sign = 0
            equal = True
            for _ in range(evaluations):
                pt = {v: rng.randrange(prime) for v in variables}
                u = poly_eval(det_m, pt, prime=prime)
                v = poly_eval(f, pt, prime=prime)
                if v == 0:
                    if u != 0:
                        equal = False
                        break
                    continue
                ratio = u * pow(v, -1, prime) % prime
                if ratio == 1:
                    s = 1
                elif ratio == prime - 1:
                    s = -1
                else:
                    equal = False
                    break
                if sign == 0:
                    sign = s
                elif sign != s:
                    equal = False
                    break
    return RemarkResult(detm_equals_f=equal, chain_condition=chain_condition)
