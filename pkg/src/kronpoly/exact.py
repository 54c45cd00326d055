"""Exact rational linear algebra for the small systems met in this package.

* Fourier-Motzkin elimination with back substitution (feasibility of
  ``A z >= b`` together with a witness),
* a dense exact simplex (phase one only) as an independent feasibility route,
* the double description method for the extreme rays of ``{z : G z >= 0}``.

Dimensions here stay below ten, so nothing is tuned for speed.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "rank",
    "primitive",
    "fm_feasible",
    "simplex_feasible",
    "extreme_rays",
]

Vector = Sequence[int | Fraction]


def rank(rows: Iterable[Vector]) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col] / mat[r][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def primitive(vec: Vector) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers (same direction)."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


# -- Fourier-Motzkin -----------------------------------------------------------


def _normalize(coeffs: list[Fraction], rhs: Fraction) -> tuple[tuple[Fraction, ...], Fraction]:
    scale = max((abs(c) for c in coeffs), default=Fraction(0))
    if scale == 0:
        return tuple(coeffs), rhs
    return tuple(c / scale for c in coeffs), rhs / scale


def fm_feasible(A: Sequence[Vector], b: Sequence[int | Fraction]) -> list[Fraction] | None:
    """A rational ``z`` with ``A z >= b`` componentwise, or None if infeasible.

    Variables are eliminated last to first; each variable is then set, first
    to last, to its lower bound when it has one.
    """
    if not A:
        return []
    d = len(A[0])
    system = {_normalize([Fraction(x) for x in row], Fraction(r)) for row, r in zip(A, b)}
    stages = [system]
    for k in range(d - 1, -1, -1):
        pos, neg, rest = [], [], set()
        for coeffs, rhs in system:
            c = coeffs[k]
            if c > 0:
                pos.append((coeffs, rhs))
            elif c < 0:
                neg.append((coeffs, rhs))
            else:
                rest.add((coeffs, rhs))
        for cp, rp in pos:
            for cn, rn in neg:
                fp, fn = -cn[k], cp[k]
                coeffs = [fp * x + fn * y for x, y in zip(cp, cn)]
                coeffs[k] = Fraction(0)
                rest.add(_normalize(coeffs, fp * rp + fn * rn))
        system = rest
        stages.append(system)
    # no variables left: every constraint reads 0 >= rhs
    if any(rhs > 0 for _, rhs in stages[-1]):
        return None
    z = [Fraction(0)] * d
    for k in range(d):
        lo = hi = None
        # stage with variables 0..k still present
        for coeffs, rhs in stages[d - 1 - k]:
            c = coeffs[k]
            if c == 0:
                continue
            slack = rhs - sum(coeffs[i] * z[i] for i in range(k))
            bound = slack / c
            if c > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return None  # cannot happen for a consistent elimination
        z[k] = lo if lo is not None else (hi if hi is not None else Fraction(0))
    return z


# -- simplex ---------------------------------------------------------------------


def simplex_feasible(A: Sequence[Vector], b: Sequence[int | Fraction]) -> list[Fraction] | None:
    """Phase-one simplex (Bland's rule) for ``A z >= b`` with ``z`` free.

    Integer-preserving pivoting: the tableau holds integers over one common
    positive denominator, and each pivot divides exactly by the previous one.
    """
    m = len(A)
    if m == 0:
        return []
    d = len(A[0])
    # clear denominators row by row so the start tableau is integral
    rows: list[list[int]] = []
    for row, r in zip(A, b):
        fr = [Fraction(x) for x in row] + [Fraction(r)]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in fr])
    # columns: z+ (d), z- (d), surplus (m), artificial (m), rhs
    ncols = 2 * d + 2 * m
    tab: list[list[int]] = []
    for i, row in enumerate(rows):
        coeffs, r = row[:-1], row[-1]
        line = coeffs + [-x for x in coeffs] + [0] * (2 * m) + [r]
        line[2 * d + i] = -1
        if r < 0:
            line = [-x for x in line]
        line[2 * d + m + i] = 1
        tab.append(line)
    basis = [2 * d + m + i for i in range(m)]
    art = set(basis)
    # phase-one objective (sum of artificials) as reduced costs
    cost = [sum(line[j] for line in tab) for j in range(ncols + 1)]
    for j in art:
        cost[j] = 0
    denom = 1
    while True:
        enter = next((j for j in range(ncols) if j not in art and cost[j] > 0), None)
        if enter is None:
            break
        best = None
        for i, line in enumerate(tab):
            if line[enter] > 0:
                ratio = Fraction(line[-1], line[enter])
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded direction; phase one objective is bounded so skip
            cost[enter] = 0
            continue
        _, r = best
        prow = tab[r]
        piv = prow[enter]
        for i in range(m):
            if i != r:
                f = tab[i][enter]
                tab[i] = [(piv * x - f * y) // denom for x, y in zip(tab[i], prow)]
        f = cost[enter]
        cost = [(piv * x - f * y) // denom for x, y in zip(cost, prow)]
        denom = piv
        basis[r] = enter
    if cost[-1] != 0:
        return None
    values = [Fraction(0)] * ncols
    for i, j in enumerate(basis):
        values[j] = Fraction(tab[i][-1], denom)
    return [values[k] - values[d + k] for k in range(d)]


# -- double description --------------------------------------------------------


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def _solve_square(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(mat)
    aug = [row[:] + [r] for row, r in zip(mat, rhs)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def extreme_rays(constraints: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{z : <g, z> >= 0 for all g}``.

    ``constraints`` must span the ambient space (otherwise the cone has a
    lineality space and ``ValueError`` is raised).  Rays come back as
    primitive integer vectors, sorted.
    """
    gens = sorted({primitive(g) for g in constraints if any(g)})
    if not gens:
        raise ValueError("no nonzero constraints")
    d = len(gens[0])
    # pick d independent constraints greedily
    basis: list[tuple[int, ...]] = []
    for g in gens:
        if rank(basis + [g]) > len(basis):
            basis.append(g)
        if len(basis) == d:
            break
    if len(basis) < d:
        raise ValueError("constraints do not span the space")
    # initial simplicial cone: rays are the columns of basis^{-1}
    mat = [[Fraction(x) for x in row] for row in basis]
    rays: list[tuple[int, ...]] = []
    for k in range(d):
        e = [Fraction(int(i == k)) for i in range(d)]
        rays.append(primitive(_solve_square(mat, e)))
    processed = list(basis)
    for g in gens:
        if g in basis:
            continue
        vals = [_dot(g, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [r for r, v in zip(rays, vals) if v < 0]
        zero = [r for r, v in zip(rays, vals) if v == 0]
        if not neg:
            processed.append(g)
            continue
        zsets = {r: frozenset(i for i, h in enumerate(processed) if _dot(h, r) == 0) for r in rays}
        new = pos + zero
        for p in pos:
            for q in neg:
                common = zsets[p] & zsets[q]
                if len(common) < d - 2:
                    continue
                if any(r != p and r != q and common <= zsets[r] for r in rays):
                    continue
                gp, gq = _dot(g, p), _dot(g, q)
                new.append(primitive([gp * y - gq * x for x, y in zip(p, q)]))
        rays = sorted(set(new))
        processed.append(g)
    return sorted(rays)
