"""Facets of Kronecker cones through the minimal faces of additive tableaux.

Around the face of an additive tableau ``S`` the Kronecker cone looks like
the cone spanned by ``normal_weights(S)``.  Its facet normals, read as
sequences ``(x, y)`` with ``x_1 = y_1 = 0``, are the maximal relaxations of
``S``, and each gives a linear inequality on triples ``(alpha, beta, gamma)``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .embedding import (
    WeightMultiset,
    _comparable,
    _less,
    image_partitions,
    is_additive,
    normal_weights,
)
from .errors import InputError, NotAdditiveError
from .exact import extreme_rays, fm_feasible, rank
from .kronecker import KronTriple
from .partitions import Partition, Tableau, enumerate_syt, shapes_in_rectangle

log = logging.getLogger(__name__)

__all__ = [
    "Relaxation",
    "FacetInequality",
    "cone_facets",
    "maximal_relaxations",
    "is_relaxation_of",
    "compatible_tableaux",
    "facet_inequality",
    "facet_catalog",
    "PKRON_333",
    "pkron_333_inequalities",
    "verify_facets",
]


def cone_facets(W: WeightMultiset) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Primitive facet normals ``(x, y)`` of ``cone(W)`` with ``x_1 = y_1 = 0``.

    Works in the rank ``a + b - 2`` zero-sum lattice.  A support of lower rank
    has no well defined facets and yields the empty list.
    """
    a, b = W.a, W.b
    d = a + b - 2
    support = [w.reduced() for w in W.support()]
    if d < 2 or not support or rank(support) < d:
        return []
    if fm_feasible(support, [1] * len(support)) is None:
        raise NotAdditiveError("no local face structure: the weight cone contains a line")
    out = []
    for ray in extreme_rays(support):
        x = (0,) + ray[: a - 1]
        y = (0,) + ray[a - 1:]
        out.append((x, y))
    return sorted(out)


@dataclass(frozen=True, order=True)
class Relaxation:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        if not self.x or not self.y or self.x[0] != 0 or self.y[0] != 0:
            raise InputError("relaxation sequences must start with 0")

    @property
    def a(self) -> int:
        return len(self.x)

    @property
    def b(self) -> int:
        return len(self.y)

    def level(self, box: tuple[int, int]) -> int:
        return self.x[box[0]] + self.y[box[1]]

    @property
    def level_grid(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(xi + yj for yj in self.y) for xi in self.x)

    @property
    def is_monotone(self) -> bool:
        return all(p <= q for p, q in zip(self.x, self.x[1:])) and all(
            p <= q for p, q in zip(self.y, self.y[1:]))

    def levels_text(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.level_grid)

    @classmethod
    def from_levels(cls, text: str) -> "Relaxation":
        """Parse a level grid ``"0,1,2;1,2,3;3,4,5"`` (must be of the form x_i + y_j)."""
        grid = [[int(v) for v in r.split(",")] for r in text.strip().split(";")]
        x = tuple(r[0] - grid[0][0] for r in grid)
        y = tuple(grid[0])
        rel = cls(x, y)
        if [list(r) for r in rel.level_grid] != grid:
            raise InputError(f"{text!r} is not a grid of sums x_i + y_j with x_1 = y_1 = 0")
        return rel

    def as_json(self) -> dict:
        return {"x": list(self.x), "y": list(self.y), "levels": self.levels_text()}


def is_relaxation_of(R: Relaxation, S: Tableau) -> bool:
    """Levels weakly increase along the order of ``S`` (outside boxes last)."""
    if R.a != S.rows or R.b != S.cols:
        return False
    boxes = list(S.rectangle())
    for idx, p in enumerate(boxes):
        for q in boxes[idx + 1:]:
            if not _comparable(S, p, q):
                continue
            lo, hi = (p, q) if _less(S, p, q) else (q, p)
            if R.level(lo) > R.level(hi):
                return False
    return True


def maximal_relaxations(T: Tableau) -> list[Relaxation]:
    """One relaxation per facet of ``cone(normal_weights(T))``.

    For rectangular tableaux every facet normal is monotone and a relaxation
    of ``T``.  Small partial tableaux can lose a pure weight from the normal
    data (multiplicity drops to zero); their cones then have facet normals
    that are not monotone.  Those are kept, since they are facets all the
    same, and reported through the log and ``Relaxation.is_monotone``.
    """
    return list(_maximal_relaxations(T))


@lru_cache(maxsize=4096)
def _maximal_relaxations(T: Tableau) -> tuple[Relaxation, ...]:
    if is_additive(T) is None:
        raise NotAdditiveError(f"{T} is not additive")
    out = []
    for x, y in cone_facets(normal_weights(T)):
        rel = Relaxation(x, y)
        if not rel.is_monotone:
            log.info("facet normal of %s is not monotone: x=%s y=%s", T, x, y)
        out.append(rel)
    return tuple(out)


def supports_weights(R: Relaxation, S: Tableau) -> bool:
    """``R`` is nonnegative on every weight of ``normal_weights(S)``.

    Same as :func:`is_relaxation_of` for rectangular ``S``; weaker for partial
    ``S`` where some box pairs carry no normal weight.
    """
    if R.a != S.rows or R.b != S.cols:
        return False
    return all(w.pair(R.x, R.y) >= 0 for w in normal_weights(S).support())


def compatible_tableaux(R: Relaxation, a: int, b: int, c: int) -> list[Tableau]:
    """Standard tableaux of size ``c`` in ``a x b`` of which ``R`` is a relaxation."""
    if R.a != a or R.b != b:
        raise InputError("relaxation does not match the rectangle")
    return [t for t in enumerate_syt(a, b, c) if is_relaxation_of(R, t)]


@dataclass(frozen=True, order=True)
class FacetInequality:
    """``sum x_i beta_i + sum y_j gamma_j >= sum_v alpha_coeffs[v-1] alpha_v``."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    alpha_coeffs: tuple[int, ...]

    def lhs(self, beta: Sequence[int], gamma: Sequence[int]) -> int:
        beta = Partition(beta).pad(len(self.x))
        gamma = Partition(gamma).pad(len(self.y))
        return sum(p * q for p, q in zip(self.x, beta)) + sum(p * q for p, q in zip(self.y, gamma))

    def rhs(self, alpha: Sequence[int]) -> int:
        alpha = Partition(alpha).pad(len(self.alpha_coeffs))
        return sum(p * q for p, q in zip(self.alpha_coeffs, alpha))

    def slack(self, alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> int:
        return self.lhs(beta, gamma) - self.rhs(alpha)

    def holds(self, alpha, beta, gamma) -> bool:
        return self.slack(alpha, beta, gamma) >= 0

    def applies_to(self, alpha, beta, gamma) -> bool:
        """Whether the lengths fit the format ``(c, a, b)`` of the inequality."""
        return (len(Partition(alpha)) <= len(self.alpha_coeffs)
                and len(Partition(beta)) <= len(self.x)
                and len(Partition(gamma)) <= len(self.y))

    def as_json(self) -> dict:
        return {"x": list(self.x), "y": list(self.y), "alpha": list(self.alpha_coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "FacetInequality":
        return cls(*(tuple(int(v) for v in data[k]) for k in ("x", "y", "alpha")))


def facet_inequality(R: Relaxation, T: Tableau) -> FacetInequality:
    """Inequality of the facet ``R`` through the face of ``T``.

    The coefficient of ``alpha_v`` is the level of the box holding ``v``.
    """
    if not (is_relaxation_of(R, T) or supports_weights(R, T)):
        raise InputError(f"{R.levels_text()} is not a relaxation of {T}")
    coeffs = tuple(R.level(T.position(v)) for v in range(1, T.size + 1))
    return FacetInequality(R.x, R.y, coeffs)


def facet_catalog(a: int, b: int, c: int) -> list[FacetInequality]:
    """Deduplicated inequalities from every additive tableau of format ``(a, b, c)``."""
    if not shapes_in_rectangle(a, b, c):
        raise InputError(f"no shape of size {c} fits exactly in {a}x{b}")
    found: set[FacetInequality] = set()
    for S in enumerate_syt(a, b, c):
        if is_additive(S) is None:
            continue
        for R in maximal_relaxations(S):
            found.add(facet_inequality(R, S))
    return sorted(found)


def check_tightness(ineq: FacetInequality, S: Tableau, lam: Sequence[int]) -> bool:
    """Equality on the stable ray ``(lam, a_S(lam), b_S(lam))``."""
    beta, gamma = image_partitions(S, lam)
    return ineq.slack(lam, beta, gamma) == 0


# -- the known PKron_{3,3,3} description --------------------------------------------

# (coeffs on lam, coeffs on mu, coeffs on nu): lam-side <= mu-side + nu-side
PKRON_333: tuple[tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]], ...] = (
    ((1, 1, 0), (1, 1, 0), (1, 1, 0)),
    ((1, 0, 1), (1, 1, 0), (1, 0, 1)),
    ((0, 1, 1), (1, 1, 0), (0, 1, 1)),
    ((1, 2, 0), (1, 2, 0), (1, 2, 0)),
    ((2, 1, 0), (1, 2, 0), (2, 1, 0)),
    ((0, 2, 1), (1, 2, 0), (0, 2, 1)),
    ((0, 2, 1), (2, 1, 0), (0, 1, 2)),
)


def pkron_333_inequalities():
    """All 7 x 6 inequalities, as functions ``(lam, mu, nu) -> slack``."""
    out = []
    for idx, (cl, cm, cn) in enumerate(PKRON_333, start=1):
        for perm in permutations(range(3)):
            def slack(*triple, cl=cl, cm=cm, cn=cn, perm=perm):
                lam, mu, nu = (Partition(triple[k]).pad(3) for k in perm)
                left = sum(c * v for c, v in zip(cl, lam))
                right = sum(c * v for c, v in zip(cm, mu)) + sum(c * v for c, v in zip(cn, nu))
                return right - left
            out.append(((idx, perm), slack))
    return out


@dataclass
class FacetReport:
    checked: int = 0
    valid: int = 0
    tight: int = 0
    violations: list = None

    def as_json(self) -> dict:
        return {"checked": self.checked, "valid": self.valid, "tight": self.tight,
                "violations": self.violations or []}


def verify_facets(facets: Iterable[FacetInequality], scan: Iterable[KronTriple],
                  max_violations: int = 20) -> FacetReport:
    """Evaluate every inequality on every triple of a scan that fits its format."""
    rep = FacetReport(violations=[])
    scan = list(scan)
    for ineq in facets:
        for t in scan:
            if not ineq.applies_to(t.lam, t.mu, t.nu):
                continue
            rep.checked += 1
            s = ineq.slack(t.lam, t.mu, t.nu)
            if s >= 0:
                rep.valid += 1
                if s == 0:
                    rep.tight += 1
            elif len(rep.violations) < max_violations:
                rep.violations.append({"inequality": ineq.as_json(), "triple": t.as_json()})
    return rep
