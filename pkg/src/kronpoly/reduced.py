"""Reduced Kronecker coefficients.

Two independent routes:

* a lattice-point count: the number of ways to write a target weight as a
  nonnegative integer combination of the normal weights of an additive
  tableau (a vector partition function);
* empirical stabilization of ``g(alpha + k lam, beta + k a(lam), gamma + k b(lam))``
  through the Kronecker oracle.

For strict data on an additive rectangular tableau the two must agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .embedding import (
    AdditiveCertificate,
    WeightMultiset,
    WeightVector,
    image_partitions,
    is_additive,
    normal_weights,
)
from .errors import InputError, NotAdditiveError, SizeLimitError
from .kronecker import kron
from .partitions import Partition, Tableau, add_partitions, is_strict

__all__ = [
    "PolytopeSpec",
    "StabilizationReport",
    "NOT_REACHED",
    "lattice_point_count",
    "polytope_spec",
    "reduced_kron_polytope",
    "reduced_kron_stabilized",
    "murnaghan_reduced",
    "murnaghan_limit",
]

NOT_REACHED = "not reached"


@dataclass(frozen=True)
class PolytopeSpec:
    """Nonnegative integer points ``t`` with ``sum t_i w_i = target``.

    ``weights`` is the expanded sequence (one entry per copy).  ``grading``
    is an integer functional positive on every weight, which bounds every
    ``t_i`` by ``grade(target)``.
    """

    weights: tuple[WeightVector, ...]
    target: WeightVector
    grading: AdditiveCertificate

    def grade(self, w: WeightVector) -> int:
        return w.pair(self.grading.x, self.grading.y)

    def validate(self) -> None:
        for w in self.weights:
            if self.grade(w) <= 0:
                raise NotAdditiveError(f"grading is not positive on {w.as_json()}")


def lattice_point_count(spec: PolytopeSpec) -> int:
    """Exact number of integer points of the polytope described by ``spec``.

    Depth-first over the distinct weights in a fixed order, choosing the
    multiplicity of each in turn; memoized on (remaining target, index).
    Copies of the same weight are counted as distinct coordinates.
    """
    spec.validate()
    # group copies: a weight of multiplicity m contributes C(s + m - 1, m - 1)
    # ways of splitting s among its copies
    grouped: dict[tuple[int, ...], int] = {}
    for w in spec.weights:
        key = w.coords()
        grouped[key] = grouped.get(key, 0) + 1
    items = sorted(grouped.items())
    vecs = [k for k, _ in items]
    mults = [m for _, m in items]
    gx = tuple(spec.grading.x) + tuple(spec.grading.y)
    grades = [sum(p * q for p, q in zip(v, gx)) for v in vecs]
    n = len(vecs)
    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def count(target: tuple[int, ...], idx: int) -> int:
        budget = sum(p * q for p, q in zip(target, gx))
        if budget < 0:
            return 0
        if idx == n:
            return int(not any(target))
        if budget == 0:
            # positive grading: only the empty combination remains
            return int(not any(target))
        key = (target, idx)
        hit = memo.get(key)
        if hit is not None:
            return hit
        vec, g, m = vecs[idx], grades[idx], mults[idx]
        total = 0
        cur = target
        for s in range(budget // g + 1):
            sub = count(cur, idx + 1)
            if sub:
                total += _multichoose(s, m) * sub
            cur = tuple(c - v for c, v in zip(cur, vec))
        memo[key] = total
        return total

    return count(spec.target.coords(), 0)


def _multichoose(s: int, m: int) -> int:
    """Ways to split ``s`` among ``m`` ordered nonnegative slots."""
    return comb(s + m - 1, m - 1) if m else int(s == 0)


def polytope_spec(T: Tableau, target: WeightVector) -> PolytopeSpec:
    cert = is_additive(T)
    if cert is None:
        raise NotAdditiveError(f"{T} is not additive")
    W: WeightMultiset = normal_weights(T)
    return PolytopeSpec(tuple(W.expanded()), target, cert)


def reduced_kron_polytope(T: Tableau, lam: Sequence[int], alpha: Sequence[int],
                          beta: Sequence[int], gamma: Sequence[int]) -> int:
    """Reduced coefficient ``g_{T,lam}(alpha, beta, gamma)`` as a lattice-point count.

    ``lam`` only has to be strict; the count depends on ``T`` and the target
    ``(beta - a_T(alpha), gamma - b_T(alpha))``.
    """
    if not T.is_rectangular:
        raise InputError("reduced coefficients need a rectangular tableau")
    a, b = T.rows, T.cols
    ab = a * b
    lam, alpha, beta, gamma = (Partition(p) for p in (lam, alpha, beta, gamma))
    if not is_strict(lam, ab):
        raise InputError(f"lambda={tuple(lam)} is not strict of length {ab} or {ab - 1}")
    if not is_strict(alpha, ab):
        raise InputError(f"alpha={tuple(alpha)} is not strict of length {ab} or {ab - 1}")
    if len(beta) > a or len(gamma) > b:
        raise InputError(f"beta needs at most {a} rows and gamma at most {b}")
    if not (alpha.size == beta.size == gamma.size):
        raise InputError("alpha, beta, gamma must have the same size")
    a_al, b_al = image_partitions(T, alpha)
    u = tuple(p - q for p, q in zip(beta.pad(a), a_al.pad(a)))
    v = tuple(p - q for p, q in zip(gamma.pad(b), b_al.pad(b)))
    return lattice_point_count(polytope_spec(T, WeightVector(u, v)))


# -- stabilization -------------------------------------------------------------


@dataclass
class StabilizationReport:
    values: list[int] = field(default_factory=list)
    plateau_value: int | str = NOT_REACHED
    k_plateau: int | None = None

    @property
    def reached(self) -> bool:
        return self.k_plateau is not None

    def as_json(self) -> dict:
        return {
            "values": [str(v) for v in self.values],
            "plateau": str(self.plateau_value),
            "k_plateau": self.k_plateau,
        }


def _stabilize(seq, k_max: int, window: int) -> StabilizationReport:
    """Drive ``seq(k)`` for k = 0..k_max until ``window`` equal values in a row."""
    if window < 1:
        raise InputError("window must be positive")
    rep = StabilizationReport()
    for k in range(k_max + 1):
        try:
            val = seq(k)
        except SizeLimitError:
            break
        if rep.values and val < rep.values[-1]:
            raise AssertionError(f"sequence decreased at k={k}: {rep.values + [val]}")
        rep.values.append(val)
        tail = rep.values[-window:]
        if len(tail) == window and len(set(tail)) == 1:
            rep.plateau_value = val
            rep.k_plateau = k - window + 1
            while rep.k_plateau > 0 and rep.values[rep.k_plateau - 1] == val:
                rep.k_plateau -= 1
            break
    return rep


def reduced_kron_stabilized(lam: Sequence[int], a_lam: Sequence[int], b_lam: Sequence[int],
                            alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int],
                            k_max: int = 12, window: int = 3) -> StabilizationReport:
    """Values of ``g(alpha + k lam, beta + k a_lam, gamma + k b_lam)`` until they settle."""
    lam, a_lam, b_lam = (Partition(p) for p in (lam, a_lam, b_lam))
    alpha, beta, gamma = (Partition(p) for p in (alpha, beta, gamma))
    if not (lam.size == a_lam.size == b_lam.size):
        raise InputError("the stable direction must have a common size")
    if not (alpha.size == beta.size == gamma.size):
        raise InputError("alpha, beta, gamma must have the same size")

    def seq(k: int) -> int:
        return kron(add_partitions(alpha, lam * k), add_partitions(beta, a_lam * k),
                    add_partitions(gamma, b_lam * k))

    return _stabilize(seq, k_max, window)


def murnaghan_reduced(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int],
                      k_max: int = 12, window: int = 3) -> StabilizationReport:
    """Murnaghan's reduced coefficient of ``(alpha, beta, gamma)``.

    The arguments are the partitions with their first rows removed: the
    sequence is ``g((N - |alpha|, alpha), (N - |beta|, beta), (N - |gamma|, gamma))``
    for ``N = N_0 + k``, where ``N_0`` is the least size for which all three
    are partitions.
    """
    parts = [Partition(p) for p in (alpha, beta, gamma)]
    n0 = max(p.size + (p[0] if p else 0) for p in parts)

    def seq(k: int) -> int:
        n = n0 + k
        return kron(*(Partition((n - p.size,) + tuple(p)) for p in parts))

    return _stabilize(seq, k_max, window)


def murnaghan_limit(alpha, beta, gamma, k_max: int = 12, window: int = 3) -> int | str:
    """Plateau value of :func:`murnaghan_reduced`, or ``"not reached"``."""
    return murnaghan_reduced(alpha, beta, gamma, k_max, window).plateau_value

