"""Tableau embeddings: additivity, image partitions and normal weights.

A standard tableau ``S`` of size ``c`` fitting exactly in an ``a x b``
rectangle defines an embedding of a product of flag varieties.  Boxes of the
rectangle outside ``S`` behave as one common value larger than every entry;
this convention lives in :func:`_less` and is never stored in the tableau.

Weight vectors are pairs ``(u, v)`` in ``Z^a + Z^b`` written in the bases
``e_1..e_a`` and ``f_1..f_b``; both blocks sum to zero.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InputError
from .exact import fm_feasible, primitive, simplex_feasible
from .partitions import Partition, Tableau, conjugate

__all__ = [
    "AdditiveCertificate",
    "WeightVector",
    "WeightMultiset",
    "is_additive",
    "verify_certificate",
    "image_partitions",
    "normal_weights",
    "expected_weight_total",
    "weights_cone_pointed",
    "additive_tableau_from_partition",
]

Box = tuple[int, int]


@dataclass(frozen=True)
class AdditiveCertificate:
    """Strictly increasing integer sequences with ``x[0] == y[0] == 0``."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def level(self, box: Box) -> int:
        return self.x[box[0]] + self.y[box[1]]


@dataclass(frozen=True, order=True)
class WeightVector:
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if sum(self.u) or sum(self.v):
            raise InputError("weight blocks must sum to zero")

    def coords(self) -> tuple[int, ...]:
        return self.u + self.v

    def reduced(self) -> tuple[int, ...]:
        """Coordinates in the zero-sum lattice: drop ``u_1`` and ``v_1``."""
        return self.u[1:] + self.v[1:]

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.u, x)) + sum(a * b for a, b in zip(self.v, y))

    def as_json(self) -> dict:
        return {"u": list(self.u), "v": list(self.v)}


@dataclass(frozen=True)
class WeightMultiset:
    a: int
    b: int
    entries: tuple[tuple[WeightVector, int], ...]

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def support(self) -> list[WeightVector]:
        return [w for w, _ in self.entries]

    def expanded(self) -> list[WeightVector]:
        return [w for w, m in self.entries for _ in range(m)]

    def multiplicity(self, w: WeightVector) -> int:
        return dict(self.entries).get(w, 0)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[WeightVector, int]]:
        return iter(self.entries)


# -- comparator for partial tableaux -------------------------------------------


def _less(S: Tableau, p: Box, q: Box) -> bool:
    """``S(p) < S(q)`` with every box outside ``S`` equal to a common infinity."""
    if not S.contains(p):
        return False
    if not S.contains(q):
        return True
    return S[p] < S[q]


def _comparable(S: Tableau, p: Box, q: Box) -> bool:
    return S.contains(p) or S.contains(q)


def _box_form(box: Box, a: int, b: int) -> list[int]:
    """Coefficients of ``x_i + y_j`` in the reduced variables ``x_2.., y_2..``."""
    vec = [0] * (a - 1 + b - 1)
    i, j = box
    if i > 0:
        vec[i - 1] += 1
    if j > 0:
        vec[a - 1 + j - 1] += 1
    return vec


# -- additivity ------------------------------------------------------------------


def _additivity_system(S: Tableau) -> list[list[int]]:
    a, b, c = S.rows, S.cols, S.size
    rows: list[list[int]] = []

    def diff(p: Box, q: Box) -> list[int]:
        fp, fq = _box_form(p, a, b), _box_form(q, a, b)
        return [y - x for x, y in zip(fp, fq)]

    for v in range(1, c):
        rows.append(diff(S.position(v), S.position(v + 1)))
    last = S.position(c)
    for q in S.rectangle():
        if not S.contains(q):
            rows.append(diff(last, q))
    for i in range(a - 1):
        rows.append(diff((i, 0), (i + 1, 0)))
    for j in range(b - 1):
        rows.append(diff((0, j), (0, j + 1)))
    return rows


def is_additive(S: Tableau) -> AdditiveCertificate | None:
    """Certificate ``(x, y)`` when ``S`` is additive, else None.

    Strict inequalities between consecutive entries are replaced by ``>= 1``
    (the system is scale invariant) and solved exactly by Fourier-Motzkin.
    """
    a, b = S.rows, S.cols
    system = _additivity_system(S)
    if not system or not system[0]:
        return AdditiveCertificate((0,) * a, (0,) * b)
    z = fm_feasible(system, [1] * len(system))
    if z is None:
        return None
    z = primitive(z)
    cert = AdditiveCertificate((0,) + z[: a - 1], (0,) + z[a - 1:])
    if not verify_certificate(S, cert):
        raise AssertionError(f"unsound certificate {cert} for {S}")
    return cert


def verify_certificate(S: Tableau, cert: AdditiveCertificate) -> bool:
    """Check the order equivalence on every pair of comparable boxes."""
    if len(cert.x) != S.rows or len(cert.y) != S.cols or cert.x[0] or cert.y[0]:
        return False
    if any(cert.x[i] >= cert.x[i + 1] for i in range(S.rows - 1)):
        return False
    if any(cert.y[j] >= cert.y[j + 1] for j in range(S.cols - 1)):
        return False
    boxes = list(S.rectangle())
    for idx, p in enumerate(boxes):
        for q in boxes[idx + 1:]:
            if not _comparable(S, p, q):
                continue
            lp, lq = cert.level(p), cert.level(q)
            if _less(S, p, q) != (lp < lq) or _less(S, q, p) != (lq < lp):
                return False
    return True


# -- image partitions --------------------------------------------------------------


def image_partitions(S: Tableau, lam: Sequence[int]) -> tuple[Partition, Partition]:
    """``(a_S(lam), b_S(lam))``: row and column sums of ``lam`` read through ``S``."""
    lam = Partition(lam)
    if len(lam) > S.size:
        raise InputError(f"{tuple(lam)} has more than {S.size} parts")
    seq = lam.pad(S.size)
    rows = [0] * S.rows
    cols = [0] * S.cols
    for i, j in S.boxes():
        val = seq[S[i, j] - 1]
        rows[i] += val
        cols[j] += val
    return Partition(rows), Partition(cols)


# -- weights -----------------------------------------------------------------------


def _unit(n: int, k: int, sign: int = 1) -> list[int]:
    vec = [0] * n
    vec[k] = sign
    return vec


def normal_weights(S: Tableau) -> WeightMultiset:
    """Weight multiset of the normal data of the embedding defined by ``S``.

    Pure row weights ``e_k - e_i`` and pure column weights ``f_l - f_j`` lose
    one copy each (the tangent directions of the two flag varieties); every
    comparable pair of boxes in distinct rows and columns contributes one
    mixed weight, oriented from the smaller box to the larger.
    """
    a, b = S.rows, S.cols
    counts: Counter[WeightVector] = Counter()
    zero_u, zero_v = (0,) * a, (0,) * b
    for i in range(a):
        for k in range(i + 1, a):
            m = sum(1 for j in range(b)
                    if _comparable(S, (i, j), (k, j)) and _less(S, (i, j), (k, j)))
            if m > 1:
                u = [0] * a
                u[k] += 1
                u[i] -= 1
                counts[WeightVector(tuple(u), zero_v)] += m - 1
    for j in range(b):
        for l in range(j + 1, b):
            m = sum(1 for i in range(a)
                    if _comparable(S, (i, j), (i, l)) and _less(S, (i, j), (i, l)))
            if m > 1:
                v = [0] * b
                v[l] += 1
                v[j] -= 1
                counts[WeightVector(zero_u, tuple(v))] += m - 1
    boxes = list(S.rectangle())
    for idx, p in enumerate(boxes):
        for q in boxes[idx + 1:]:
            if p[0] == q[0] or p[1] == q[1] or not _comparable(S, p, q):
                continue
            lo, hi = (p, q) if _less(S, p, q) else (q, p)
            (i, j), (k, l) = lo, hi
            u = [0] * a
            v = [0] * b
            u[k] += 1
            u[i] -= 1
            v[l] += 1
            v[j] -= 1
            counts[WeightVector(tuple(u), tuple(v))] += 1
    entries = tuple(sorted(counts.items(), key=lambda wm: (wm[0].u, wm[0].v)))
    return WeightMultiset(a, b, entries)


def expected_weight_total(a: int, b: int, c: int | None = None) -> int:
    """Closed-form total multiplicity of :func:`normal_weights`.

    ``(a-1)(b-1)(ab+a+b)/2`` for the full rectangle, otherwise
    ``sum_{k<=c} (ab - k) - a(a-1)/2 - b(b-1)/2``.
    """
    if c is None or c == a * b:
        return (a - 1) * (b - 1) * (a * b + a + b) // 2
    return sum(a * b - k for k in range(1, c + 1)) - a * (a - 1) // 2 - b * (b - 1) // 2


def weights_cone_pointed(W: WeightMultiset) -> bool:
    """Whether ``cone(W)`` contains no line, decided by an exact simplex.

    Equivalent to a functional that is strictly positive on every weight;
    solved in the full coordinates, independently of :func:`is_additive`.
    """
    support = [w.coords() for w in W.support()]
    if not support:
        return True
    return simplex_feasible(support, [1] * len(support)) is not None


# -- tableaux from partitions -------------------------------------------------------


def additive_tableau_from_partition(mu: Sequence[int], a: int, b: int) -> Tableau:
    """Additive ``a x b`` tableau whose first ``|mu|`` entries fill the diagram of ``mu``.

    Boxes are ranked by ``alpha_i + beta_j`` with ``alpha_i = i - mu_i - 1`` and
    ``beta_j = j - mu*_j`` (1-based), which is minus the hook length inside
    ``mu`` and positive outside.  Equal sums (e.g. symmetric hooks) are
    separated by a row-major perturbation ``N (alpha_i + beta_j) + b i + j``,
    which keeps both sequences strictly increasing.
    """
    mu = Partition(mu)
    if len(mu) > a or (mu and mu[0] > b):
        raise InputError(f"{tuple(mu)} does not fit in a {a}x{b} rectangle")
    x, y = additive_sequences_for_partition(mu, a, b)
    order = sorted(((x[i] + y[j], (i, j)) for i in range(a) for j in range(b)))
    grid = [[0] * b for _ in range(a)]
    for rank, (_, (i, j)) in enumerate(order, start=1):
        grid[i][j] = rank
    return Tableau(grid)


def additive_sequences_for_partition(mu: Sequence[int], a: int, b: int) -> tuple[list[int], list[int]]:
    """The perturbed strictly increasing sequences used by
    :func:`additive_tableau_from_partition` (not normalized to start at 0)."""
    mu = Partition(mu)
    mu_pad = mu.pad(a)
    mu_t = conjugate(mu).pad(b)
    big = a * b + b + 1
    x = [big * ((i + 1) - mu_pad[i] - 1) + b * (i + 1) for i in range(a)]
    y = [big * ((j + 1) - mu_t[j]) + (j + 1) for j in range(b)]
    return x, y
