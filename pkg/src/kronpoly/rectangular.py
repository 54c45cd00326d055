"""Rectangular Kronecker coefficients and the affine Dynkin predictions.

The four families

* ``D4``: ``g(n^2, n^2, n^2, n^2)`` (two rows of length n, four factors)
* ``E6``: ``g(n^3, n^3, n^3)``
* ``E7``: ``g((2n)^2, n^4, n^4)``
* ``E8``: ``g((3n)^2, (2n)^3, n^6)``

have generating series ``1 / prod (1 - q^d)`` over the degrees listed in
:data:`SERIES_DEGREES`.  Three of them also have quasipolynomial closed
forms, stored with periodic parts indexed from ``n = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InputError, IntegralityError, SizeLimitError
from .kronecker import kron
from .partitions import Partition

__all__ = [
    "DIAGRAMS",
    "SERIES_DEGREES",
    "QUASIPOLYNOMIALS",
    "E6_PI12",
    "E6_PI12_AS_PRINTED",
    "rect_partitions",
    "rect_kron",
    "series_coefficients",
    "quasipoly_eval",
    "WeakStabilityReport",
    "verify_weakly_stable",
]

DIAGRAMS = ("D4", "E6", "E7", "E8")

SERIES_DEGREES: dict[str, tuple[int, ...]] = {
    "D4": (1, 2, 2, 3),
    "E6": (2, 3, 4),
    "E7": (2, 3),
    "E8": (1,),
}

_ALIASES = {
    "D4": "D4", "D4^": "D4", "D̂4": "D4", "D̂₄": "D4",
    "E6": "E6", "E6^": "E6", "Ê6": "E6", "Ê₆": "E6",
    "E7": "E7", "E7^": "E7", "Ê7": "E7", "Ê₇": "E7",
    "E8": "E8", "E8^": "E8", "Ê8": "E8", "Ê₈": "E8",
}


def _diagram(name: str) -> str:
    key = _ALIASES.get(name.strip()) or _ALIASES.get(name.strip().upper())
    if key is None:
        raise InputError(f"unknown diagram {name!r}; expected one of {', '.join(DIAGRAMS)}")
    return key


def rect_partitions(name: str, n: int) -> tuple[Partition, ...]:
    """The rectangles whose coefficient is the ``n``-th term of the family."""
    if n < 0:
        raise InputError("n must be nonnegative")
    d = _diagram(name)
    if d == "D4":
        shapes = [(n, 2)] * 4
    elif d == "E6":
        shapes = [(n, 3)] * 3
    elif d == "E7":
        shapes = [(2 * n, 2), (n, 4), (n, 4)]
    else:
        shapes = [(3 * n, 2), (2 * n, 3), (n, 6)]
    return tuple(Partition([p] * r) for p, r in shapes)


def _check_rectangles(parts: Sequence[Partition]) -> None:
    """``g(p^a, q^b, ...)`` can only be nonzero when all areas agree."""
    areas = set()
    for p in parts:
        if p and len(set(p)) != 1:
            raise InputError(f"{tuple(p)} is not a rectangle")
        areas.add(p.size)
    if len(areas) > 1:
        raise InputError(f"rectangles of different areas: {[tuple(p) for p in parts]}")


def rect_kron(name: str, n: int) -> int:
    """The rectangular (multi-)Kronecker coefficient of the family ``name``."""
    parts = rect_partitions(name, n)
    _check_rectangles(parts)
    return kron(*parts)


def series_coefficients(name: str, n_max: int) -> list[int]:
    """Coefficients of ``q^0..q^n_max`` in ``prod_d 1 / (1 - q^d)``."""
    if n_max < 0:
        raise InputError("n_max must be nonnegative")
    coeffs = [1] + [0] * n_max
    for d in SERIES_DEGREES[_diagram(name)]:
        # multiply by 1 / (1 - q^d): running sums with stride d
        for k in range(d, n_max + 1):
            coeffs[k] += coeffs[k - d]
    return coeffs


@dataclass(frozen=True)
class Quasipolynomial:
    """``sum_k poly[k] n^k / denom + (n + 1) * pi_lin(n) / denom + pi_const(n) / denom``.

    Periodic lists are read at ``n mod len``, starting from ``n = 0``.
    """

    diagram: str
    poly: tuple[int, ...]
    denom: int
    linear_period: tuple[int, ...] = ()
    linear_denom: int = 1
    const_period: tuple[int, ...] = ()
    const_denom: int = 1

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise InputError("n must be nonnegative")
        val = Fraction(sum(c * n ** k for k, c in enumerate(self.poly)), self.denom)
        if self.linear_period:
            val += Fraction((n + 1) * self.linear_period[n % len(self.linear_period)],
                            self.linear_denom)
        if self.const_period:
            val += Fraction(self.const_period[n % len(self.const_period)], self.const_denom)
        return val


# A variant of the 12-periodic E6 part with -48 in position 5 is kept for
# reference; it gives 1/4 at n = 5, and the series forces -12 there.
E6_PI12_AS_PRINTED = (37, -12, 9, 16, 21, -48, 25, 0, 21, 4, 9, 0)
E6_PI12 = (37, -12, 9, 16, 21, -12, 25, 0, 21, 4, 9, 0)

QUASIPOLYNOMIALS: dict[str, Quasipolynomial] = {
    # (n + pi_6(n)) / 6
    "E7_identity": Quasipolynomial("E7", (0, 1), 6,
                                   const_period=(6, -1, 4, 3, 2, 1), const_denom=6),
    # (n+1)(n+2)/48 + (n+1) pi_2(n) / 16 + pi_12(n) / 48
    "E6_identity": Quasipolynomial("E6", (2, 3, 1), 48,
                                   linear_period=(3, 1), linear_denom=16,
                                   const_period=E6_PI12,
                                   const_denom=48),
    # (n^3 + 12 n^2 + 29 n + 18)/72 + (n+1) pi_2(n) / 72 + pi_6(n) / 72
    "D4_identity": Quasipolynomial("D4", (18, 29, 12, 1), 72,
                                   linear_period=(19, 10), linear_denom=72,
                                   const_period=(35, -8, 27, 8, 19, 0), const_denom=72),
}


def quasipoly_eval(name: str, n: int) -> int:
    """Exact value of a closed form; a fractional result is an indexing bug."""
    key = name if name in QUASIPOLYNOMIALS else f"{_diagram(name)}_identity"
    if key not in QUASIPOLYNOMIALS:
        raise InputError(f"no quasipolynomial for {name!r}; expected one of {sorted(QUASIPOLYNOMIALS)}")
    val = QUASIPOLYNOMIALS[key](n)
    if val.denominator != 1:
        raise IntegralityError(f"{key}({n}) = {val} is not an integer")
    return int(val)


@dataclass
class WeakStabilityReport:
    partitions: tuple[Partition, ...]
    values: list[int] = field(default_factory=list)
    first_failure: int | None = None
    budget_reached: bool = False

    @property
    def all_ones(self) -> bool:
        return self.first_failure is None and bool(self.values)

    def as_json(self) -> dict:
        return {
            "partitions": [",".join(map(str, p)) or "-" for p in self.partitions],
            "values": [str(v) for v in self.values],
            "verdict": "all ones" if self.all_ones else (
                f"fails at k={self.first_failure}" if self.first_failure else "no data"),
            "budget_reached": self.budget_reached,
        }


def verify_weakly_stable(parts: Sequence[Sequence[int]], k_max: int) -> WeakStabilityReport:
    """``kron(k * each partition)`` for ``k = 1..k_max``; stops at the first value != 1.

    Stretches beyond the oracle budget end the sweep with ``budget_reached``.
    """
    parts = tuple(Partition(p) for p in parts)
    if len({p.size for p in parts}) != 1:
        raise InputError("partitions must have the same size")
    rep = WeakStabilityReport(parts)
    for k in range(1, k_max + 1):
        try:
            val = kron(*(p * k for p in parts))
        except SizeLimitError:
            rep.budget_reached = True
            break
        rep.values.append(val)
        if val != 1:
            rep.first_failure = k
            break
    return rep
