"""Kronecker and multi-Kronecker coefficients.

Two exact backends:

* the class sum ``g = sum_rho chi_1(rho) ... chi_r(rho) / z_rho`` over the
  character oracle, used whenever ``n`` is within the oracle limit;
* a Schur-Weyl backend for three partitions two of which have at most two
  rows.  There ``g(lam, mu, nu)`` is the multiplicity of
  ``S_mu C^2 (x) S_nu C^2`` in ``S_lam(C^2 (x) C^2)``, obtained from weight
  multiplicities, i.e. from Kostka numbers with four-part contents.  It is
  polynomial in ``n`` and takes over above the class-sum limit.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Sequence

from .characters import character_row, conjugacy_classes
from .config import settings
from .errors import InputError, IntegralityError, SizeLimitError
from .partitions import Partition, partitions_bounded

__all__ = [
    "KronTriple",
    "kron",
    "kron_class_sum",
    "kron_two_row",
    "kron_nonzero_scan",
    "generic_growth_order",
]


@dataclass(frozen=True)
class KronTriple:
    lam: Partition
    mu: Partition
    nu: Partition
    value: int

    def as_json(self) -> dict:
        from .partitions import format_partition

        return {
            "lambda": format_partition(self.lam),
            "mu": format_partition(self.mu),
            "nu": format_partition(self.nu),
            "g": str(self.value),
        }

    @classmethod
    def from_json(cls, data: dict) -> "KronTriple":
        from .partitions import parse_partition

        return cls(parse_partition(data["lambda"]), parse_partition(data["mu"]),
                   parse_partition(data["nu"]), int(data["g"]))


def _common_size(parts: Sequence[Partition]) -> int:
    sizes = {p.size for p in parts}
    if len(sizes) != 1:
        raise InputError(f"partitions have different sizes: {[tuple(p) for p in parts]}")
    return sizes.pop()


def kron(*mus: Sequence[int]) -> int:
    """Multi-Kronecker coefficient ``dim([mu_1] (x) ... (x) [mu_r])^{S_n}``.

    Accepts the partitions either as separate arguments or as one sequence.
    """
    if len(mus) == 1 and mus[0] and not isinstance(mus[0][0], int):
        mus = tuple(mus[0])
    parts = [Partition(m) for m in mus]
    if len(parts) < 2:
        raise InputError("need at least two partitions")
    n = _common_size(parts)
    if n == 0:
        return 1
    if len(parts) == 2:
        return int(parts[0] == parts[1])
    if len(parts) == 3:
        lengths = sorted(len(p) for p in parts)
        if lengths[2] > lengths[0] * lengths[1]:
            return 0
    if n <= settings.max_n:
        return kron_class_sum(parts)
    if len(parts) == 3 and sorted(len(p) for p in parts)[1] <= 2:
        if n > settings.max_n_two_row:
            raise SizeLimitError(f"n={n} exceeds the two-row backend limit {settings.max_n_two_row}")
        return kron_two_row(*parts)
    raise SizeLimitError(f"n={n} exceeds the character oracle limit {settings.max_n}")


def kron_class_sum(parts: Sequence[Sequence[int]]) -> int:
    """Class-sum formula, accumulated in integers and divided by ``n!`` once."""
    parts = [Partition(p) for p in parts]
    n = _common_size(parts)
    rows = [character_row(p) for p in parts]
    classes = conjugacy_classes(n)
    total = 0
    for k, cls in enumerate(classes):
        term = cls.class_size
        for row in rows:
            term *= row[k]
            if not term:
                break
        total += term
    g, rem = divmod(total, factorial(n))
    if rem:
        raise IntegralityError(f"class sum not divisible by {n}! for {[tuple(p) for p in parts]}")
    if g < 0:
        raise IntegralityError(f"negative Kronecker coefficient for {[tuple(p) for p in parts]}")
    return g


# -- two-row Schur-Weyl backend --------------------------------------------------


@lru_cache(maxsize=1 << 20)
def _kostka4(lam: tuple[int, int, int, int], content: tuple[int, int, int, int]) -> int:
    """Kostka number ``K_{lam, content}`` for at most four rows and four letters.

    Counts Gelfand-Tsetlin chains lam > nu (3 rows) > kappa (2 rows) > (c1):
    the last two steps are counted in closed form.  ``content`` is sorted by
    the caller (Kostka numbers are symmetric in the content).
    """
    l1, l2, l3, l4 = lam
    c1, c2, c3, _ = content
    n3 = c1 + c2 + c3
    s = c1 + c2
    total = 0
    for v1 in range(l2, l1 + 1):
        lo2 = max(l3, n3 - v1 - l3)
        hi2 = min(l2, n3 - v1 - l4)
        for v2 in range(lo2, hi2 + 1):
            v3 = n3 - v1 - v2
            # kappa = (s - k, k) interlacing (v1, v2, v3) with k <= c1 <= s - k
            lo = max(v3, s - v1)
            hi = min(v2, s - v2, c1, c2)
            if hi >= lo:
                total += hi - lo + 1
    return total


def _weight_mult(lam4: tuple[int, int, int, int], p1: int, p2: int, q1: int, q2: int) -> int:
    """Dimension of the ``(p; q)`` weight space of ``S_lam(V (x) W)``, dim V = dim W = 2."""
    if min(p1, p2, q1, q2) < 0:
        return 0
    total = 0
    for t in range(max(0, q1 - p2), min(p1, q1) + 1):
        c = (t, p1 - t, q1 - t, p2 - q1 + t)
        total += _kostka4(lam4, tuple(sorted(c)))
    return total


def kron_two_row(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``g(lam, mu, nu)`` when at least two arguments have <= 2 rows."""
    parts = sorted((Partition(p) for p in (lam, mu, nu)), key=len, reverse=True)
    big, mu, nu = parts
    if len(mu) > 2 or len(nu) > 2:
        raise InputError("two-row backend needs two partitions with at most two rows")
    _common_size(parts)
    if len(big) > 4:
        return 0
    lam4 = big.pad(4)
    m1, m2 = mu.pad(2)
    n1, n2 = nu.pad(2)
    # GL2 x GL2 highest-weight multiplicity from weight multiplicities
    g = 0
    for (dm, sm), (dn, sn) in product(((0, 1), (1, -1)), repeat=2):
        g += sm * sn * _weight_mult(lam4, m1 + dm, m2 - dm, n1 + dn, n2 - dn)
    if g < 0:
        raise IntegralityError(f"negative multiplicity for {tuple(big)}, {tuple(mu)}, {tuple(nu)}")
    return g


# -- scans ---------------------------------------------------------------------


def kron_nonzero_scan(a: int, b: int, c: int, n_max: int) -> list[KronTriple]:
    """Every triple with lengths <= (a, b, c), common size 1..n_max and g != 0.

    Ordered by n, then decreasing lexicographic on (lam, mu, nu).
    """
    if min(a, b, c) < 1:
        raise InputError("length bounds must be positive")
    if n_max > settings.max_n:
        raise SizeLimitError(f"n_max={n_max} exceeds the oracle limit {settings.max_n}")
    out: list[KronTriple] = []
    for n in range(1, n_max + 1):
        classes = conjugacy_classes(n)
        weights = [cl.class_size for cl in classes]
        nf = factorial(n)
        lams = partitions_bounded(n, a)
        mus = partitions_bounded(n, b)
        nus = partitions_bounded(n, c)
        nu_rows = {nu: character_row(nu) for nu in nus}
        lam_rows = {lam: character_row(lam) for lam in lams}
        for lam in lams:
            rl = lam_rows[lam]
            wl = [w * x for w, x in zip(weights, rl)]
            for mu in mus:
                if len(mu) > len(lam) * c or len(lam) > len(mu) * c:
                    continue
                rm = character_row(mu)
                wlm = [w * x for w, x in zip(wl, rm)]
                for nu in nus:
                    if len(nu) > len(lam) * len(mu):
                        continue
                    total = sum(w * x for w, x in zip(wlm, nu_rows[nu]))
                    g, rem = divmod(total, nf)
                    if rem:
                        raise IntegralityError(f"class sum not divisible by {n}!")
                    if g:
                        out.append(KronTriple(lam, mu, nu, g))
    return out


def generic_growth_order(a: int, b: int, c: int) -> int:
    """Generic growth exponent ``abc - a^2 - b^2 - c^2 + 2`` of stretched coefficients."""
    if min(a, b, c) < 1:
        raise InputError("dimensions must be positive")
    return a * b * c - a * a - b * b - c * c + 2
