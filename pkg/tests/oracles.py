"""Slow, independent reference implementations used only by the tests."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from kronpoly.partitions import Partition


def _poly_mul(p: dict, q: dict) -> dict:
    out: Counter = Counter()
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _frobenius(lam: Partition, rho: Partition) -> int:
    n = lam.size
    k = max(len(lam), 1)
    lam_p = lam.pad(k)
    # Vandermonde a_delta = sum over permutations of sign * x^(sigma(delta))
    delta = tuple(k - 1 - i for i in range(k))
    vdm: dict = {}
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        exp = tuple(delta[perm[i]] for i in range(k))
        vdm[exp] = (-1) ** inv
    poly = vdm
    for r in rho:
        power = {tuple(r if i == j else 0 for i in range(k)): 1 for j in range(k)}
        poly = _poly_mul(poly, power)
    target = tuple(l + d for l, d in zip(lam_p, delta))
    assert sum(target) == n + sum(delta)
    return poly.get(target, 0)


def frobenius_character(lam, rho) -> int:
    """``chi_lam(rho)`` as the coefficient of ``x^(lam + delta)`` in ``a_delta * p_rho``."""
    return _frobenius(Partition(lam), Partition(rho))


def cycle_type(perm) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            j, ell = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                ell += 1
            lengths.append(ell)
    return Partition(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def element_cycle_types(n: int) -> Counter:
    """How many elements of ``S_n`` have each cycle type, by listing them all."""
    return Counter(cycle_type(perm) for perm in permutations(range(n)))


def kron_by_elements(*parts) -> int:
    """Average of the character product over every element of ``S_n``."""
    n = Partition(parts[0]).size
    total = 0
    for rho, count in element_cycle_types(n).items():
        val = count
        for p in parts:
            val *= frobenius_character(p, rho)
        total += val
    g = Fraction(total, factorial(n))
    assert g.denominator == 1
    return int(g)


def vector_partitions_brute(vectors, target, bound) -> int:
    """Count ``t`` with ``0 <= t_i <= bound_i`` and ``sum t_i v_i = target``.

    ``bound`` is one integer for every coordinate or a list of per-vector bounds.
    """
    bounds = [bound] * len(vectors) if isinstance(bound, int) else list(bound)
    count = 0
    for ts in product(*(range(b + 1) for b in bounds)):
        s = [0] * len(target)
        for t, v in zip(ts, vectors):
            for i, x in enumerate(v):
                s[i] += t * x
        if tuple(s) == tuple(target):
            count += 1
    return count
