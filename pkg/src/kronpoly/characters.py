"""Symmetric group characters via the Murnaghan-Nakayama rule.

Rows of the character table are computed on demand and kept in a bounded
in-memory cache.  Full tables can also be persisted as JSON files so that
later runs start warm.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from collections import Counter, OrderedDict
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from pathlib import Path
from typing import Sequence

from .config import settings
from .errors import InputError, SizeLimitError
from .partitions import Partition, partitions_of

log = logging.getLogger(__name__)

CACHE_VERSION = 1

__all__ = [
    "ConjugacyClass",
    "CharacterTable",
    "mn_character",
    "character_row",
    "character_table",
    "conjugacy_classes",
    "z_coefficient",
    "cache_path",
    "clear_memory_caches",
]


def z_coefficient(rho: Sequence[int]) -> int:
    """Centralizer order ``z_rho = prod_i i^m_i * m_i!``."""
    return prod(i ** m * factorial(m) for i, m in Counter(rho).items())


@dataclass(frozen=True)
class ConjugacyClass:
    cycle_type: Partition
    class_size: int


@lru_cache(maxsize=64)
def conjugacy_classes(n: int) -> tuple[ConjugacyClass, ...]:
    """Classes of ``S_n`` ordered like ``partitions_of(n)``."""
    nf = factorial(n)
    out = []
    for rho in partitions_of(n):
        size, rem = divmod(nf, z_coefficient(rho))
        assert rem == 0
        out.append(ConjugacyClass(rho, size))
    return tuple(out)


# -- Murnaghan-Nakayama --------------------------------------------------------


def _remove_rim_hooks(shape: tuple[int, ...], r: int):
    """Yield ``(sign, smaller_shape)`` for every rim hook of length ``r``.

    Works on beta numbers: a rim hook of length r is a bead moved from
    position p to the empty position p - r; the sign counts the beads jumped.
    """
    ell = len(shape)
    betas = [shape[i] + ell - 1 - i for i in range(ell)]
    occupied = set(betas)
    for idx, p in enumerate(betas):
        q = p - r
        if q < 0 or q in occupied:
            continue
        jumped = sum(1 for x in betas if q < x < p)
        new = sorted((x if k != idx else q for k, x in enumerate(betas)), reverse=True)
        parts = [new[i] - (ell - 1 - i) for i in range(ell)]
        while parts and parts[-1] == 0:
            parts.pop()
        yield (-1 if jumped % 2 else 1), tuple(parts)


def _mn(shape: tuple[int, ...], rho: tuple[int, ...], memo: dict) -> int:
    if not rho:
        return 1
    key = (shape, rho)
    hit = memo.get(key)
    if hit is not None:
        return hit
    r, rest = rho[0], rho[1:]
    total = 0
    for sign, smaller in _remove_rim_hooks(shape, r):
        total += sign * _mn(smaller, rest, memo)
    memo[key] = total
    return total


def mn_character(lam: Sequence[int], rho: Sequence[int], memo: dict | None = None) -> int:
    """``chi_lam(rho)`` by border-strip recursion (largest cycle removed first)."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise InputError(f"size mismatch: |{tuple(lam)}| != |{tuple(rho)}|")
    return _mn(tuple(lam), tuple(rho), {} if memo is None else memo)


# -- rows and tables -----------------------------------------------------------

_ROW_CACHE_SIZE = 4096
_rows: "OrderedDict[Partition, tuple[int, ...]]" = OrderedDict()
_tables: "OrderedDict[int, CharacterTable]" = OrderedDict()


def clear_memory_caches() -> None:
    _rows.clear()
    _tables.clear()


def _check_n(n: int) -> None:
    if n > settings.max_n:
        raise SizeLimitError(f"n={n} exceeds the character oracle limit {settings.max_n}")


def _compute_row(lam: Partition) -> tuple[int, ...]:
    memo: dict = {}
    shape = tuple(lam)
    return tuple(_mn(shape, tuple(rho), memo) for rho in partitions_of(lam.size))


def character_row(lam: Sequence[int]) -> tuple[int, ...]:
    """All values ``chi_lam(rho)``, with ``rho`` in ``partitions_of(n)`` order."""
    lam = Partition(lam)
    n = lam.size
    _check_n(n)
    row = _rows.get(lam)
    if row is not None:
        _rows.move_to_end(lam)
        return row
    table = _tables.get(n)
    if table is None and settings.use_disk_cache:
        table = _load_cached(n)
        if table is not None:
            _remember_table(table)
    row = table.row(lam) if table is not None else _compute_row(lam)
    _rows[lam] = row
    if len(_rows) > _ROW_CACHE_SIZE:
        _rows.popitem(last=False)
    return row


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.partitions)})

    def index(self, lam: Sequence[int]) -> int:
        try:
            return self._index[Partition(lam)]
        except KeyError:
            raise InputError(f"{tuple(lam)} is not a partition of {self.n}") from None

    def row(self, lam: Sequence[int]) -> tuple[int, ...]:
        return self.values[self.index(lam)]

    def value(self, lam: Sequence[int], rho: Sequence[int]) -> int:
        return self.values[self.index(lam)][self.index(rho)]

    @property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        return conjugacy_classes(self.n)

    def to_json(self) -> dict:
        body = {
            "version": CACHE_VERSION,
            "n": self.n,
            "partitions": [list(p) for p in self.partitions],
            "values": [[str(v) for v in row] for row in self.values],
        }
        body["sha256"] = _digest(body)
        return body

    @classmethod
    def from_json(cls, data: dict) -> "CharacterTable":
        if data.get("version") != CACHE_VERSION:
            raise InputError(f"unsupported character table format version {data.get('version')!r}")
        body = {k: v for k, v in data.items() if k != "sha256"}
        if data.get("sha256") != _digest(body):
            raise ValueError("checksum mismatch")
        n = int(data["n"])
        parts = tuple(Partition(p) for p in data["partitions"])
        if list(parts) != partitions_of(n):
            raise ValueError("partition list is not the canonical one")
        values = tuple(tuple(int(v) for v in row) for row in data["values"])
        return cls(n, parts, values)


def _digest(body: dict) -> str:
    canon = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


def cache_path(n: int) -> Path:
    return settings.resolved_cache_dir() / f"chartable_n{n}.v{CACHE_VERSION}.json"


def _load_cached(n: int) -> CharacterTable | None:
    path = cache_path(n)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        log.warning("unreadable character table cache %s (%s); recomputing", path, exc)
        return None
    if data.get("version") != CACHE_VERSION:
        raise InputError(f"{path}: unsupported cache format version {data.get('version')!r}")
    try:
        return CharacterTable.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        log.warning("corrupt character table cache %s (%s); recomputing", path, exc)
        return None


def _write_cached(table: CharacterTable) -> None:
    path = cache_path(table.n)
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(table.to_json(), sort_keys=True, separators=(",", ":"))
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _remember_table(table: CharacterTable) -> None:
    _tables[table.n] = table
    if len(_tables) > 8:
        _tables.popitem(last=False)


def compute_character_table(n: int) -> CharacterTable:
    """Build the full table without touching any cache."""
    if n < 1:
        raise InputError("n must be positive")
    _check_n(n)
    parts = tuple(partitions_of(n))
    memo: dict = {}
    values = tuple(tuple(_mn(tuple(lam), tuple(rho), memo) for rho in parts) for lam in parts)
    return CharacterTable(n, parts, values)


def character_table(n: int) -> CharacterTable:
    """Full character table of ``S_n``, read from or written to the disk cache."""
    if n < 1:
        raise InputError("n must be positive")
    _check_n(n)
    table = _tables.get(n)
    if table is not None:
        # the cache directory may have changed since the table was built
        if settings.use_disk_cache and not cache_path(n).exists():
            _write_cached(table)
        return table
    if settings.use_disk_cache:
        table = _load_cached(n)
    if table is None:
        table = compute_character_table(n)
        if settings.use_disk_cache:
            _write_cached(table)
    _remember_table(table)
    return table
