"""Partitions and standard tableaux.

Everything here is exact integer combinatorics.  Partitions are stored
without trailing zeros; operations that want a fixed length pad on demand.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import InputError

__all__ = [
    "Partition",
    "Tableau",
    "conjugate",
    "hook_lengths",
    "syt_count",
    "enumerate_syt",
    "partitions_of",
    "partitions_bounded",
    "shapes_in_rectangle",
    "strict_partitions",
    "is_strict",
    "add_partitions",
    "parse_partition",
    "format_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are accepted on input and dropped, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        data = [int(p) for p in parts]
        while data and data[-1] == 0:
            data.pop()
        for i, p in enumerate(data):
            if p < 0:
                raise InputError(f"negative part in {tuple(data)}")
            if i and p > data[i - 1]:
                raise InputError(f"parts not weakly decreasing: {tuple(data)}")
            if p == 0:
                raise InputError(f"zero part before a positive one: {tuple(data)}")
        return super().__new__(cls, data)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-indexed part, 0 past the end."""
        return self[i] if i < len(self) else 0

    def pad(self, length: int) -> tuple[int, ...]:
        if length < len(self):
            raise InputError(f"{self} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def scale(self, k: int) -> "Partition":
        return Partition(k * p for p in self)

    def __add__(self, other):  # part-wise, not concatenation
        return add_partitions(self, other)

    def __mul__(self, k):
        return self.scale(k)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def hook_lengths(mu: Sequence[int]) -> list[list[int]]:
    """Hook length grid ``h[i][j] = arm + leg + 1`` for every box of ``mu``."""
    mu = Partition(mu)
    mu_t = conjugate(mu)
    return [[(mu[i] - j) + (mu_t[j] - i) - 1 for j in range(mu[i])] for i in range(len(mu))]


def syt_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of the given shape (hook length formula)."""
    shape = Partition(shape)
    hooks = prod(h for row in hook_lengths(shape) for h in row)
    count, rem = divmod(factorial(shape.size), hooks)
    assert rem == 0
    return count


def add_partitions(*parts: Sequence[int]) -> Partition:
    """Part-wise sum, padding shorter arguments with zeros."""
    width = max((len(p) for p in parts), default=0)
    return Partition(
        sum(p[i] if i < len(p) else 0 for p in parts) for i in range(width)
    )


def is_strict(lam: Sequence[int], length: int) -> bool:
    """True when ``lam`` padded to ``length`` is strictly decreasing.

    One trailing zero is therefore allowed (length ``length - 1``).
    """
    if len(Partition(lam)) > length:
        return False
    seq = Partition(lam).pad(length)
    return all(seq[i] > seq[i + 1] for i in range(length - 1))


# -- generation -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int, max_len: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    return [Partition(p) for p in _partitions(n, n, n)]


def partitions_bounded(n: int, max_length: int | None = None,
                       max_part: int | None = None) -> list[Partition]:
    """Partitions of ``n`` with at most ``max_length`` parts, each ``<= max_part``."""
    ml = n if max_length is None else max_length
    mp = n if max_part is None else max_part
    return [Partition(p) for p in _partitions(n, mp, ml)]


def shapes_in_rectangle(a: int, b: int, c: int) -> list[Partition]:
    """Shapes of size ``c`` with exactly ``a`` rows and first row exactly ``b``."""
    return [p for p in partitions_bounded(c, a, b) if len(p) == a and p and p[0] == b]


def strict_partitions(length: int, max_size: int) -> list[Partition]:
    """Partitions strictly decreasing when padded to ``length``, of size <= max_size.

    Sorted by size, then decreasing lexicographic.
    """
    out: list[Partition] = []

    def rec(prefix: list[int], remaining_slots: int, budget: int) -> None:
        if remaining_slots == 0:
            out.append(Partition(prefix))
            return
        # the last slot may be zero; each earlier slot must exceed the next
        low = remaining_slots - 1
        high = budget if not prefix else min(budget, prefix[-1] - 1)
        for v in range(low, high + 1):
            # minimal cost of the remaining slots below v
            rest = remaining_slots - 1
            if rest * (rest - 1) // 2 > budget - v:
                break
            rec(prefix + [v], remaining_slots - 1, budget - v)

    rec([], length, max_size)
    out.sort(key=lambda p: (p.size, tuple(-x for x in p)))
    return out


# -- tableaux -------------------------------------------------------------------


class Tableau:
    """Standard filling of a shape that fits exactly in an ``a x b`` rectangle.

    Boxes are 0-indexed ``(row, col)``.  Entries run over ``1..c``.
    """

    __slots__ = ("_rows", "shape", "rows", "cols", "_where")

    def __init__(self, rows: Sequence[Sequence[int]], a: int | None = None,
                 b: int | None = None):
        data = tuple(tuple(int(v) for v in r) for r in rows)
        if not data or any(len(r) == 0 for r in data):
            raise InputError("tableau rows must be nonempty")
        try:
            shape = Partition(len(r) for r in data)
        except InputError:
            raise InputError("tableau row lengths must weakly decrease") from None
        self._rows = data
        self.shape = shape
        self.rows = len(data) if a is None else a
        self.cols = data[0].__len__() if b is None else b
        if self.rows != len(shape) or self.cols != shape[0]:
            raise InputError(f"shape {tuple(shape)} does not fit exactly in {self.rows}x{self.cols}")
        c = shape.size
        where: dict[int, tuple[int, int]] = {}
        for i, r in enumerate(data):
            for j, v in enumerate(r):
                where[v] = (i, j)
        if sorted(where) != list(range(1, c + 1)) or len(where) != c:
            raise InputError("entries must be exactly 1..c")
        for i, r in enumerate(data):
            for j, v in enumerate(r):
                if j and r[j - 1] >= v:
                    raise InputError("rows must strictly increase")
                if i and data[i - 1][j] >= v:
                    raise InputError("columns must strictly increase")
        self._where = tuple(where[v] for v in range(1, c + 1))

    @property
    def size(self) -> int:
        return len(self._where)

    @property
    def is_rectangular(self) -> bool:
        return self.size == self.rows * self.cols

    def __getitem__(self, box: tuple[int, int]) -> int:
        i, j = box
        return self._rows[i][j]

    def contains(self, box: tuple[int, int]) -> bool:
        i, j = box
        return 0 <= i < len(self._rows) and 0 <= j < len(self._rows[i])

    def position(self, value: int) -> tuple[int, int]:
        """Box holding ``value`` (1-based value)."""
        return self._where[value - 1]

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, r in enumerate(self._rows):
            for j in range(len(r)):
                yield (i, j)

    def rectangle(self) -> Iterator[tuple[int, int]]:
        for i in range(self.rows):
            for j in range(self.cols):
                yield (i, j)

    def as_rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def restrict(self, c: int) -> "Tableau":
        """The sub-tableau of entries ``<= c``."""
        rows = [tuple(v for v in r if v <= c) for r in self._rows]
        rows = [r for r in rows if r]
        return Tableau(rows)

    def transpose(self) -> "Tableau":
        shape_t = conjugate(self.shape)
        return Tableau([[self._rows[i][j] for i in range(shape_t[j])] for j in range(len(shape_t))])

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Tableau({format_tableau(self)!r})"

    def __str__(self) -> str:
        return format_tableau(self)

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        return parse_tableau(text)


def enumerate_syt(a: int, b: int, c: int) -> list[Tableau]:
    """All standard tableaux of size ``c`` whose shape fits exactly in ``a x b``.

    Shapes come in decreasing lexicographic order.  Within a shape, values
    ``1, 2, ...`` are placed one at a time at the end of some row, rows tried
    top to bottom (depth-first).
    """
    if a < 1 or b < 1:
        raise InputError("rectangle dimensions must be positive")
    out: list[Tableau] = []
    for shape in shapes_in_rectangle(a, b, c):
        out.extend(_fillings(shape))
    return out


def _fillings(shape: Partition) -> Iterator[Tableau]:
    rows: list[list[int]] = [[] for _ in shape]
    n = shape.size

    def rec(v: int) -> Iterator[Tableau]:
        if v > n:
            yield Tableau(rows)
            return
        for i in range(len(shape)):
            filled = len(rows[i])
            if filled < shape[i] and (i == 0 or len(rows[i - 1]) > filled):
                rows[i].append(v)
                yield from rec(v + 1)
                rows[i].pop()

    yield from rec(1)


# -- text syntax ----------------------------------------------------------------


def parse_partition(text: str) -> Partition:
    """Parse ``"4,3,2,1"``, ``"3^2,1"`` or ``"-"`` (empty)."""
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    parts: list[int] = []
    for item in text.split(","):
        item = item.strip()
        try:
            if "^" in item:
                base, exp = item.split("^")
                parts.extend([int(base)] * int(exp))
            else:
                parts.append(int(item))
        except ValueError:
            raise InputError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    lam = Partition(lam)
    return ",".join(map(str, lam)) if lam else "-"


def parse_tableau(text: str) -> Tableau:
    try:
        rows = [[int(v) for v in r.split(",")] for r in text.strip().split(";")]
    except ValueError:
        raise InputError(f"cannot parse tableau {text!r}") from None
    return Tableau(rows)


def format_tableau(t: Tableau) -> str:
    return ";".join(",".join(map(str, r)) for r in t.as_rows())
