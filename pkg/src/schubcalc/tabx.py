"""
Partitions, Young tableaux, Schensted row insertion and
Littlewood-Richardson coefficients.

Partitions are plain tuples of positive ints in weakly decreasing order.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .perm import grassmannian
from .poly import structure_constants

__all__ = [
    "partition", "partitions", "partitions_in_box", "contains", "conjugate",
    "SkewShape", "Tableau", "schensted", "standard_tableaux", "syt_count",
    "semistandard_tableaux", "lr_coefficient", "diagonal_word", "reading_word",
]


def partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a partition tuple, dropping zeros."""
    p = tuple(int(x) for x in parts if x)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {p}")
    return p


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_in_box(rows: int, cols: int) -> list[tuple[int, ...]]:
    out = []
    for parts in itertools.product(range(cols, -1, -1), repeat=rows):
        if all(parts[i] >= parts[i + 1] for i in range(rows - 1)):
            out.append(partition(parts))
    return out


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0))


@dataclass(frozen=True)
class SkewShape:
    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not inside {self.outer}")

    def cells(self) -> list[tuple[int, int]]:
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return [(i, j) for i, row in enumerate(self.outer) for j in range(inner[i], row)]

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def normalized(self) -> frozenset[tuple[int, int]]:
        """Cells translated so the shape touches row 0 and column 0."""
        cells = self.cells()
        if not cells:
            return frozenset()
        r0 = min(i for i, _ in cells)
        c0 = min(j for _, j in cells)
        return frozenset((i - r0, j - c0) for i, j in cells)


@dataclass(frozen=True)
class Tableau:
    """A straight-shape tableau stored as rows, top to bottom."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            raise ValueError("row lengths must weakly decrease")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(self.shape)

    def entries(self) -> list[int]:
        return [v for r in self.rows for v in r]

    def is_semistandard(self) -> bool:
        rows = self.rows
        for r in rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)) or any(v < 1 for v in r):
                return False
        for i in range(len(rows) - 1):
            if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
                return False
        return True

    def is_standard(self) -> bool:
        return self.is_semistandard() and sorted(self.entries()) == list(range(1, self.size() + 1))

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> Tableau:
        """Rows top to bottom separated by ``/``, entries by commas."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(tuple(int(v) for v in row.split(",")) for row in text.split("/")))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, rows) -> Tableau:
        return cls(tuple(tuple(r) for r in rows))


def schensted(word: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row insertion; returns the insertion and recording tableaux."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, letter in enumerate(word, 1):
        x = letter
        for i, row in enumerate(P):
            j = bisect.bisect_right(row, x)
            if j == len(row):
                row.append(x)
                Q[i].append(step)
                break
            row[j], x = x, row[j]
        else:
            P.append([x])
            Q.append([step])
    return Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q)))


def standard_tableaux(lam: Sequence[int]) -> Iterator[Tableau]:
    """All standard tableaux of shape lam, by placing n, n-1, ... at corners."""
    lam = partition(lam)
    n = sum(lam)

    def fill(shape, m):
        if m == 0:
            yield {}
            return
        for i, row in enumerate(shape):
            if row and (i + 1 == len(shape) or shape[i + 1] < row):
                smaller = list(shape)
                smaller[i] -= 1
                for t in fill(tuple(smaller), m - 1):
                    t = dict(t)
                    t[(i, row - 1)] = m
                    yield t

    for t in fill(lam, n):
        yield Tableau(tuple(tuple(t[(i, j)] for j in range(row)) for i, row in enumerate(lam)))


def syt_count(lam: Sequence[int]) -> int:
    return sum(1 for _ in standard_tableaux(lam))


def semistandard_tableaux(lam: Sequence[int], max_entry: int) -> Iterator[Tableau]:
    """All semistandard tableaux of shape lam with entries in 1..max_entry."""
    lam = partition(lam)

    def rows_from(i, prev):
        if i == len(lam):
            yield ()
            return
        for row in itertools.combinations_with_replacement(range(1, max_entry + 1), lam[i]):
            if prev is not None and any(row[j] <= prev[j] for j in range(len(row))):
                continue
            for rest in rows_from(i + 1, row):
                yield (row,) + rest

    for rows in rows_from(0, None):
        yield Tableau(rows)


def lr_coefficient(mu: Sequence[int], lam: Sequence[int], nu: Sequence[int], k: int) -> int:
    """Coefficient of ``S_nu`` in ``S_mu * S_lam``, all in k variables."""
    mu, lam, nu = partition(mu), partition(lam), partition(nu)
    for p in (mu, lam, nu):
        if len(p) > k:
            raise ValueError(f"partition {p} has more than {k} parts")
    if sum(nu) != sum(mu) + sum(lam):
        return 0
    prod = structure_constants(grassmannian(mu, k), grassmannian(lam, k))
    return prod[grassmannian(nu, k)]


def diagonal_word(T: Tableau) -> tuple[int, ...]:
    """Entries read diagonal by diagonal (``col - row`` increasing),
    increasing within each diagonal."""
    diags: dict[int, list[int]] = {}
    for i, row in enumerate(T.rows):
        for j, v in enumerate(row):
            diags.setdefault(j - i, []).append(v)
    return tuple(v for d in sorted(diags) for v in sorted(diags[d]))


def reading_word(T: Tableau) -> tuple[int, ...]:
    """Rows left to right, bottom row first."""
    return tuple(v for row in reversed(T.rows) for v in row)
