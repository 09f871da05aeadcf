"""
Finitely supported permutations of the positive integers.

A permutation is stored by its one-line window ``w(1), ..., w(n)`` with the
fixed tail trimmed, so the same element of S_infinity has one representation
no matter which S_n it was built in.

>>> w = Permutation.parse("(2,4)(1,5,3)")
>>> w.window
(5, 4, 1, 2, 3)
>>> (w * Permutation.parse("21345")).oneline()
'45123'
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "Transposition", "identity", "transposition", "cycle",
    "all_perms", "from_code", "grassmannian", "is_grassmannian",
    "delete_at", "insert_at", "phi_P", "conj_w0", "conj_cycle",
    "compress",
]


def _trim(values: Sequence[int]) -> tuple[int, ...]:
    n = len(values)
    while n and values[n - 1] == n:
        n -= 1
    return tuple(values[:n])


class Permutation:
    """An element of S_infinity, immutable and hashable."""

    __slots__ = ("_w", "_hash")

    def __init__(self, window: Iterable[int] = ()):
        w = tuple(int(v) for v in window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {list(w)}")
        object.__setattr__(self, "_w", _trim(w))
        object.__setattr__(self, "_hash", hash(self._w))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def _from_trimmed(cls, w: tuple[int, ...]) -> Permutation:
        # trusted constructor for internal use; w must already be canonical
        self = object.__new__(cls)
        object.__setattr__(self, "_w", w)
        object.__setattr__(self, "_hash", hash(w))
        return self

    @property
    def window(self) -> tuple[int, ...]:
        return self._w

    @property
    def n(self) -> int:
        """Size of the canonical window; the permutation lies in S_n."""
        return len(self._w)

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self._w):
            return self._w[i - 1]
        if i < 1:
            raise ValueError(f"position must be positive, got {i}")
        return i

    def padded(self, n: int) -> tuple[int, ...]:
        """One-line notation of length ``n`` (must cover the window)."""
        if n < len(self._w):
            raise ValueError(f"{self} does not lie in S_{n}")
        return self._w + tuple(range(len(self._w) + 1, n + 1))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._w == other._w

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        # a total order used only for deterministic sorting
        return (len(self._w), self._w) < (len(other._w), other._w)

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: ``(s * t)(i) == s(t(i))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        n = max(len(self._w), len(other._w))
        return Permutation._from_trimmed(_trim([self(other(i)) for i in range(1, n + 1)]))

    def inverse(self) -> Permutation:
        inv = [0] * len(self._w)
        for i, v in enumerate(self._w, 1):
            inv[v - 1] = i
        return Permutation._from_trimmed(tuple(inv))

    def swap_positions(self, a: int, b: int) -> Permutation:
        """Right multiplication by the transposition (a,b)."""
        n = max(len(self._w), a, b)
        w = list(self.padded(n))
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        return Permutation._from_trimmed(_trim(w))

    def swap_values(self, alpha: int, beta: int) -> Permutation:
        """Left multiplication by the transposition (alpha,beta)."""
        n = max(len(self._w), alpha, beta)
        w = [beta if v == alpha else alpha if v == beta else v for v in self.padded(n)]
        return Permutation._from_trimmed(_trim(w))

    def length(self) -> int:
        w = self._w
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def code(self) -> tuple[int, ...]:
        """Lehmer code ``c_i = #{j > i : w(j) < w(i)}`` with trailing zeros trimmed."""
        w = self._w
        c = [sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w))]
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def descents(self) -> frozenset[int]:
        w = self._w
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])

    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self._w, 1) if v != i)

    def is_identity(self) -> bool:
        return not self._w

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for i in range(1, len(self._w) + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    # ------------------------------------------------------------------
    # text and JSON forms

    def oneline(self) -> str:
        """Compact one-line notation; bracketed when an entry exceeds 9."""
        if not self._w:
            return "e"
        if len(self._w) <= 9:
            return "".join(map(str, self._w))
        return "[" + ",".join(map(str, self._w)) + "]"

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __str__(self):
        return self.oneline()

    def __repr__(self):
        return f"Permutation({list(self._w)!r})"

    _CYCLES = re.compile(r"^(\(\s*\d+(\s*,?\s*\d+)*\s*\))+$|^\(\s*\)$")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse one-line (``413652``, ``[4,1,3,6,5,2]``) or cycle notation.

        Cycles are separated by commas, or written as bare digits when every
        entry is a single digit, e.g. ``(2,4)(1,5,3)`` or ``(1243)``.
        """
        s = text.strip()
        if s in ("e", "id", "[]"):
            return identity()
        if s.startswith("("):
            if not cls._CYCLES.match(s):
                raise ValueError(f"malformed cycle notation: {text!r}")
            w: dict[int, int] = {}
            for body in re.findall(r"\(([^()]*)\)", s):
                body = body.strip()
                if not body:
                    continue
                if "," in body:
                    pts = [int(t) for t in body.split(",")]
                else:
                    toks = body.split()
                    pts = [int(t) for t in toks] if len(toks) > 1 else [int(ch) for ch in body]
                if len(set(pts)) != len(pts) or min(pts) < 1:
                    raise ValueError(f"malformed cycle {body!r} in {text!r}")
                # cycles compose right to left: (12)(23) sends 3 to 1
                step = {pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))}
                n = max(max(step), max(w, default=0))
                w = {i: w.get(step.get(i, i), step.get(i, i)) for i in range(1, n + 1)}
            n = max(w, default=0)
            return cls(w.get(i, i) for i in range(1, n + 1))
        if s.startswith("["):
            if not s.endswith("]"):
                raise ValueError(f"malformed one-line notation: {text!r}")
            body = s[1:-1].strip()
            vals = [int(t) for t in body.split(",")] if body else []
            return cls(vals)
        if not s.isdigit():
            raise ValueError(f"malformed permutation: {text!r}")
        return cls(int(ch) for ch in s)

    def to_json(self) -> dict:
        return {"window": list(self._w)}

    @classmethod
    def from_json(cls, obj: dict) -> Permutation:
        return cls(obj["window"])


@dataclass(frozen=True, order=True)
class Transposition:
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got ({self.a},{self.b})")

    def perm(self) -> Permutation:
        return transposition(self.a, self.b)


_IDENTITY = Permutation()


def identity() -> Permutation:
    return _IDENTITY


def transposition(a: int, b: int) -> Permutation:
    return identity().swap_positions(a, b)


def cycle(*points: int) -> Permutation:
    """The cycle ``points[0] -> points[1] -> ... -> points[0]``."""
    if len(points) < 2:
        return identity()
    n = max(points)
    w = list(range(1, n + 1))
    for i, p in enumerate(points):
        w[p - 1] = points[(i + 1) % len(points)]
    return Permutation(w)


def all_perms(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation._from_trimmed(_trim(w))


def from_code(code: Sequence[int]) -> Permutation:
    """The unique permutation with the given Lehmer code."""
    n = len(code) + (max(code) if code else 0)
    free = list(range(1, n + 1))
    w = []
    for c in code:
        w.append(free.pop(c))
    w.extend(free)
    return Permutation(w)


def _parts(lam: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in lam if p)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(p < 0 for p in parts):
        raise ValueError(f"not a partition: {tuple(lam)}")
    return parts


def grassmannian(lam: Sequence[int], k: int) -> Permutation:
    """The Grassmannian permutation v(lam, k), with ``v(j) = j + lam_{k+1-j}``."""
    parts = _parts(lam)
    if len(parts) > k:
        raise ValueError(f"partition {parts} has more than {k} parts")
    padded = parts + (0,) * (k - len(parts))
    head = [j + padded[k - j] for j in range(1, k + 1)]
    n = max(head, default=0)
    n = max(n, k)
    used = set(head)
    tail = [v for v in range(1, n + 1) if v not in used]
    return Permutation(head + tail)


def is_grassmannian(w: Permutation, k: int | None = None) -> tuple[tuple[int, ...], int] | None:
    """Return ``(lam, k)`` with ``grassmannian(lam, k) == w``, or None.

    The identity has no descent; it is reported as ``((), k)`` for the
    requested ``k`` (default 1).
    """
    d = w.descents()
    if not d:
        return (), (k if k is not None else 1)
    if len(d) != 1:
        return None
    (k0,) = d
    if k is not None and k != k0:
        return None
    lam = tuple(w(k0 + 1 - i) - (k0 + 1 - i) for i in range(1, k0 + 1))
    return tuple(p for p in lam if p), k0


def delete_at(w: Permutation, p: int) -> Permutation:
    """Delete row ``p`` and column ``w(p)`` from the permutation matrix."""
    n = max(w.n, p)
    q = w(p)
    vals = [v - (v > q) for i, v in enumerate(w.padded(n), 1) if i != p]
    return Permutation(vals)


def insert_at(y: Permutation, p: int, q: int) -> Permutation:
    """The permutation x with ``x(p) == q`` and ``delete_at(x, p) == y``."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    n = max(y.n, p - 1, q - 1)
    vals = [v + (v >= q) for v in y.padded(n)]
    vals.insert(p - 1, q)
    return Permutation(vals)


def phi_P(zeta: Permutation, P: Sequence[int]) -> Permutation:
    """Relabel zeta along ``P = p_1 < p_2 < ...``: ``p_i -> p_{zeta(i)}``."""
    P = tuple(P)
    if any(P[i] >= P[i + 1] for i in range(len(P) - 1)) or (P and P[0] < 1):
        raise ValueError(f"P must be strictly increasing positive integers: {P}")
    if len(P) < zeta.n:
        raise ValueError(f"P has {len(P)} elements but zeta moves points up to {zeta.n}")
    n = max(P, default=0)
    w = list(range(1, n + 1))
    for i in range(1, zeta.n + 1):
        w[P[i - 1] - 1] = P[zeta(i) - 1]
    return Permutation(w)


def compress(zeta: Permutation) -> Permutation:
    """Relabel the support of zeta as 1..m, keeping its relative order."""
    supp = sorted(zeta.support())
    rank = {p: i for i, p in enumerate(supp, 1)}
    return Permutation(rank[zeta(p)] for p in supp)


def _check_in(zeta: Permutation, n: int):
    if zeta.n > n:
        raise ValueError(f"{zeta} does not lie in S_{n}")


def conj_w0(zeta: Permutation, n: int) -> Permutation:
    """``w0 zeta w0`` for the longest element w0 of S_n."""
    _check_in(zeta, n)
    return Permutation(n + 1 - zeta(n + 1 - i) for i in range(1, n + 1))


def conj_cycle(zeta: Permutation, n: int) -> Permutation:
    """``s zeta s^-1`` for the n-cycle ``s = (1 2 ... n)``."""
    _check_in(zeta, n)
    s = cycle(*range(1, n + 1)) if n > 1 else identity()
    return s * zeta * s.inverse()
