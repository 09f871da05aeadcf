"""
Exact sparse polynomials over the integers, Schubert polynomials and
expansion in the Schubert basis.

Monomials are packed into a single Python int, ``sum(e_i << (BITS*(i-1)))``.
Multiplying monomials is then integer addition, and comparing packed keys
as integers is exactly colex order (compare at the largest differing
index), which is the order the Schubert expansion is driven by.

Two-alphabet polynomials in ``y`` and ``z`` reuse the same engine: ``y_j``
is packed as variable ``2j-1`` and ``z_j`` as variable ``2j``.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .perm import Permutation, from_code, grassmannian

__all__ = [
    "Poly", "SchubertExpansion", "schubert", "schubert_divdiff", "schur",
    "divided_difference", "expand_in_schubert", "recombine",
    "structure_constants", "structure_constant", "psi_p", "SubsetDescriptor",
    "psi_P", "expand_two_alphabet", "rename", "clear_memo",
]

BITS = 8
_MASK = (1 << BITS) - 1
MAX_EXPONENT = _MASK


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e:
            if not 0 < e <= MAX_EXPONENT:
                raise OverflowError(f"exponent {e} out of range")
            key |= e << (BITS * i)
    return key


def _unpack(key: int) -> tuple[int, ...]:
    out = []
    while key:
        out.append(key & _MASK)
        key >>= BITS
    return tuple(out)


def _degree(key: int) -> int:
    d = 0
    while key:
        d += key & _MASK
        key >>= BITS
    return d


class Poly:
    """Integer polynomial, immutable once built.

    ``alphabet`` is ``"x"`` for Z[x1, x2, ...] or ``"yz"`` for
    Z[y1, y2, ..., z1, z2, ...].
    """

    __slots__ = ("terms", "alphabet")

    def __init__(self, terms: Mapping[int, int] | None = None, alphabet: str = "x"):
        if alphabet not in ("x", "yz"):
            raise ValueError(f"unknown alphabet {alphabet!r}")
        self.terms: dict[int, int] = {k: c for k, c in (terms or {}).items() if c}
        self.alphabet = alphabet

    # -- construction -------------------------------------------------

    @classmethod
    def from_exponents(cls, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]],
                       alphabet: str = "x") -> Poly:
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[int, int] = {}
        for exps, c in items:
            k = _pack(exps)
            out[k] = out.get(k, 0) + c
        return cls(out, alphabet)

    @classmethod
    def from_two(cls, terms: Mapping[tuple[Sequence[int], Sequence[int]], int]) -> Poly:
        """Build from ``{(y_exponents, z_exponents): coeff}``."""
        out = {}
        for (ye, ze), c in terms.items():
            n = max(len(ye), len(ze))
            inter = []
            for j in range(n):
                inter.append(ye[j] if j < len(ye) else 0)
                inter.append(ze[j] if j < len(ze) else 0)
            k = _pack(inter)
            out[k] = out.get(k, 0) + c
        return cls(out, "yz")

    @classmethod
    def const(cls, c: int, alphabet: str = "x") -> Poly:
        return cls({0: c}, alphabet)

    @classmethod
    def var(cls, i: int) -> Poly:
        if i < 1:
            raise ValueError("variables are indexed from 1")
        return cls({1 << (BITS * (i - 1)): 1})

    @classmethod
    def y(cls, j: int) -> Poly:
        return cls({1 << (BITS * (2 * j - 2)): 1}, "yz")

    @classmethod
    def z(cls, j: int) -> Poly:
        return cls({1 << (BITS * (2 * j - 1)): 1}, "yz")

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.alphabet != self.alphabet and other.terms.keys() - {0} and self.terms.keys() - {0}:
                raise ValueError("cannot mix alphabets x and yz")
            return other
        if isinstance(other, int):
            return Poly.const(other, self.alphabet)
        return NotImplemented

    def _alpha(self, other: Poly) -> str:
        # a constant adopts the alphabet of the other operand
        if not (self.terms.keys() - {0}):
            return other.alphabet
        return self.alphabet

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Poly(out, self._alpha(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -c for k, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly({k: c * other for k, c in self.terms.items()}, self.alphabet)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.terms and other.terms and self.degree() + other.degree() > MAX_EXPONENT:
            raise OverflowError("product degree exceeds the packed exponent range")
        out: dict[int, int] = {}
        get = out.get
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return Poly(out, self._alpha(other))

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.alphabet)
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other, self.alphabet)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.terms != other.terms:
            return False
        return self.alphabet == other.alphabet or not (self.terms.keys() - {0})

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- inspection ---------------------------------------------------

    def degree(self) -> int:
        return max((_degree(k) for k in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({_degree(k) for k in self.terms}) <= 1

    def exponents(self) -> dict[tuple[int, ...], int]:
        return {_unpack(k): c for k, c in self.terms.items()}

    def leading(self) -> tuple[tuple[int, ...], int]:
        """Colex-maximal monomial and its coefficient."""
        k = max(self.terms)
        return _unpack(k), self.terms[k]

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(_pack(exps), 0)

    def split(self) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
        """For a yz-polynomial: ``{(y_exponents, z_exponents): coeff}``."""
        out = {}
        for k, c in self.terms.items():
            e = _unpack(k)
            ye, ze = _strip(e[0::2]), _strip(e[1::2])
            out[(ye, ze)] = c
        return out

    # -- text / JSON --------------------------------------------------

    def _sorted_items(self):
        items = [(_unpack(k), c) for k, c in self.terms.items()]
        if self.alphabet == "yz":
            items = [((_strip(e[0::2]), _strip(e[1::2])), c) for e, c in items]
            return sorted(items, key=lambda t: (-sum(t[0][0]) - sum(t[0][1]), tuple(-v for v in _flat(t[0]))))
        return sorted(items, key=lambda t: (-sum(t[0]), tuple(-v for v in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._sorted_items():
            if self.alphabet == "yz":
                factors = _factors("y", e[0]) + _factors("z", e[1])
            else:
                factors = _factors("x", e)
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    _TERM = re.compile(r"^(\d+)?((?:\*?[xyz]\d+(?:\^\d+)?)*)$")

    @classmethod
    def parse(cls, text: str) -> Poly:
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        chunks = re.findall(r"([+-])([^+-]+)", s)
        if "".join(sg + body for sg, body in chunks) != s:
            raise ValueError(f"malformed polynomial: {text!r}")
        letters = set(re.findall(r"[xyz]", s))
        if "x" in letters and letters & {"y", "z"}:
            raise ValueError("cannot mix alphabet x with y/z")
        alphabet = "yz" if letters & {"y", "z"} else "x"
        out: dict[int, int] = {}
        for sign, body in chunks:
            m = cls._TERM.match(body)
            if not m or (m.group(1) is None and not m.group(2)):
                raise ValueError(f"malformed term {body!r}")
            if m.group(1) is not None and m.group(2) and not m.group(2).startswith("*"):
                raise ValueError(f"missing '*' in term {body!r}")
            c = int(m.group(1)) if m.group(1) is not None else 1
            exps: dict[int, int] = {}
            for letter, idx, pw in re.findall(r"([xyz])(\d+)(?:\^(\d+))?", m.group(2)):
                idx = int(idx)
                if idx < 1:
                    raise ValueError(f"bad variable index in {body!r}")
                slot = idx - 1 if letter == "x" else 2 * idx - (2 if letter == "y" else 1)
                exps[slot] = exps.get(slot, 0) + (int(pw) if pw else 1)
            vec = [0] * (max(exps) + 1 if exps else 0)
            for slot, e in exps.items():
                vec[slot] = e
            k = _pack(vec)
            out[k] = out.get(k, 0) + (c if sign == "+" else -c)
        return cls(out, alphabet)

    def to_json(self) -> list[dict]:
        if self.alphabet == "yz":
            return [{"coeff": c, "exps": {"y": list(e[0]), "z": list(e[1])}} for e, c in self._sorted_items()]
        return [{"coeff": c, "exps": list(e)} for e, c in self._sorted_items()]

    @classmethod
    def from_json(cls, records: list[dict]) -> Poly:
        if any(isinstance(r["exps"], dict) for r in records):
            return cls.from_two({(tuple(r["exps"]["y"]), tuple(r["exps"]["z"])): r["coeff"] for r in records})
        return cls.from_exponents([(r["exps"], r["coeff"]) for r in records])


def _strip(e: Sequence[int]) -> tuple[int, ...]:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _flat(pair):
    ye, ze = pair
    n = max(len(ye), len(ze))
    return tuple(v for j in range(n) for v in ((ye[j] if j < len(ye) else 0), (ze[j] if j < len(ze) else 0)))


def _factors(letter: str, e: Sequence[int]) -> list[str]:
    return [f"{letter}{i}" + (f"^{v}" if v > 1 else "") for i, v in enumerate(e, 1) if v]


# ----------------------------------------------------------------------
# divided differences and Schubert polynomials

def divided_difference(f: Poly, i: int) -> Poly:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed monomial by monomial."""
    out: dict[int, int] = {}
    shift_a = BITS * (i - 1)
    shift_b = BITS * i
    for k, c in f.terms.items():
        a = (k >> shift_a) & _MASK
        b = (k >> shift_b) & _MASK
        if a == b:
            continue
        rest = k - (a << shift_a) - (b << shift_b)
        lo, hi, sign = (b, a, 1) if a > b else (a, b, -1)
        # x_i^hi x_{i+1}^lo -> sum_{j} x_i^{hi-1-j} x_{i+1}^{lo+j}
        for j in range(hi - lo):
            e_a, e_b = (hi - 1 - j, lo + j) if sign > 0 else (lo + j, hi - 1 - j)
            nk = rest + (e_a << shift_a) + (e_b << shift_b)
            out[nk] = out.get(nk, 0) + sign * c
    return Poly(out)


class _Memo:
    """Thread-safe memo: lock-free reads, serialized writes, optional sink."""

    def __init__(self):
        self._data: dict = {}
        self._lock = threading.Lock()
        self.sink: Callable | None = None

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value, persist: bool = True):
        with self._lock:
            if key in self._data:
                return self._data[key]
            self._data[key] = value
        if persist and self.sink is not None:
            self.sink(key, value)
        return value

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)


SCHUBERT_MEMO = _Memo()
PRODUCT_MEMO = _Memo()


def clear_memo():
    SCHUBERT_MEMO.clear()
    PRODUCT_MEMO.clear()


def schubert(w: Permutation) -> Poly:
    """The Schubert polynomial of ``w``.

    Built by the transition recursion: with ``r`` the last descent of ``w``
    and ``s > r`` maximal with ``w(s) < w(r)``, ``v = w t_{rs}`` and
    ``S_w = x_r S_v + sum S_{v t_{ir}}`` over ``i < r`` with
    ``l(v t_{ir}) = l(w)``.
    """
    hit = SCHUBERT_MEMO.get(w)
    if hit is not None:
        return hit
    # iterative post-order to keep the Python stack shallow
    stack = [w]
    while stack:
        u = stack[-1]
        if SCHUBERT_MEMO.get(u) is not None:
            stack.pop()
            continue
        if u.is_identity():
            SCHUBERT_MEMO.put(u, Poly.const(1), persist=False)
            stack.pop()
            continue
        r, v, others = _transition(u)
        missing = [t for t in (v, *others) if SCHUBERT_MEMO.get(t) is None]
        if missing:
            stack.extend(missing)
            continue
        res = Poly.var(r) * SCHUBERT_MEMO.get(v)
        for t in others:
            res = res + SCHUBERT_MEMO.get(t)
        SCHUBERT_MEMO.put(u, res)
        stack.pop()
    return SCHUBERT_MEMO.get(w)


def _transition(w: Permutation):
    win = w.window
    r = max(w.descents())
    s = max(j for j in range(r + 1, len(win) + 1) if win[j - 1] < win[r - 1])
    v = w.swap_positions(r, s)
    vr = v(r)
    others = []
    for i in range(r - 1, 0, -1):
        vi = v(i)
        if vi < vr and not any(vi < v(j) < vr for j in range(i + 1, r)):
            others.append(v.swap_positions(i, r))
    return r, v, others


def schubert_divdiff(w: Permutation, n: int | None = None) -> Poly:
    """Schubert polynomial by descending divided differences from the
    staircase monomial ``x1^(n-1) x2^(n-2) ... x_{n-1}`` of ``w0`` in S_n.

    Independent of :func:`schubert`; used to cross-check it.
    """
    n = max(w.n, 1) if n is None else n
    if w.n > n:
        raise ValueError(f"{w} does not lie in S_{n}")
    f = Poly.from_exponents({tuple(range(n - 1, 0, -1)): 1})
    # ascents of w, i.e. l(w s_i) > l(w), climbed to w0 then undone in reverse
    path = []
    u = w
    while True:
        win = u.padded(n)
        asc = [i for i in range(1, n) if win[i - 1] < win[i]]
        if not asc:
            break
        i = asc[0]
        path.append(i)
        u = u.swap_positions(i, i + 1)
    for i in reversed(path):
        f = divided_difference(f, i)
    return f


def schur(lam: Sequence[int], k: int) -> Poly:
    """Schur polynomial ``S_lam(x_1..x_k)`` as a Grassmannian Schubert polynomial."""
    return schubert(grassmannian(lam, k))


# ----------------------------------------------------------------------
# Schubert expansion

@dataclass(frozen=True)
class SchubertExpansion:
    """Finitely supported map Permutation -> nonzero int."""

    coeffs: Mapping[Permutation, int]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {w: c for w, c in sorted(self.coeffs.items()) if c})

    def __getitem__(self, w: Permutation) -> int:
        return self.coeffs.get(w, 0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other):
        if isinstance(other, SchubertExpansion):
            return dict(self.coeffs) == dict(other.coeffs)
        if isinstance(other, Mapping):
            return dict(self.coeffs) == {w: c for w, c in other.items() if c}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join((f"{c}*" if c != 1 else "") + f"S[{w}]" for w, c in self.coeffs.items())

    def to_json(self) -> list[dict]:
        return [{"perm": list(w.window), "coeff": c} for w, c in self.coeffs.items()]

    @classmethod
    def from_json(cls, records) -> SchubertExpansion:
        return cls({Permutation(r["perm"]): r["coeff"] for r in records})


def expand_in_schubert(f: Poly) -> SchubertExpansion:
    """Coefficients ``c_w`` with ``f == sum c_w S_w``.

    Repeatedly peels off the colex-leading monomial ``x^a``, whose exponent
    vector is the Lehmer code of the next basis element.
    """
    if f.alphabet != "x" and f.terms.keys() - {0}:
        raise ValueError("expand_in_schubert needs a polynomial in x")
    rem = dict(f.terms)
    seen = set(rem)
    out: dict[Permutation, int] = {}
    steps = 0
    while rem:
        steps += 1
        if steps > len(seen):
            raise RuntimeError("Schubert expansion failed to terminate; leading-monomial invariant broken")
        key = max(rem)
        c = rem[key]
        w = from_code(_unpack(key))
        out[w] = out.get(w, 0) + c
        for k, cc in schubert(w).terms.items():
            seen.add(k)
            nv = rem.get(k, 0) - c * cc
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
        if key in rem:
            raise RuntimeError(f"leading monomial of S_{w} is not x^code")
    return SchubertExpansion(out)


def recombine(expansion: SchubertExpansion | Mapping[Permutation, int]) -> Poly:
    out: dict[int, int] = {}
    for w, c in expansion.items():
        for k, cc in schubert(w).terms.items():
            out[k] = out.get(k, 0) + c * cc
    return Poly(out)


def structure_constants(u: Permutation, v: Permutation) -> SchubertExpansion:
    """Expansion of ``S_u * S_v`` in the Schubert basis."""
    key = (u, v) if (u.n, u.window) <= (v.n, v.window) else (v, u)
    hit = PRODUCT_MEMO.get(key)
    if hit is not None:
        return hit
    exp = expand_in_schubert(schubert(u) * schubert(v))
    total = u.length() + v.length()
    bad = [w for w in exp if w.length() != total]
    if bad:
        raise AssertionError(f"S_{u}*S_{v} has terms of wrong length: {bad}")
    return PRODUCT_MEMO.put(key, exp)


def structure_constant(u: Permutation, v: Permutation, w: Permutation) -> int:
    if w.length() != u.length() + v.length():
        return 0
    return structure_constants(u, v)[w]


# ----------------------------------------------------------------------
# substitutions

def psi_p(f: Poly, p: int) -> Poly:
    """Set ``x_p = 0`` and shift ``x_j -> x_{j-1}`` for ``j > p``."""
    if p < 1:
        raise ValueError("p must be positive")
    shift = BITS * (p - 1)
    low = (1 << shift) - 1
    out: dict[int, int] = {}
    for k, c in f.terms.items():
        if (k >> shift) & _MASK:
            continue
        nk = (k & low) | ((k >> (shift + BITS)) << shift)
        out[nk] = out.get(nk, 0) + c
    return Poly(out, f.alphabet)


@dataclass(frozen=True)
class SubsetDescriptor:
    """A subset P of the positive integers known through ``known_upto``.

    ``members`` lists the elements of P up to ``known_upto``; ``tail`` says
    what happens above: ``"in"`` (all larger integers belong to P),
    ``"out"`` (none do) or ``"unknown"``.
    """

    members: tuple[int, ...]
    known_upto: int
    tail: str = "out"

    def __post_init__(self):
        m = tuple(self.members)
        if any(m[i] >= m[i + 1] for i in range(len(m) - 1)) or (m and m[0] < 1):
            raise ValueError("members must be strictly increasing positive integers")
        if m and m[-1] > self.known_upto:
            raise ValueError("members exceed known_upto")
        if self.tail not in ("in", "out", "unknown"):
            raise ValueError(f"bad tail rule {self.tail!r}")
        object.__setattr__(self, "members", m)

    @classmethod
    def finite(cls, members: Iterable[int]) -> SubsetDescriptor:
        m = tuple(sorted(members))
        return cls(m, m[-1] if m else 0, "out")

    @classmethod
    def interval(cls, n: int) -> SubsetDescriptor:
        """P = [n] = {1..n}."""
        return cls(tuple(range(1, n + 1)), n, "out")

    @classmethod
    def cofinite(cls, members: Iterable[int], above: int) -> SubsetDescriptor:
        """``members`` together with every integer greater than ``above``."""
        return cls(tuple(sorted(members)), above, "in")

    def classify(self, i: int) -> tuple[str, int]:
        """``("y", j)`` if i is the j-th element of P, else ``("z", j)``."""
        if i > self.known_upto:
            if self.tail == "unknown":
                raise ValueError(f"subset descriptor does not classify x{i}")
            below_in = len(self.members)
            below_out = self.known_upto - below_in
            extra = i - self.known_upto
            return ("y", below_in + extra) if self.tail == "in" else ("z", below_out + extra)
        pos = sum(1 for p in self.members if p <= i)
        if i in self.members:
            return "y", pos
        return "z", i - pos


def rename(f: Poly, letter: str) -> Poly:
    """Copy of an x polynomial with ``x_j`` renamed to ``y_j`` or ``z_j``."""
    if letter not in ("y", "z"):
        raise ValueError(f"letter must be 'y' or 'z', not {letter!r}")
    if f.alphabet != "x" and f.terms.keys() - {0}:
        raise ValueError("rename needs a polynomial in x")
    off = 0 if letter == "y" else 1
    out = {}
    for k, c in f.terms.items():
        arr = []
        for e in _unpack(k):
            arr.extend((e, 0) if off == 0 else (0, e))
        out[_pack(arr)] = c
    return Poly(out, "yz")


def psi_P(f: Poly, P: SubsetDescriptor) -> Poly:
    """Send ``x_{p_j} -> y_j`` and ``x_{pc_j} -> z_j`` (pc = complement of P)."""
    out: dict[int, int] = {}
    for k, c in f.terms.items():
        e = _unpack(k)
        vec: dict[int, int] = {}
        for i, v in enumerate(e, 1):
            if v:
                letter, j = P.classify(i)
                slot = 2 * j - (2 if letter == "y" else 1)
                vec[slot] = v
        arr = [0] * (max(vec) + 1 if vec else 0)
        for slot, v in vec.items():
            arr[slot] = v
        nk = _pack(arr)
        out[nk] = out.get(nk, 0) + c
    return Poly(out, "yz")


def expand_two_alphabet(g: Poly) -> dict[tuple[Permutation, Permutation], int]:
    """Coefficients ``d[u, v]`` with ``g == sum d[u,v] S_u(y) S_v(z)``."""
    # y-part -> (z-part -> coeff), both packed as one-alphabet keys
    if g.alphabet != "yz" and g.terms.keys() - {0}:
        raise ValueError("expand_two_alphabet needs a polynomial in y and z")
    by_y: dict[int, dict[int, int]] = {}
    for (ye, ze), c in g.split().items():
        row = by_y.setdefault(_pack(ye), {})
        zk = _pack(ze)
        row[zk] = row.get(zk, 0) + c
    y_coeffs: dict[Permutation, dict[int, int]] = {}
    seen = set(by_y)
    steps = 0
    while by_y:
        steps += 1
        if steps > len(seen):
            raise RuntimeError("two-alphabet expansion failed to terminate")
        key = max(by_y)
        lead = by_y[key]
        u = from_code(_unpack(key))
        acc = y_coeffs.setdefault(u, {})
        for zk, c in lead.items():
            acc[zk] = acc.get(zk, 0) + c
        lead = dict(lead)
        for yk, cy in schubert(u).terms.items():
            seen.add(yk)
            row = by_y.setdefault(yk, {})
            for zk, c in lead.items():
                nv = row.get(zk, 0) - cy * c
                if nv:
                    row[zk] = nv
                else:
                    row.pop(zk, None)
            if not row:
                del by_y[yk]
    out: dict[tuple[Permutation, Permutation], int] = {}
    for u, zpoly in y_coeffs.items():
        for v, c in expand_in_schubert(Poly(zpoly)).items():
            out[(u, v)] = c
    return dict(sorted(out.items()))
