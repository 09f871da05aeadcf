"""
The graded order on S_infinity built from k-Bruhat intervals: ``eta <= zeta``
when some ``u <=_k eta u <=_k zeta u``.

It is computed here without any witness, through three local conditions on
``eta`` relative to the up/down sets of ``zeta``, and ranked by a closed
counting formula. The witness definitions are kept alongside as
brute-force oracles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .bruhat import LabeledInterval, leq_k, witness
from .perm import Permutation, all_perms, compress, grassmannian, identity
from .poly import structure_constant
from .tabx import partition, partitions

__all__ = [
    "UpDownProfile", "profile", "shape_equivalent", "q_leq", "q_leq_witness",
    "rank", "witness_rank", "q_interval", "is_disjoint_product",
    "skew_coefficient", "skew_coefficients",
]


@dataclass(frozen=True)
class UpDownProfile:
    up: frozenset[int]
    down: frozenset[int]

    @property
    def support(self) -> frozenset[int]:
        return self.up | self.down


def profile(zeta: Permutation) -> UpDownProfile:
    up = frozenset(a for a in range(1, zeta.n + 1) if zeta(a) > a)
    down = frozenset(a for a in range(1, zeta.n + 1) if zeta(a) < a)
    return UpDownProfile(up, down)


def shape_equivalent(zeta: Permutation, eta: Permutation) -> bool:
    return compress(zeta) == compress(eta)


def q_leq(eta: Permutation, zeta: Permutation) -> bool:
    """``eta <= zeta`` in the graded order, by the three local conditions."""
    n = max(eta.n, zeta.n)
    for a in range(1, n + 1):
        ea = eta(a)
        if a < ea and ea > zeta(a):
            return False
        if a > ea and ea < zeta(a):
            return False
    prof = profile(zeta)
    for block in (prof.up, prof.down):
        pts = sorted(block)
        for i, a in enumerate(pts):
            for b in pts[i + 1:]:
                if zeta(a) < zeta(b) and not eta(a) < eta(b):
                    return False
    return True


def q_leq_witness(eta: Permutation, zeta: Permutation, n: int) -> bool:
    """Brute force: is there ``u`` in S_n and k with ``u <=_k eta u <=_k zeta u``?"""
    for u in all_perms(n):
        eu, zu = eta * u, zeta * u
        for k in range(1, n):
            if leq_k(u, eu, k) and leq_k(eu, zu, k):
                return True
    return False


def rank(zeta: Permutation) -> int:
    """Closed-form rank: inversions between the images of the up and down
    sets, minus three correction counts."""
    prof = profile(zeta)
    up, down = sorted(prof.up), sorted(prof.down)
    zu = [zeta(a) for a in up]
    zd = [zeta(a) for a in down]
    main = sum(1 for x in zu for y in zd if x > y)
    c1 = sum(1 for a in up for b in down if a > b)
    c2 = sum(1 for a in up for b in up if a > b and zeta(a) < zeta(b))
    c3 = sum(1 for a in down for b in down if a > b and zeta(a) < zeta(b))
    return main - (c1 + c2 + c3)


def witness_rank(zeta: Permutation, u: Permutation | None = None, k: int | None = None) -> int:
    """``l(zeta u) - l(u)`` for a witness ``u <=_k zeta u``."""
    if u is None:
        u, k = witness(zeta)
    if not leq_k(u, zeta * u, k):
        raise ValueError(f"({u}, {k}) is not a witness for {zeta}")
    return (zeta * u).length() - u.length()


def q_interval(zeta: Permutation, bottom: Permutation | None = None) -> LabeledInterval:
    """``[bottom, zeta]`` in the graded order (bottom defaults to e)."""
    bottom = identity() if bottom is None else bottom
    if not q_leq(bottom, zeta):
        raise ValueError(f"{bottom} is not below {zeta}")
    supp = sorted(profile(zeta).support)
    nodes = []
    for images in itertools.permutations(supp):
        m = dict(zip(supp, images))
        n = max(supp, default=0)
        eta = Permutation(m.get(i, i) for i in range(1, n + 1))
        if q_leq(bottom, eta) and q_leq(eta, zeta):
            nodes.append(eta)
    ranks = {v: rank(v) for v in nodes}
    covers = set()
    for lo in nodes:
        for hi in nodes:
            if ranks[hi] == ranks[lo] + 1 and q_leq(lo, hi):
                covers.add((lo, hi, None))
    return LabeledInterval(bottom, zeta, "q", frozenset(nodes), frozenset(covers), None, ranks)


def is_disjoint_product(zeta: Permutation, eta: Permutation) -> bool:
    if profile(zeta).support & profile(eta).support:
        return False
    return rank(zeta * eta) == rank(zeta) + rank(eta)


def skew_coefficient(zeta: Permutation, lam: Sequence[int], u: Permutation | None = None,
                     k: int | None = None) -> int:
    """``c^{zeta u}_{u, v(lam, k)}`` for a witness ``u <=_k zeta u``.

    Without an explicit witness the canonical one from
    :func:`schubcalc.bruhat.witness` is used.
    """
    lam = partition(lam)
    if u is None:
        u, k = witness(zeta, k)
    elif k is None or not leq_k(u, zeta * u, k):
        raise ValueError(f"({u}, {k}) is not a witness for {zeta}")
    if sum(lam) != (zeta * u).length() - u.length():
        return 0
    if len(lam) > k:
        return 0
    return structure_constant(u, grassmannian(lam, k), zeta * u)


def skew_coefficients(zeta: Permutation, u: Permutation | None = None, k: int | None = None) -> dict:
    """All nonzero ``c^zeta_lam``, keyed by partition."""
    if u is None:
        u, k = witness(zeta, k)
    r = (zeta * u).length() - u.length()
    out = {}
    for lam in partitions(r):
        c = skew_coefficient(zeta, lam, u, k)
        if c:
            out[lam] = c
    return out
