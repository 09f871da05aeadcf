"""
Bruhat order, k-Bruhat order, coloured chains and labelled intervals.

Covers are written as right multiplication ``u -> u(a,b)`` by a transposition
of positions. In the k-Bruhat order a cover needs ``a <= k < b`` and carries
the label ``u(b)``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .perm import Permutation, Transposition
from .poly import Poly, expand_in_schubert, schubert

__all__ = [
    "is_cover", "bruhat_covers", "k_covers", "bruhat_leq", "leq_k",
    "k_reachable", "greedy_chain", "greedy_chain_zeta", "LabeledInterval",
    "interval", "count_I_chains", "count_I_chains_monk", "monk_operator_power",
    "monk_product", "is_minimal_coset_rep", "pieri_targets",
    "pieri_targets_poly", "chain_word", "is_isomorphic", "is_isomorphism",
    "find_witness", "witness",
]


def is_cover(u: Permutation, a: int, b: int) -> bool:
    """Whether ``u < u(a,b)`` is a Bruhat cover (``a < b``)."""
    ua, ub = u(a), u(b)
    if ua > ub:
        return False
    return not any(ua < u(c) < ub for c in range(a + 1, b))


def bruhat_covers(u: Permutation, n: int) -> set[tuple[Transposition, Permutation]]:
    """All upper covers of ``u`` inside S_n."""
    if u.n > n:
        raise ValueError(f"{u} does not lie in S_{n}")
    out = set()
    w = u.padded(n)
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            if w[a - 1] < w[b - 1] and not any(w[a - 1] < w[c - 1] < w[b - 1] for c in range(a + 1, b)):
                out.add((Transposition(a, b), u.swap_positions(a, b)))
    return out


def k_covers(u: Permutation, k: int, n: int | None = None) -> list[tuple[int, int, Permutation]]:
    """Upper covers ``(a, b, u(a,b))`` in the k-Bruhat order.

    Without ``n`` this is the full set of covers in S_infinity, which only
    needs positions up to ``max(u.n, k) + 1``.
    """
    n = max(u.n, k) + 1 if n is None else n
    w = u.padded(n)
    out = []
    for a in range(1, min(k, n) + 1):
        wa = w[a - 1]
        for b in range(max(a, k) + 1, n + 1):
            wb = w[b - 1]
            if wb <= wa:
                continue
            if not any(wa < w[c - 1] < wb for c in range(a + 1, b)):
                out.append((a, b, u.swap_positions(a, b)))
    return out


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Bruhat comparison by the tableau criterion."""
    n = max(u.n, w.n)
    uw, ww = u.padded(n), w.padded(n)
    for i in range(1, n):
        if any(x > y for x, y in zip(sorted(uw[:i]), sorted(ww[:i]))):
            return False
    return True


def leq_k(u: Permutation, w: Permutation, k: int) -> bool:
    """``u <=_k w`` through the two position conditions.

    I: ``u(a) <= w(a)`` for ``a <= k`` and ``u(b) >= w(b)`` for ``b > k``.
    II: any pair ``a < b`` that is an inversion of w but not of u straddles k.
    """
    n = max(u.n, w.n)
    uw, ww = u.padded(n), w.padded(n)
    for i in range(n):
        if i < k:
            if uw[i] > ww[i]:
                return False
        elif uw[i] < ww[i]:
            return False
    for a in range(n):
        for b in range(a + 1, n):
            if uw[a] < uw[b] and ww[a] > ww[b] and not (a < k <= b):
                return False
    return True


def k_reachable(u: Permutation, w: Permutation, k: int) -> bool:
    """Whether w is reached from u by k-Bruhat covers (search, no shortcuts)."""
    if u == w:
        return True
    n = max(u.n, w.n)
    target = w.length()
    frontier = {u}
    for _ in range(target - u.length()):
        frontier = {v for x in frontier for _, _, v in k_covers(x, k, n)}
        if w in frontier:
            return True
    return False


def greedy_chain(u: Permutation, w: Permutation, k: int) -> list[Permutation]:
    """Saturated k-Bruhat chain ``w = w_0 > w_1 > ... > w_m = u``."""
    if not leq_k(u, w, k):
        raise ValueError(f"{u} and {w} violate the k-Bruhat conditions for k={k}")
    n = max(u.n, w.n)
    out = [w]
    cur = w
    while cur != u:
        a = min((i for i in range(1, k + 1) if u(i) < cur(i)), key=u)
        wa = cur(a)
        b = max((i for i in range(k + 1, n + 1) if cur(i) < wa <= u(i)), key=u)
        cur = cur.swap_positions(a, b)
        out.append(cur)
    return out


def greedy_chain_zeta(zeta: Permutation) -> list[Permutation]:
    """The chain algorithm restated on ``zeta = w u^-1``: ``zeta, zeta_1, ..., e``."""
    out = [zeta]
    cur = zeta
    while not cur.is_identity():
        n = cur.n
        alpha = min(i for i in range(1, n + 1) if i < cur(i))
        za = cur(alpha)
        beta = max(i for i in range(1, n + 1) if cur(i) < za <= i)
        cur = cur.swap_positions(alpha, beta)
        out.append(cur)
    return out


# ----------------------------------------------------------------------
# labelled intervals

@dataclass(frozen=True)
class LabeledInterval:
    bottom: Permutation
    top: Permutation
    kind: str  # "bruhat", "k" or "q"
    nodes: frozenset
    covers: frozenset  # (lower, upper, label-or-None)
    k: int | None = None
    rank: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if not self.rank:
            self.rank.update({v: v.length() for v in self.nodes})

    def upper_covers(self) -> dict:
        up = defaultdict(list)
        for lo, hi, lab in self.covers:
            up[lo].append((hi, lab))
        return up

    def count_maximal_chains(self) -> int:
        up = self.upper_covers()
        count = {self.bottom: 1}
        for v in sorted(self.nodes, key=lambda x: (self.rank[x], x)):
            c = count.get(v, 0)
            for hi, _ in up.get(v, ()):
                count[hi] = count.get(hi, 0) + c
        return count.get(self.top, 0)

    def maximal_chains(self) -> list[tuple[Permutation, ...]]:
        """All bottom-to-top saturated chains, in a deterministic order."""
        up = self.upper_covers()
        out = []

        def walk(path):
            v = path[-1]
            if v == self.top:
                out.append(tuple(path))
                return
            for hi, _ in sorted(up.get(v, ()), key=lambda t: t[0]):
                walk(path + [hi])

        walk([self.bottom])
        return out

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from((lo, hi) for lo, hi, _ in self.covers)
        return g

    def to_dot(self, name: str = "interval") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for v in sorted(self.nodes, key=lambda x: (self.rank[x], x)):
            lines.append(f'  "{v}";')
        for lo, hi, lab in sorted(self.covers, key=lambda c: (self.rank[c[0]], c[0], c[1])):
            attr = f' [label="{lab}"]' if lab is not None else ""
            lines.append(f'  "{lo}" -> "{hi}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "bottom": list(self.bottom.window),
            "top": list(self.top.window),
            "nodes": [list(v.window) for v in sorted(self.nodes, key=lambda x: (self.rank[x], x))],
            "covers": [[list(lo.window), list(hi.window), lab]
                       for lo, hi, lab in sorted(self.covers, key=lambda c: (self.rank[c[0]], c[0], c[1]))],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def interval(u: Permutation, w: Permutation, k: int | None = None) -> LabeledInterval:
    """The Bruhat interval ``[u, w]`` (k None) or the k-Bruhat interval ``[u, w]_k``."""
    if k is None:
        if not bruhat_leq(u, w):
            raise ValueError(f"{u} is not below {w} in the Bruhat order")
        n = max(u.n, w.n)

        def step(v):
            return [(t.a, t.b, x) for t, x in bruhat_covers(v, n)]

        below = lambda v: bruhat_leq(v, w)
    else:
        if not leq_k(u, w, k):
            raise ValueError(f"{u} is not below {w} in the {k}-Bruhat order")
        n = max(u.n, w.n)

        def step(v):
            return k_covers(v, k, n)

        below = lambda v: leq_k(v, w, k)
    nodes = {u}
    covers = set()
    frontier = [u]
    target = w.length()
    while frontier:
        nxt = []
        for v in frontier:
            if v.length() >= target:
                continue
            for a, b, x in step(v):
                if below(x):
                    covers.add((v, x, v(b) if k is not None else None))
                    if x not in nodes:
                        nodes.add(x)
                        nxt.append(x)
        frontier = nxt
    return LabeledInterval(u, w, "bruhat" if k is None else "k", frozenset(nodes), frozenset(covers), k)


def is_isomorphic(p: LabeledInterval, q: LabeledInterval) -> bool:
    """Poset isomorphism of the two Hasse diagrams (labels ignored)."""
    if len(p.nodes) != len(q.nodes) or len(p.covers) != len(q.covers):
        return False
    return nx.is_isomorphic(p.graph(), q.graph())


def is_isomorphism(p: LabeledInterval, q: LabeledInterval, f) -> bool:
    """Whether the node map ``f`` is an isomorphism of Hasse diagrams."""
    image = {v: f(v) for v in p.nodes}
    if set(image.values()) != set(q.nodes) or len(set(image.values())) != len(p.nodes):
        return False
    mapped = {(image[lo], image[hi]) for lo, hi, _ in p.covers}
    return mapped == {(lo, hi) for lo, hi, _ in q.covers}


# ----------------------------------------------------------------------
# coloured chains and Monk's formula

def monk_product(u: Permutation, k: int) -> dict[Permutation, int]:
    """``S_u * (x_1 + ... + x_k)`` by Monk's formula: the k-Bruhat covers of u."""
    return {x: 1 for _, _, x in k_covers(u, k)}


def count_I_chains(u: Permutation, w: Permutation, I: Iterable[int], n: int | None = None) -> int:
    """Number of I-chains from u to w, by dynamic programming over ``[u, w]``."""
    I = frozenset(I)
    if not bruhat_leq(u, w):
        return 0
    n = max(u.n, w.n) if n is None else n
    if n < max(u.n, w.n):
        raise ValueError("ambient n too small")
    iv = interval(u, w)
    count = {u: 1}
    for v in sorted(iv.nodes, key=lambda x: (x.length(), x)):
        c = count.get(v, 0)
        if not c:
            continue
        for t, x in bruhat_covers(v, n):
            if x in iv.nodes:
                colours = sum(1 for i in range(t.a, t.b) if i in I)
                if colours:
                    count[x] = count.get(x, 0) + c * colours
    return count.get(w, 0)


def _monk_sum(I: Iterable[int]) -> Poly:
    f = Poly()
    for i in I:
        for j in range(1, i + 1):
            f = f + Poly.var(j)
    return f


def monk_operator_power(u: Permutation, I: Iterable[int], m: int):
    """Schubert expansion of ``S_u * (sum_{i in I} S_{s_i})^m``."""
    return expand_in_schubert(schubert(u) * _monk_sum(sorted(set(I))) ** m)


def count_I_chains_monk(u: Permutation, w: Permutation, I: Iterable[int]) -> int:
    """Number of I-chains from u to w, read off from iterated Monk products."""
    m = w.length() - u.length()
    if m < 0:
        return 0
    return monk_operator_power(u, I, m)[w]


def is_minimal_coset_rep(v: Permutation, I: Iterable[int]) -> bool:
    """v is minimal in ``v W_J`` where J = simple reflections outside I."""
    return v.descents() <= frozenset(I)


def pieri_targets(v: Permutation, p: int) -> set[Permutation]:
    """All w with ``v ->^{c_p} w``: (p-1)-Bruhat chains of length p-1 from v
    whose labels strictly decrease."""
    if p < 1:
        raise ValueError("p must be positive")
    k = p - 1
    states = {(v, None)}
    for _ in range(k):
        nxt = set()
        for cur, last in states:
            for a, b, x in k_covers(cur, k):
                lab = cur(b)
                if last is None or lab < last:
                    nxt.add((x, lab))
        states = nxt
    return {x for x, _ in states}


def pieri_targets_poly(v: Permutation, p: int) -> set[Permutation]:
    """Support of ``S_v * x_1 ... x_{p-1}`` in the Schubert basis."""
    mono = Poly.from_exponents({(1,) * (p - 1): 1})
    return set(expand_in_schubert(schubert(v) * mono))


def chain_word(chain: Sequence[Permutation], k: int) -> tuple[int, ...]:
    """Labels ``u(b)`` of the covers of an ascending k-Bruhat chain."""
    word = []
    for lo, hi in zip(chain, chain[1:]):
        n = max(lo.n, hi.n)
        diff = [i for i in range(1, n + 1) if lo(i) != hi(i)]
        if len(diff) != 2:
            raise ValueError(f"{lo} -> {hi} is not a transposition step")
        a, b = diff
        if not (a <= k < b and lo.swap_positions(a, b) == hi and is_cover(lo, a, b)):
            raise ValueError(f"{lo} -> {hi} is not a {k}-Bruhat cover")
        word.append(lo(b))
    return tuple(word)


# ----------------------------------------------------------------------
# witnesses u <=_k zeta u

def witness(zeta: Permutation, k: int | None = None) -> tuple[Permutation, int]:
    """A pair ``(u, k)`` with ``u <=_k zeta u``.

    The first k positions of u hold the points zeta moves up, padded with
    points beyond the support if a larger k is requested; the rest follow.
    Within each block values are ordered by their image under zeta, which
    makes both k-Bruhat conditions hold.
    """
    n = max(zeta.n, 1)
    up = [a for a in range(1, n + 1) if zeta(a) > a]
    if k is None:
        k = max(len(up), 1)
    if k < len(up):
        raise ValueError(f"k must be at least {len(up)}")
    extra = list(range(n + 1, n + 1 + k - len(up)))
    first = sorted(up + extra, key=zeta)
    used = set(first)
    rest = sorted((a for a in range(1, n + 1 + len(extra)) if a not in used), key=zeta)
    u = Permutation(first + rest)
    return u, k


def find_witness(zeta: Permutation, n: int, k: int | None = None):
    """Lexicographically first ``(u, k)`` in S_n with ``u <=_k zeta u``, or None."""
    from .perm import all_perms

    ks = range(1, n) if k is None else (k,)
    for u in all_perms(n):
        for kk in ks:
            if leq_k(u, zeta * u, kk):
                return u, kk
    return None
