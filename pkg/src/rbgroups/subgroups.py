"""Subgroups, the subgroup lattice, quotients and exact factorizations.

The lattice search is the cyclic extension method: a subgroup S grows to
S' = <S, t> where t normalizes S and t^p lies in S for a prime p, so
|S'| = p|S|.  Walking these prime steps from the trivial subgroup finds
every solvable subgroup; every other subgroup sits above some perfect
subgroup through such a chain (repeatedly cut a prime-index normal
subgroup under the derived quotient), so the search additionally seeds
every perfect subgroup.  Perfect seeds are found by a bounded
two-element generation scan (involution plus arbitrary element), which
covers every perfect subgroup at catalog scale; see the docstring of
``_perfect_seed_subgroups``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InputFormatError, PropertyFailure, ResourceCapError
from .groups import FiniteGroup

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            if d not in out:
                out.append(d)
            n //= d
        d += 1
    if n > 1 and n not in out:
        out.append(n)
    return out


def divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


class Subgroup:
    """An immutable subgroup: sorted member indices plus the generators
    that produced it."""

    __slots__ = ("parent", "members", "gens", "_key")

    def __init__(self, parent, members, gens=()):
        self.parent = parent
        self.members = np.asarray(members, dtype=np.int64)
        self.gens = tuple(int(g) for g in gens)
        self._key = None

    @property
    def order(self):
        return int(self.members.size)

    def key(self):
        if self._key is None:
            self._key = self.members.tobytes()
        return self._key

    def mask(self):
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.members] = True
        return m

    def contains(self, g):
        i = np.searchsorted(self.members, g)
        return i < self.members.size and self.members[i] == g

    def gen_elements(self):
        """A generating set: the recorded one, else all members."""
        return self.gens if self.gens else tuple(int(g) for g in self.members)

    def as_group(self, name=None, validate=True):
        """Re-index the subgroup as a standalone FiniteGroup.

        Returns (group, to_parent) where to_parent[i] is the parent index
        of element i.  Identity stays at index 0 because members are
        sorted and contain 0.
        """
        G = self.parent
        mem = self.members
        pos = np.full(G.order, -1, dtype=np.int64)
        pos[mem] = np.arange(mem.size)
        tab = pos[G.mul_block(mem, mem)]
        if (tab < 0).any():
            raise PropertyFailure("subgroup-not-closed")
        gens = tuple(int(pos[g]) for g in self.gens)
        H = FiniteGroup.from_table(tab, name=name or f"{G.name}|sub{self.order}",
                                   gens=gens, validate=validate)
        return H, mem.copy()

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent \
            and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.name})"


def _closure_members(G, gens, bound=None):
    """Members of <gens> as a sorted array, or None if the closure
    exceeds ``bound``."""
    n = G.order
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    gen_arr = np.unique(np.asarray([int(g) for g in gens], dtype=np.int64)) \
        if gens else np.empty(0, dtype=np.int64)
    gen_arr = gen_arr[gen_arr != 0]
    if gen_arr.size == 0:
        return np.array([0], dtype=np.int64)
    mask[gen_arr] = True
    frontier = gen_arr
    size = int(mask.sum())
    while frontier.size:
        prod = np.unique(G.mul_block(frontier, gen_arr).ravel())
        new = prod[~mask[prod]]
        mask[new] = True
        size += new.size
        if bound is not None and size > bound:
            return None
        frontier = new
    return np.nonzero(mask)[0].astype(np.int64)


def closure(G, gens) -> Subgroup:
    """The subgroup generated by ``gens``."""
    mem = _closure_members(G, list(gens))
    return Subgroup(G, mem, tuple(int(g) for g in gens))


def trivial_subgroup(G) -> Subgroup:
    return Subgroup(G, [0], ())


def whole_group(G) -> Subgroup:
    return Subgroup(G, np.arange(G.order), G.find_generating_set())


def normalizer_mask(G, sub: Subgroup) -> np.ndarray:
    """Boolean mask of the normalizer of ``sub`` in G."""
    mask = np.ones(G.order, dtype=bool)
    mm = sub.mask()
    for s in sub.gen_elements():
        if s == 0:
            continue
        mask &= mm[G.conjugate_all(int(s))]
    return mask


def conjugate_subgroup(G, sub: Subgroup, g) -> Subgroup:
    """g^-1 * S * g."""
    ig = G.inv(g)
    left = G.row(ig)[sub.members]
    mem = np.sort(G.mul_vec(left, np.full(sub.members.size, g, dtype=np.int64)))
    gens = tuple(int(G.mul(G.mul(ig, s), g)) for s in sub.gens)
    return Subgroup(G, mem, gens)


def is_normal(G, sub: Subgroup, within: Subgroup | None = None) -> bool:
    """Is ``sub`` normal in ``within`` (default: all of G)?"""
    mm = sub.mask()
    gens = within.gen_elements() if within is not None else G.find_generating_set()
    for g in gens:
        left = G.row(G.inv(int(g)))[sub.members]
        conj = G.mul_vec(left, np.full(sub.members.size, int(g), dtype=np.int64))
        if not mm[conj].all():
            return False
    return True


def normal_closure(G, elems, under=None) -> Subgroup:
    """Smallest subgroup containing ``elems`` normalized by ``under``
    (default: generators of G)."""
    under = [int(g) for g in (under if under is not None else G.find_generating_set())]
    cur = [int(e) for e in elems]
    while True:
        mem = _closure_members(G, cur)
        mm = np.zeros(G.order, dtype=bool)
        mm[mem] = True
        extra = []
        for g in under:
            left = G.row(G.inv(g))[mem]
            conj = G.mul_vec(left, np.full(mem.size, g, dtype=np.int64))
            bad = conj[~mm[conj]]
            extra.extend(int(b) for b in bad[:8])
        if not extra:
            return Subgroup(G, mem, tuple(cur))
        cur = [int(x) for x in mem] + extra


def derived_subgroup(G) -> Subgroup:
    """The commutator subgroup, as the normal closure of generator
    commutators."""
    gens = G.find_generating_set()
    coms = []
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            c = G.commutator(int(a), int(b))
            if c:
                coms.append(c)
    if not coms:
        return trivial_subgroup(G)
    return normal_closure(G, coms)


def _perfect_seed_subgroups(G, max_order):
    """Perfect subgroups of order <= max_order (excluding the trivial one).

    Strategy: every nontrivial perfect group has even order, so it
    contains an involution; at catalog scale every perfect subgroup is
    simple and hence generated by an involution together with one more
    element.  Scan <x, y> for x over involution class representatives
    and y over all elements with a size bound, keep the perfect results
    and close the collection under conjugation.
    """
    n = G.order
    seeds = {}
    orders = G.element_orders()

    def record(mem, gens):
        key = mem.tobytes()
        if key not in seeds:
            seeds[key] = Subgroup(G, mem, gens)
            return True
        return False

    if G.order <= max_order:
        der = derived_subgroup(G)
        if der.order == n:
            record(np.arange(n, dtype=np.int64), G.find_generating_set())
    proper_bound = min(max_order, n // 2)
    if proper_bound >= 60:
        reps = [int(c[0]) for c in G.conjugacy_classes() if orders[c[0]] == 2]
        for x in reps:
            for y in range(1, n):
                mem = _closure_members(G, [x, y], bound=proper_bound)
                if mem is None or mem.size < 60 or mem.size % 4:
                    continue
                sub = Subgroup(G, mem, (x, y))
                dm = normal_closure(G, [G.commutator(x, y)], under=(x, y))
                if dm.order == mem.size:
                    record(mem, (x, y))
        # close under conjugation
        queue = deque(seeds.values())
        while queue:
            S = queue.popleft()
            for g in G.find_generating_set():
                T = conjugate_subgroup(G, S, int(g))
                if record(T.members, T.gens):
                    queue.append(seeds[T.key()])
    return [s for s in seeds.values()]


def all_subgroups(G, max_order=None, *, lattice_cap=10000, allowed_orders=None,
                  prune=None):
    """Every subgroup of order <= max_order, each exactly once, ordered by
    (order, member tuple).

    ``allowed_orders`` restricts which orders may appear at all (used by
    the operator-graph search, where only divisors of a target order can
    occur); ``prune`` is an optional predicate on member arrays — a
    subgroup failing it is dropped together with its whole extension
    subtree, which is sound whenever the property is inherited by
    subgroups.
    """
    n = G.order
    if n > lattice_cap:
        raise ResourceCapError(f"order {n} exceeds the lattice cap {lattice_cap}")
    if max_order is None:
        max_order = n
    max_order = min(max_order, n)
    ok_orders = set(d for d in divisors(n) if d <= max_order)
    if allowed_orders is not None:
        ok_orders &= set(int(a) for a in allowed_orders)

    found = {}
    queue = deque()

    def register(members, gens):
        if members.size not in ok_orders:
            return None
        if prune is not None and not prune(members):
            return None
        key = members.tobytes()
        if key in found:
            return None
        sub = Subgroup(G, members, gens)
        found[key] = sub
        queue.append(sub)
        return sub

    register(np.array([0], dtype=np.int64), ())
    if max_order >= 60 and n >= 60:
        for seed in _perfect_seed_subgroups(G, max_order):
            register(seed.members, seed.gens)

    primes = _prime_factors(n)
    while queue:
        S = queue.popleft()
        k = S.order
        usable = [p for p in primes if p * k in ok_orders]
        if not usable:
            continue
        nm = normalizer_mask(G, S)
        mm = S.mask()
        cand = np.nonzero(nm & ~mm)[0]
        if cand.size == 0:
            continue
        for p in usable:
            tp = G.pow_vec(cand, p)
            ts = cand[mm[tp]]
            for t in ts:
                t = int(t)
                powers = [0]
                cur = t
                for _ in range(p - 1):
                    powers.append(cur)
                    cur = G.mul(cur, t)
                block = G.mul_block(S.members, np.asarray(powers, dtype=np.int64))
                members = np.sort(block.ravel())
                register(members, S.gens + (t,))

    subs = sorted(found.values(), key=lambda s: (s.order, s.members.tobytes()))
    return subs


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    mem = np.intersect1d(A.members, B.members)
    return Subgroup(A.parent, mem, ())


def product_set(A: Subgroup, B: Subgroup) -> np.ndarray:
    """Boolean mask of the element set A*B (not generally a subgroup)."""
    prods = np.unique(A.parent.mul_block(A.members, B.members))
    mask = np.zeros(A.parent.order, dtype=bool)
    mask[prods] = True
    return mask


@dataclass(frozen=True)
class Factorization:
    """An (unordered) pair of subgroups with H ∩ L = 1 and |H||L| = |G|."""

    h: Subgroup
    l: Subgroup
    exact: bool = True

    @property
    def group(self):
        return self.h.parent

    def orders(self):
        return (self.h.order, self.l.order)


def exact_factorizations(G, subs=None):
    """All exact factorizations {H, L} of G, each pair once, including
    the trivial {G, 1}.

    |HL| = |H||L| / |H ∩ L| holds for any two subgroups, so checking
    |H||L| = |G| and trivial intersection suffices; the product covering
    G is automatic and is asserted by the test suite, not recomputed
    here.
    """
    n = G.order
    if n == 1:
        t = trivial_subgroup(G)
        return [Factorization(h=t, l=t)]
    if subs is None:
        subs = all_subgroups(G)
    by_order = {}
    for s in subs:
        by_order.setdefault(s.order, []).append(s)
    out = []
    for d1 in sorted(by_order):
        d2, rem = divmod(n, d1)
        if rem or d1 > d2 or d2 not in by_order:
            continue
        left = by_order[d1]
        right = by_order[d2]
        rmask = np.stack([s.mask() for s in right])
        for i, A in enumerate(left):
            am = A.mask()
            inter = (rmask & am).sum(axis=1)
            start = i + 1 if d1 == d2 else 0
            for j in np.nonzero(inter == 1)[0]:
                if j < start:
                    continue
                out.append(Factorization(h=right[j], l=A))
    out.sort(key=lambda f: (f.h.order, f.h.key(), f.l.key()))
    return out


def quotient(H: Subgroup, N: Subgroup) -> FiniteGroup:
    """The quotient group H/N (N must be normal in H)."""
    Q, _ = quotient_with_projection(H, N)
    return Q


def quotient_with_projection(H: Subgroup, N: Subgroup):
    """Quotient H/N plus the projection array over H's members.

    Returns (Q, proj) with proj[i] = Q-index of the coset of H.members[i].
    """
    G = H.parent
    if not H.mask()[N.members].all():
        raise InputFormatError("N is not contained in H")
    if not is_normal(G, N, within=H):
        raise InputFormatError("N is not normal in H")
    cosets = G.mul_block(H.members, N.members)
    reps = cosets.min(axis=1)
    uniq = np.unique(reps)
    rep_index = {int(r): i for i, r in enumerate(uniq)}
    proj = np.array([rep_index[int(r)] for r in reps], dtype=np.int64)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[H.members] = np.arange(H.members.size)
    prod = G.mul_block(uniq, uniq)
    qtab = proj[pos[prod]]
    Q = FiniteGroup.from_table(qtab, name=f"{G.name}|q{H.members.size // N.members.size}")
    return Q, proj


def is_simple(G, method="auto"):
    """No proper nontrivial normal subgroup.

    ``classes`` checks that every nontrivial conjugacy class has full
    normal closure (cheap); ``lattice`` scans all subgroups for
    normality.
    """
    if G.order == 1:
        return False
    if method == "auto":
        method = "lattice" if G.order <= 660 else "classes"
    if method == "classes":
        for c in G.conjugacy_classes():
            if len(c) == 1 and c[0] == 0:
                continue
            if normal_closure(G, [int(c[0])]).order != G.order:
                return False
        return True
    for s in all_subgroups(G):
        if 1 < s.order < G.order and is_normal(G, s):
            return False
    return True
