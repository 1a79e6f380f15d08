"""Finite groups on canonical 0-based element indices.

Elements of a group of order n are the integers 0..n-1 and index 0 is
always the identity.  Two backends exist:

* a dense Cayley table (``n x n`` array), the default for n <= 10,000;
* a permutation backend: generators act on a finite point set, elements
  are discovered breadth-first from the identity and indexed through a
  hash map keyed by the permutation bytes.

The permutation backend promotes a dense row cache lazily when the table
fits the memory budget; every higher-level algorithm talks to the
vector accessors (``row``, ``col``, ``mul_block``, ``mul_vec``) and does
not care which backend is underneath.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InputFormatError, ResourceCapError

Element = int

#: memory budget for dense multiplication tables (2 bytes per entry)
DENSE_CAP_BYTES = 200 * 1024 * 1024


def _table_dtype(n):
    return np.uint16 if n <= 0xFFFF else np.int32


class FiniteGroup:
    """A finite group with elements 0..n-1, identity 0."""

    def __init__(self, *, name, table=None, perms=None, index=None,
                 bfs_parent=None, bfs_gen=None, gens=(), inverse=None,
                 dense_cap=DENSE_CAP_BYTES):
        if table is None and perms is None:
            raise InputFormatError("group needs a table or a permutation backend")
        self.name = name
        self._table = table
        self._perms = perms
        self._index = index
        self._bfs_parent = bfs_parent
        self._bfs_gen = bfs_gen
        self._dense_cap = dense_cap
        self.order = int(table.shape[0] if table is not None else perms.shape[0])
        self.gens = tuple(int(g) for g in gens)
        if inverse is not None:
            self.inverse = inverse
        else:
            self.inverse = self._compute_inverse()
        self._orders = None
        self._classes = None
        self._class_of = None
        self._center = None

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_table(cls, table, name="table-group", gens=(), validate=True,
                   rng_seed=0):
        """Build a group from a full multiplication table.

        The table must be a square Latin array over 0..n-1 whose row and
        column 0 are the identity.  Associativity is checked in full for
        n <= 64 and on >= 1000 seeded random triples above that.
        """
        arr = np.asarray(table)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InputFormatError("multiplication table must be square")
        n = arr.shape[0]
        if n == 0:
            raise InputFormatError("empty table")
        if arr.min() < 0 or arr.max() >= n:
            raise InputFormatError("table entries must lie in 0..n-1")
        arr = arr.astype(_table_dtype(n))
        g = cls(name=name, table=arr, gens=gens)
        if validate:
            g.check_axioms(rng_seed=rng_seed)
        return g

    @classmethod
    def from_permutations(cls, degree, generators, name="perm-group",
                          dense_cap=DENSE_CAP_BYTES, order_cap=10000):
        """Build a group generated by permutations of range(degree).

        Elements are enumerated breadth-first from the identity in
        generator order, which pins the element indexing.  Raises a
        resource error if the closure exceeds ``order_cap``.
        """
        gens = [np.asarray(p) for p in generators]
        for p in gens:
            if p.shape != (degree,) or sorted(p.tolist()) != list(range(degree)):
                raise InputFormatError("generator is not a permutation of range(degree)")
        dtype = np.int8 if degree <= 127 else np.int16
        ident = np.arange(degree, dtype=dtype)
        index = {ident.tobytes(): 0}
        perms = [ident]
        parent = [0]
        via = [-1]
        gen_idx = []
        queue = 0
        while queue < len(perms):
            cur = perms[queue]
            for gi, p in enumerate(gens):
                # discover cur∘p (apply the generator first, then cur)
                new = cur[p.astype(dtype)]
                key = new.tobytes()
                if key not in index:
                    index[key] = len(perms)
                    perms.append(new)
                    parent.append(queue)
                    via.append(gi)
                    if len(perms) > order_cap:
                        raise ResourceCapError(
                            f"permutation closure exceeds order cap {order_cap}")
            queue += 1
        pm = np.array(perms, dtype=dtype)
        gen_elems = tuple(index[np.asarray(p, dtype=dtype).tobytes()] for p in gens)
        return cls(name=name, perms=pm, index=index,
                   bfs_parent=np.array(parent), bfs_gen=np.array(via),
                   gens=gen_elems, dense_cap=dense_cap)

    def _compute_inverse(self):
        n = self.order
        if self._table is not None:
            rows, cols = np.nonzero(self._table == 0)
            inv = np.empty(n, dtype=np.int64)
            inv[rows] = cols
            return inv
        # invert each permutation, then look it up
        inv = np.empty(n, dtype=np.int64)
        for g in range(n):
            inv[g] = self._index[np.argsort(self._perms[g]).astype(self._perms.dtype).tobytes()]
        return inv

    # ------------------------------------------------------------------
    # scalar operations

    @property
    def identity(self) -> Element:
        return 0

    def elements(self):
        return range(self.order)

    def mul(self, g: Element, h: Element) -> Element:
        if self._table is not None:
            return int(self._table[g, h])
        p = self._perms[g][self._perms[h]]
        return self._index[p.tobytes()]

    def inv(self, g: Element) -> Element:
        return int(self.inverse[g])

    def power(self, g: Element, k: int) -> Element:
        if k < 0:
            g, k = self.inv(g), -k
        acc, base = 0, g
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def order_of(self, g: Element) -> int:
        return int(self.element_orders()[g])

    def conjugate(self, g: Element, x: Element) -> Element:
        """x^-1 * g * x."""
        return self.mul(self.mul(self.inv(x), g), x)

    def commutator(self, g: Element, h: Element) -> Element:
        """g^-1 * h^-1 * g * h."""
        return self.mul(self.inv(self.mul(h, g)), self.mul(g, h))

    # ------------------------------------------------------------------
    # vector operations

    def _ensure_dense(self):
        if self._table is not None:
            return True
        n = self.order
        if 2 * n * n > self._dense_cap:
            return False
        # rows follow the BFS tree: row(parent∘s) = row(parent)[row(s)]
        table = np.empty((n, n), dtype=_table_dtype(n))
        table[0] = np.arange(n)
        gen_rows = {}
        for ge in set(int(x) for x in self.gens):
            pg = self._perms[ge]
            comp = pg[self._perms]          # (n, d): ge∘h for every h... careful
            # comp[h] = perms[ge][perms[h]] = ge∘h  -> that is row of ge
            gen_rows[ge] = np.fromiter(
                (self._index[comp[h].tobytes()] for h in range(n)),
                count=n, dtype=np.int64)
        # BFS appends children after parents, so filling in index order is safe
        for g in range(1, n):
            par = int(self._bfs_parent[g])
            ge = int(self.gens[self._bfs_gen[g]])
            # g = par∘ge, so g∘h = par∘(ge∘h)
            table[g] = table[par][gen_rows[ge]]
        self._table = table
        return True

    def row(self, g: Element) -> np.ndarray:
        """Array r with r[h] = g*h for all h."""
        if self._table is None and not self._ensure_dense():
            pg = self._perms[g]
            comp = pg[self._perms]
            return np.fromiter((self._index[comp[h].tobytes()] for h in range(self.order)),
                               count=self.order, dtype=np.int64)
        return self._table[g]

    def col(self, h: Element) -> np.ndarray:
        """Array c with c[g] = g*h for all g."""
        if self._table is None and not self._ensure_dense():
            ph = self._perms[h]
            comp = self._perms[:, ph]       # comp[g] = perms[g][ph] = g∘h
            return np.fromiter((self._index[comp[g].tobytes()] for g in range(self.order)),
                               count=self.order, dtype=np.int64)
        return self._table[:, h]

    def mul_vec(self, a, b):
        """Elementwise products a[i]*b[i]."""
        a = np.asarray(a)
        b = np.asarray(b)
        if self._table is None and not self._ensure_dense():
            out = np.empty(a.shape, dtype=np.int64)
            flat_a, flat_b, flat_o = a.ravel(), b.ravel(), out.ravel()
            for i in range(flat_a.size):
                flat_o[i] = self.mul(int(flat_a[i]), int(flat_b[i]))
            return out
        return self._table[a, b].astype(np.int64)

    def mul_block(self, A, B):
        """Outer product matrix M[i, j] = A[i]*B[j]."""
        A = np.asarray(A)
        B = np.asarray(B)
        if self._table is None and not self._ensure_dense():
            out = np.empty((A.size, B.size), dtype=np.int64)
            for i, a in enumerate(A.ravel()):
                r = self.row(int(a))
                out[i] = r[B]
            return out
        return self._table[np.ix_(A, B)].astype(np.int64)

    def pow_vec(self, elems, k):
        """Elementwise k-th powers."""
        elems = np.asarray(elems)
        if k < 0:
            elems, k = self.inverse[elems], -k
        acc = np.zeros(elems.shape, dtype=np.int64)
        base = elems.astype(np.int64)
        while k:
            if k & 1:
                acc = self.mul_vec(acc, base)
            k >>= 1
            if k:
                base = self.mul_vec(base, base)
        return acc

    def conjugate_all(self, s: Element) -> np.ndarray:
        """Array v with v[x] = x^-1 * s * x."""
        w = self.col(s)[self.inverse]           # w[x] = x^-1 * s
        return self.mul_vec(w, np.arange(self.order))

    # ------------------------------------------------------------------
    # cached structure

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            orders[0] = 1
            cur = np.arange(n)
            k = 1
            while (orders == 0).any():
                k += 1
                cur = self.mul_vec(cur, np.arange(n))
                hit = (cur == 0) & (orders == 0)
                orders[hit] = k
            self._orders = orders
        return self._orders

    def conjugacy_classes(self):
        """Classes as arrays of element indices, sorted by (size, least member)."""
        if self._classes is None:
            n = self.order
            seen = np.zeros(n, dtype=bool)
            classes = []
            for g in range(n):
                if seen[g]:
                    continue
                cls = np.unique(self.conjugate_all(g))
                seen[cls] = True
                classes.append(cls)
            classes.sort(key=lambda c: (len(c), int(c[0])))
            self._classes = classes
            cid = np.empty(n, dtype=np.int64)
            for i, c in enumerate(classes):
                cid[c] = i
            self._class_of = cid
        return self._classes

    def class_of(self) -> np.ndarray:
        self.conjugacy_classes()
        return self._class_of

    def center(self) -> np.ndarray:
        if self._center is None:
            n = self.order
            mask = np.ones(n, dtype=bool)
            # commuting with a generating set is enough to be central
            for s in (self.gens or range(n)):
                mask &= self.col(s) == self.row(s)
            self._center = np.nonzero(mask)[0]
        return self._center

    def is_abelian(self) -> bool:
        if self._table is not None and self.order <= 512:
            return bool((self._table == self._table.T).all())
        return len(self.center()) == self.order

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders()))

    def fingerprint(self):
        """Cheap isomorphism-invariant tuple; collisions possible, used as a filter."""
        hist = np.bincount(self.element_orders())
        class_sizes = tuple(sorted(len(c) for c in self.conjugacy_classes()))
        return (self.order,
                tuple(int(x) for x in hist),
                class_sizes,
                int(len(self.center())),
                self.exponent())

    def fingerprint_hex(self) -> str:
        return hashlib.sha256(repr(self.fingerprint()).encode()).hexdigest()[:16]

    # ------------------------------------------------------------------
    # validation

    def check_axioms(self, rng_seed=0, sample=1000):
        n = self.order
        if self._table is not None:
            t = self._table
            ar = np.arange(n)
            if not ((np.sort(t, axis=1) == ar).all() and (np.sort(t, axis=0) == ar[:, None]).all()):
                raise InputFormatError("table is not a Latin square")
            if not ((t[0] == ar).all() and (t[:, 0] == ar).all()):
                raise InputFormatError("index 0 is not the identity")
        if n <= 64 and self._table is not None:
            t = self._table.astype(np.int64)
            for c in range(n):
                if not (t[t, c] == t[:, t[:, c]]).all():
                    raise InputFormatError("multiplication is not associative")
        else:
            rng = np.random.default_rng(rng_seed)
            a = rng.integers(0, n, size=sample)
            b = rng.integers(0, n, size=sample)
            c = rng.integers(0, n, size=sample)
            left = self.mul_vec(self.mul_vec(a, b), c)
            right = self.mul_vec(a, self.mul_vec(b, c))
            if not (left == right).all():
                raise InputFormatError("multiplication is not associative (sampled)")

    def find_generating_set(self):
        """Stored generators, else a deterministic greedy generating set."""
        if self.gens:
            return self.gens
        got = np.zeros(self.order, dtype=bool)
        got[0] = True
        gens = []
        for g in range(1, self.order):
            if got[g]:
                continue
            gens.append(g)
            got = _closure_mask(self, gens)
            if got.all():
                break
        self.gens = tuple(gens)
        return self.gens

    def _rename(self, name):
        self.name = name
        return self

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _closure_mask(G, gens):
    """Boolean membership mask of the subgroup generated by ``gens``."""
    n = G.order
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    frontier = np.unique([int(g) for g in gens if not mask[g]])
    mask[frontier] = True
    gen_arr = np.unique([int(g) for g in gens])
    while frontier.size:
        prod = G.mul_block(frontier, gen_arr).ravel()
        prod = np.unique(prod)
        new = prod[~mask[prod]]
        mask[new] = True
        frontier = new
    return mask


class ProductGroup(FiniteGroup):
    """Direct product with pair encoding pair(a, b) = a * |right| + b."""

    def __init__(self, left, right, pair_cap=10_000_000):
        n = left.order * right.order
        self.left = left
        self.right = right
        if n > pair_cap:
            raise ResourceCapError(
                f"product order {n} exceeds the pair cap {pair_cap}")
        self.name = f"{left.name} x {right.name}"
        self.order = n
        self._dense_cap = DENSE_CAP_BYTES
        self._table = None
        self._perms = None
        self._index = None
        nr = right.order
        self.inverse = (np.add.outer(left.inverse * nr, right.inverse)).ravel()
        self.gens = tuple(int(g) * nr for g in left.find_generating_set()) + \
            tuple(int(g) for g in right.find_generating_set())
        self._orders = None
        self._classes = None
        self._class_of = None
        self._center = None
        if 2 * n * n <= 8 * 1024 * 1024:
            tl = left.mul_block(np.arange(left.order), np.arange(left.order))
            tr = right.mul_block(np.arange(right.order), np.arange(right.order))
            big = (tl[:, None, :, None].astype(np.int64) * nr
                   + tr[None, :, None, :]).reshape(n, n)
            self._table = big.astype(_table_dtype(n))

    def pair(self, a: Element, b: Element) -> Element:
        return a * self.right.order + b

    def unpair(self, p: Element):
        return divmod(p, self.right.order)

    def _ensure_dense(self):
        return self._table is not None

    def mul(self, g, h):
        if self._table is not None:
            return int(self._table[g, h])
        nr = self.right.order
        a, b = divmod(g, nr)
        c, d = divmod(h, nr)
        return self.left.mul(a, c) * nr + self.right.mul(b, d)

    def row(self, g):
        if self._table is not None:
            return self._table[g]
        nr = self.right.order
        a, b = divmod(int(g), nr)
        return (np.add.outer(self.left.row(a).astype(np.int64) * nr,
                             self.right.row(b))).ravel()

    def col(self, h):
        if self._table is not None:
            return self._table[:, h]
        nr = self.right.order
        c, d = divmod(int(h), nr)
        return (np.add.outer(self.left.col(c).astype(np.int64) * nr,
                             self.right.col(d))).ravel()

    def mul_vec(self, a, b):
        if self._table is not None:
            return self._table[a, b].astype(np.int64)
        nr = self.right.order
        a = np.asarray(a)
        b = np.asarray(b)
        al, ar = np.divmod(a, nr)
        bl, br = np.divmod(b, nr)
        return self.left.mul_vec(al, bl) * nr + self.right.mul_vec(ar, br)

    def mul_block(self, A, B):
        if self._table is not None:
            return self._table[np.ix_(np.asarray(A), np.asarray(B))].astype(np.int64)
        A = np.asarray(A)
        B = np.asarray(B)
        out = np.empty((A.size, B.size), dtype=np.int64)
        for i, a in enumerate(A.ravel()):
            out[i] = self.row(int(a))[B]
        return out


def direct_square(G, pair_cap=10_000_000) -> ProductGroup:
    """The product group G x G."""
    return ProductGroup(G, G, pair_cap=pair_cap)
