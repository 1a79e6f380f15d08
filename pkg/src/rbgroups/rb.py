"""Rota-Baxter operators of weight 1 on finite groups.

An operator is a map B: G -> G satisfying, for all g, h,

    B(g) B(h) = B( g B(g) h B(g)^-1 ).

Its companion is B~(g) = g^-1 B(g^-1); the companion of a Rota-Baxter
operator is again one, and B~~ = B.  The derived product
g o h = g B(g) h B(g)^-1 makes (G, o) a group, and B is a homomorphism
(G, o) -> (G, .).  B is called splitting when B(B~(g)) is the identity
for every g, equivalently when Im(B) and Im(B~) intersect trivially.
"""

from __future__ import annotations

from dataclasses import dataclass, field as _dc_field

import numpy as np

from .errors import PropertyFailure
from .groups import FiniteGroup
from .subgroups import Subgroup, _closure_members, is_normal, product_set

_FULL_VERIFY_CAP = 10000


@dataclass
class RBOperator:
    """A candidate Rota-Baxter operator: images[g] = B(g).

    ``provenance`` records how (or whether) the defining identity was
    checked: {"mode": "unchecked" | "full" | "sampled", ...}.
    """

    group: FiniteGroup
    images: np.ndarray
    provenance: dict = _dc_field(default_factory=lambda: {"mode": "unchecked"})

    def __post_init__(self):
        self.images = np.asarray(self.images, dtype=np.int64)
        if self.images.shape != (self.group.order,):
            raise ValueError("image array length must equal the group order")

    def __call__(self, g):
        return int(self.images[g])

    def key(self):
        return self.images.tobytes()

    def mark(self, provenance):
        self.provenance = provenance
        return self

    def __repr__(self):
        mode = self.provenance.get("mode", "unchecked")
        return f"RBOperator(on {self.group.name}, {mode})"


@dataclass
class VerifyResult:
    ok: bool
    mode: str
    checked: int
    witness: tuple | None = None
    seed: int | None = None

    def provenance(self):
        d = {"mode": self.mode, "checked": self.checked}
        if self.seed is not None:
            d["seed"] = self.seed
        return d


def _images_of(G, op_or_images):
    if isinstance(op_or_images, RBOperator):
        return op_or_images.images
    arr = np.asarray(op_or_images, dtype=np.int64)
    if arr.shape != (G.order,):
        raise ValueError("image array length must equal the group order")
    return arr


def verify_rb(G, op, mode="auto", *, seed=0, samples=10 ** 6,
              want_witness=True) -> VerifyResult:
    """Check the defining identity.

    Full mode checks all n^2 pairs, row by row (vectorized over h); the
    reported witness is the lexicographically least failing pair (g, h).
    Sampled mode draws pairs with a seeded generator.
    """
    B = _images_of(G, op)
    n = G.order
    if B[0] != 0:
        return VerifyResult(False, "full", 0, witness=(0, 0) if want_witness else None)
    if mode == "auto":
        mode = "full" if n <= _FULL_VERIFY_CAP else "sampled"
    if mode == "full":
        checked = 0
        for g in range(n):
            bg = int(B[g])
            ibg = G.inv(bg)
            # g B(g) h B(g)^-1 for all h at once
            a = G.mul(g, bg)
            inner = G.mul_vec(G.row(a), np.full(n, ibg, dtype=np.int64))
            lhs = G.row(bg)[B]
            rhs = B[inner]
            checked += n
            if not np.array_equal(lhs, rhs):
                h = int(np.nonzero(lhs != rhs)[0][0])
                return VerifyResult(False, "full", checked,
                                    witness=(g, h) if want_witness else None)
        return VerifyResult(True, "full", checked)
    rng = np.random.default_rng(seed)
    gs = rng.integers(0, n, size=samples)
    hs = rng.integers(0, n, size=samples)
    bg = B[gs]
    lhs = G.mul_vec(bg, B[hs])
    inner = G.mul_vec(G.mul_vec(G.mul_vec(gs, bg), hs), G.inverse[bg])
    rhs = B[inner]
    bad = np.nonzero(lhs != rhs)[0]
    if bad.size:
        i = int(bad[0])
        return VerifyResult(False, "sampled", samples, seed=seed,
                            witness=(int(gs[i]), int(hs[i])) if want_witness else None)
    return VerifyResult(True, "sampled", samples, seed=seed)


def make_rb(G, images, *, verify="auto", seed=0) -> RBOperator:
    """Wrap an image array, verifying unless verify is None."""
    op = RBOperator(G, _images_of(G, images))
    if verify is not None:
        res = verify_rb(G, op, mode=verify, seed=seed)
        if not res.ok:
            raise PropertyFailure("rb-identity", witness=res.witness)
        op.mark(res.provenance())
    return op


def trivial_e(G) -> RBOperator:
    """B(g) = e."""
    return make_rb(G, np.zeros(G.order, dtype=np.int64))


def trivial_inv(G) -> RBOperator:
    """B(g) = g^-1."""
    return make_rb(G, G.inverse.astype(np.int64))


def btilde(op: RBOperator) -> RBOperator:
    """The companion operator B~(g) = g^-1 B(g^-1)."""
    G = op.group
    inv = G.inverse
    images = G.mul_vec(inv, op.images[inv])
    return RBOperator(G, images, {"mode": "companion-of-" +
                                  op.provenance.get("mode", "unchecked")})


def conjugate_rb(op: RBOperator, phi) -> RBOperator:
    """The operator phi o B o phi^-1 for an automorphism phi."""
    G = op.group
    inv_phi = np.argsort(phi.images)
    images = phi.images[op.images[inv_phi]]
    return RBOperator(G, images, {"mode": "conjugate-of-" +
                                  op.provenance.get("mode", "unchecked")})


def _subgroup_from_set(G, members, clause):
    members = np.unique(members)
    closed = _closure_members(G, [int(x) for x in members if x])
    if closed.size != members.size:
        raise PropertyFailure(clause)
    return Subgroup(G, members, ())


def image(op: RBOperator) -> Subgroup:
    """Im(B); raises PropertyFailure("image-not-subgroup") if not closed."""
    return _subgroup_from_set(op.group, op.images, "image-not-subgroup")


def kernel(op: RBOperator) -> Subgroup:
    """ker(B) = B^-1(e); raises if not a subgroup."""
    members = np.nonzero(op.images == 0)[0]
    return _subgroup_from_set(op.group, members, "kernel-not-subgroup")


def im_bbt(op: RBOperator) -> np.ndarray:
    """Sorted member array of the set B(B~(G))."""
    bt = btilde(op)
    return np.unique(op.images[bt.images])


def is_splitting(op: RBOperator) -> bool:
    """B(B~(g)) = e for all g."""
    bt = btilde(op)
    return bool((op.images[bt.images] == 0).all())


def derived_group(op: RBOperator, *, validate=True) -> FiniteGroup:
    """(G, o) with g o h = g B(g) h B(g)^-1, built as a full table."""
    G = op.group
    n = G.order
    B = op.images
    table = np.empty((n, n), dtype=np.int64)
    for g in range(n):
        bg = int(B[g])
        a = G.mul(g, bg)
        table[g] = G.mul_vec(G.row(a), np.full(n, G.inv(bg), dtype=np.int64))
    return FiniteGroup.from_table(table, name=f"derived({G.name})", validate=validate)


@dataclass
class RBStructureReport:
    """Kernels, images, their interrelations, and the splitting flag."""

    kernel: Subgroup
    image: Subgroup
    kernel_tilde: Subgroup
    image_tilde: Subgroup
    r: Subgroup                  # Im(B) ∩ Im(B~)
    im_bbt_size: int
    splitting: bool
    quotient_order: int          # |Im(B~) : ker(B)| = |Im(B) : ker(B~)|
    checks: dict                 # clause -> bool

    def ok(self):
        return all(self.checks.values())


def structure_report(op: RBOperator) -> RBStructureReport:
    """Verify and collect the structural facts about B and B~:

    - ker(B) is normal in Im(B~), ker(B~) is normal in Im(B);
    - |Im(B~) : ker(B)| = |Im(B) : ker(B~)|;
    - G = Im(B~) Im(B) as a set product;
    - R = Im(B) ∩ Im(B~), with |R| = 1 exactly for splitting operators.
    """
    G = op.group
    bt = btilde(op)
    ker = kernel(op)
    img = image(op)
    ker_t = kernel(bt)
    img_t = image(bt)
    r_members = np.intersect1d(img.members, img_t.members)
    r = Subgroup(G, r_members, ())
    checks = {}
    checks["kerB-normal-in-imBt"] = (
        set(ker.members) <= set(img_t.members)
        and is_normal(G, ker, within=img_t))
    checks["kerBt-normal-in-imB"] = (
        set(ker_t.members) <= set(img.members)
        and is_normal(G, ker_t, within=img))
    q1, rem1 = divmod(img_t.order, ker.order)
    q2, rem2 = divmod(img.order, ker_t.order)
    checks["quotient-order-equality"] = (rem1 == 0 and rem2 == 0 and q1 == q2)
    checks["product-cover"] = bool(product_set(img_t, img).all())
    bbt = im_bbt(op)
    split = bool(bbt.size == 1 and bbt[0] == 0)
    checks["splitting-iff-trivial-intersection"] = (split == (r.order == 1))
    return RBStructureReport(kernel=ker, image=img, kernel_tilde=ker_t,
                             image_tilde=img_t, r=r, im_bbt_size=int(bbt.size),
                             splitting=split, quotient_order=q1, checks=checks)


@dataclass
class SuiteVerdict:
    clauses: dict

    def ok(self):
        return all(self.clauses.values())

    def failing(self):
        return sorted(k for k, v in self.clauses.items() if not v)


def prop_initial_suite(op: RBOperator) -> SuiteVerdict:
    """First-properties suite for a verified operator B:

    (companion-rb)        B~ satisfies the defining identity;
    (companion-involution) B~~ = B;
    (derived-hom)         B is a homomorphism (G, o) -> (G, .);
    (kernel-shift)        B(gh) = B(h) whenever B(g) = e.
    """
    G = op.group
    bt = btilde(op)
    clauses = {}
    clauses["companion-rb"] = verify_rb(G, bt, want_witness=False).ok
    clauses["companion-involution"] = bool(
        np.array_equal(btilde(bt).images, op.images))
    der = derived_group(op, validate=False)
    B = op.images
    hom_ok = True
    for g in range(G.order):
        if not np.array_equal(B[der.row(g)], G.row(int(B[g]))[B]):
            hom_ok = False
            break
    clauses["derived-hom"] = hom_ok
    kmem = np.nonzero(B == 0)[0]
    shift_ok = True
    for k in kmem:
        if not np.array_equal(B[G.row(int(k))], B):
            shift_ok = False
            break
    clauses["kernel-shift"] = shift_ok
    return SuiteVerdict(clauses)


@dataclass
class OldDiagnostic:
    """Comparison of the weight-1 identity with the older convention
    B(g) B(h) = B( B(g) h B(g)^-1 g ): both, either, or neither can hold."""

    new_holds: bool
    old_holds: bool
    witness_new: tuple | None
    witness_old: tuple | None


def lemma_old_diagnostic(G, op) -> OldDiagnostic:
    B = _images_of(G, op)
    res_new = verify_rb(G, B)
    old_ok = True
    wit_old = None
    for g in range(G.order):
        bg = int(B[g])
        ibg = G.inv(bg)
        pre = G.row(bg)                      # B(g) h
        mid = G.mul_vec(pre, np.full(G.order, ibg, dtype=np.int64))
        rhs = B[G.mul_vec(mid, np.full(G.order, g, dtype=np.int64))]
        lhs = G.row(bg)[B]
        if not np.array_equal(lhs, rhs):
            h = int(np.nonzero(lhs != rhs)[0][0])
            old_ok, wit_old = False, (g, h)
            break
    return OldDiagnostic(new_holds=res_new.ok, old_holds=old_ok,
                         witness_new=res_new.witness, witness_old=wit_old)
