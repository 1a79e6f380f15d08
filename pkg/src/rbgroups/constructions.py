"""Constructive recipes for Rota-Baxter operators.

Splitting operators from exact factorizations, (anti)homomorphisms into
abelian subgroups, lifts through an exact factorization, the order-two
intersection construction (lemma_r2_*), the abelian-extension
construction with its commutator criterion, and the order-16 fixture
operator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .automorphisms import extend_by_generator_images
from .errors import InputFormatError, PropertyFailure, ResourceCapError
from .maps import GroupMap
from .rb import RBOperator, btilde, make_rb, verify_rb
from .subgroups import (Factorization, Subgroup, _closure_members, all_subgroups,
                        closure, intersection, is_normal)


def _decomposition_images(G, first: Subgroup, second: Subgroup, value_of_second):
    """images[x*y] = value_of_second[j] for the unique decomposition
    x ∈ first, y = second.members[j]; errors if the decomposition is not
    unique (non-exact pair)."""
    n = G.order
    images = np.full(n, -1, dtype=np.int64)
    block = G.mul_block(first.members, second.members)
    images[block] = np.broadcast_to(value_of_second, block.shape)
    if (images < 0).any():
        raise InputFormatError("factorization does not cover the group")
    if first.order * second.order != n:
        raise InputFormatError("factorization orders do not multiply to |G|")
    return images


def splitting_from_exact(F: Factorization, order="HL") -> RBOperator:
    """B(hl) = l^-1 (order HL) or B(lh) = h^-1 (order LH) for an exact
    factorization G = HL; always a splitting operator."""
    if not F.exact:
        raise InputFormatError("factorization is not exact")
    if order not in ("HL", "LH"):
        raise InputFormatError("order must be HL or LH")
    G = F.group
    if intersection(F.h, F.l).order != 1:
        raise InputFormatError("factorization is not exact")
    first, second = (F.h, F.l) if order == "HL" else (F.l, F.h)
    vals = G.inverse[second.members]
    images = _decomposition_images(G, first, second, vals)
    op = make_rb(G, images)
    op.provenance["recipe"] = {"kind": "split", "order": order,
                              "h_order": F.h.order, "l_order": F.l.order}
    return op


def hom_to_abelian(G, H: Subgroup, phi: GroupMap, anti=False) -> RBOperator:
    """An (anti)homomorphism G -> H with H an abelian subgroup is a
    Rota-Baxter operator."""
    Hgrp, _ = H.as_group(validate=False)
    if not Hgrp.is_abelian():
        raise InputFormatError("target subgroup is not abelian")
    if not H.mask()[phi.images].all():
        raise InputFormatError("map does not land inside the subgroup")
    if not phi.is_homomorphism(mode="full", anti=anti):
        kind = "antihomomorphism" if anti else "homomorphism"
        raise InputFormatError(f"map is not a {kind}")
    op = make_rb(G, phi.images)
    op.provenance["recipe"] = {"kind": "hom-abelian", "anti": bool(anti),
                              "target_order": H.order}
    return op


def lift_from_factor(F: Factorization, C) -> RBOperator:
    """B(hl) = C(l) for an exact G = HL and a Rota-Baxter operator C on
    L whose companion image normalizes H.

    ``C`` is an RBOperator on L.as_group() or a positional image array
    over L's members.
    """
    if not F.exact or intersection(F.h, F.l).order != 1:
        raise InputFormatError("factorization is not exact")
    G = F.group
    Lgrp, to_parent = F.l.as_group(validate=False)
    c_images = np.asarray(C.images if isinstance(C, RBOperator) else C,
                          dtype=np.int64)
    if c_images.shape != (Lgrp.order,):
        raise InputFormatError("C must assign an image to every element of L")
    res = verify_rb(Lgrp, c_images)
    if not res.ok:
        raise PropertyFailure("c-not-rb-on-l", witness=res.witness)
    ct = btilde(RBOperator(Lgrp, c_images))
    hm = F.h.mask()
    for u in np.unique(to_parent[ct.images]):
        u = int(u)
        conj = G.mul_vec(G.row(G.inv(u))[F.h.members],
                         np.full(F.h.order, u, dtype=np.int64))
        if not hm[conj].all():
            raise PropertyFailure("companion-image-does-not-normalize-h",
                                  witness=u)
    images = _decomposition_images(G, F.h, F.l, to_parent[c_images])
    op = make_rb(G, images)
    op.provenance["recipe"] = {"kind": "lift", "h_order": F.h.order,
                              "l_order": F.l.order}
    return op


@dataclass
class LemmaR2Instance:
    """Data for the order-two intersection construction.

    h1 ⊴ h and k1 ⊴ k of index 2, G = h1*k exact, r the involution
    spanning h ∩ k (which then normalizes h1), t a coset representative
    of k1 in k.
    """

    h: Subgroup
    k: Subgroup
    h1: Subgroup
    k1: Subgroup
    r: int
    t: int

    @property
    def group(self):
        return self.h.parent


def _check_r2(inst: LemmaR2Instance):
    G = inst.group
    n = G.order
    if not (inst.h.mask()[inst.h1.members].all()
            and inst.h.order == 2 * inst.h1.order):
        raise PropertyFailure("h1-not-index-2-in-h")
    if not (inst.k.mask()[inst.k1.members].all()
            and inst.k.order == 2 * inst.k1.order):
        raise PropertyFailure("k1-not-index-2-in-k")
    if inst.h1.order * inst.k.order != n or \
            intersection(inst.h1, inst.k).order != 1:
        raise PropertyFailure("g-not-h1k-exact")
    R = intersection(inst.h, inst.k)
    if R.order != 2 or not R.contains(inst.r) or inst.r == 0:
        raise PropertyFailure("r-not-order-2-intersection")
    if not (inst.k.contains(inst.t) and not inst.k1.contains(inst.t)):
        raise PropertyFailure("t-not-in-k-minus-k1")
    h1m = inst.h1.mask()
    conj = G.mul_vec(G.row(G.inv(inst.r))[inst.h1.members],
                     np.full(inst.h1.order, inst.r, dtype=np.int64))
    if not h1m[conj].all():
        raise PropertyFailure("r-does-not-normalize-h1")


def lemma_r2_construct(inst: LemmaR2Instance) -> RBOperator:
    """B(h1 k) = k^-1 r^d where d = 0 for k in k1 and 1 otherwise."""
    _check_r2(inst)
    G = inst.group
    k1m = inst.k1.mask()
    kinv = G.inverse[inst.k.members]
    delta = ~k1m[inst.k.members]
    vals = np.where(delta,
                    G.mul_vec(kinv, np.full(kinv.size, inst.r, dtype=np.int64)),
                    kinv)
    images = _decomposition_images(G, inst.h1, inst.k, vals)
    op = make_rb(G, images)
    op.provenance["recipe"] = {"kind": "lemma-r2", "h_order": inst.h.order,
                              "k_order": inst.k.order, "r": int(inst.r),
                              "t": int(inst.t)}
    return op


def lemma_r2_search(G, subs=None) -> list[LemmaR2Instance]:
    """All instances of the construction's hypotheses on G, in a
    deterministic order."""
    n = G.order
    if subs is None:
        subs = all_subgroups(G)
    by_order = {}
    for s in subs:
        by_order.setdefault(s.order, []).append(s)
    out = []
    for korder in sorted(by_order):
        if korder % 2 or n % korder:
            continue
        h1_order = n // korder
        if h1_order not in by_order:
            continue
        for K in by_order[korder]:
            km = K.mask()
            k1s = [S for S in by_order.get(korder // 2, [])
                   if km[S.members].all()]
            if not k1s:
                continue
            for H1 in by_order[h1_order]:
                if np.intersect1d(H1.members, K.members).size != 1:
                    continue
                h1m = H1.mask()
                for H in by_order.get(2 * h1_order, []):
                    if not H.mask()[H1.members].all():
                        continue
                    R = np.intersect1d(H.members, K.members)
                    if R.size != 2:
                        continue
                    r = int(R[1])
                    for K1 in k1s:
                        t = int(min(set(map(int, K.members))
                                    - set(map(int, K1.members))))
                        out.append(LemmaR2Instance(h=H, k=K, h1=H1, k1=K1,
                                                   r=r, t=t))
    return out


@dataclass
class ExtensionData:
    """Data for the abelian-extension construction: G = <A, f> with A
    normal abelian, an endomorphism of A (positional over A.members),
    and an image for f inside A."""

    group: object
    a: Subgroup
    f: int
    ba_images: np.ndarray       # positions into a.members
    bf: int                     # parent index, must lie in A

    def __post_init__(self):
        self.ba_images = np.asarray(self.ba_images, dtype=np.int64)

    def ba_map(self):
        Agrp, _ = self.a.as_group(validate=False)
        return GroupMap(Agrp, Agrp, self.ba_images)


def _validate_extension(data: ExtensionData):
    G = data.group
    A = data.a
    Agrp, to_parent = A.as_group(validate=False)
    if not Agrp.is_abelian():
        raise InputFormatError("A is not abelian")
    if not is_normal(G, A):
        raise InputFormatError("A is not normal")
    if not A.contains(int(data.bf)):
        raise InputFormatError("B(f) does not lie in A")
    if data.ba_images.shape != (A.order,) or \
            (data.ba_images < 0).any() or (data.ba_images >= A.order).any():
        raise InputFormatError("BA must be a positional image array over A")
    gen_mem = list(A.gen_elements()) + [int(data.f)]
    if _closure_members(G, gen_mem).size != G.order:
        raise InputFormatError("A and f do not generate the group")
    ba = data.ba_images
    # full homomorphism check on A
    for i in range(Agrp.order):
        if not np.array_equal(ba[Agrp.row(i)], Agrp.row(int(ba[i]))[ba]):
            raise InputFormatError("BA is not a homomorphism of A")
    return Agrp, to_parent


def _coset_exponent(G, A: Subgroup, f):
    """Least o >= 1 with f^o in A."""
    cur = int(f)
    o = 1
    while not A.contains(cur):
        cur = G.mul(cur, int(f))
        o += 1
        if o > G.order:
            raise InputFormatError("f has no power inside A")
    return o


def extension_construct(data: ExtensionData):
    """Build B(f^k a) = B(f)^k BA(a) over the canonical transversal
    (k = coset exponent of g in G/A) and test the commutator criterion.

    Returns (candidate, is_rb, condition_holds) where candidate is the
    built map, is_rb comes from full verification, and condition_holds
    is [Im(B~), f] ⊆ ker(B).  The two flags always agree; disagreement
    raises.
    """
    G = data.group
    A = data.a
    Agrp, to_parent = _validate_extension(data)
    f = int(data.f)
    o = _coset_exponent(G, A, f)
    if o * A.order != G.order:
        raise InputFormatError("A-cosets of powers of f do not tile the group")
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[A.members] = np.arange(A.order)
    # well-definedness across the wrap-around f^o ∈ A
    lhs = int(data.ba_images[pos[G.power(f, o)]])
    rhs_parent = G.power(int(data.bf), o)
    if to_parent[lhs] != rhs_parent:
        raise InputFormatError("BA(f^o) differs from B(f)^o; "
                               "the map is not well defined")
    images = np.full(G.order, -1, dtype=np.int64)
    ba_parent = to_parent[data.ba_images]
    fj = 0
    for j in range(o):
        coset = G.row(fj)[A.members]
        bfj = G.power(int(data.bf), j)
        a_part = G.row(G.inv(fj))[coset]
        images[coset] = G.mul_vec(np.full(A.order, bfj, dtype=np.int64),
                                  ba_parent[pos[a_part]])
        fj = G.mul(fj, f)
    if (images < 0).any():
        raise InputFormatError("transversal failed to decompose every element")
    candidate = GroupMap(G, G, images)
    is_rb = verify_rb(G, images, want_witness=False).ok
    bt = G.mul_vec(G.inverse, images[G.inverse])
    cond = True
    for u in np.unique(bt):
        if images[G.commutator(int(u), f)] != 0:
            cond = False
            break
    if is_rb != cond:
        raise PropertyFailure("extension-iff-violated",
                              witness={"is_rb": is_rb, "condition": cond})
    return candidate, bool(is_rb), bool(cond)


def _endomorphism_images(Agrp):
    """All endomorphism image arrays of an abelian group, positionally."""
    import itertools
    gens = Agrp.find_generating_set()
    if not gens:
        return [np.zeros(1, dtype=np.int64)]
    orders = Agrp.element_orders()
    cands = [[x for x in range(Agrp.order) if orders[int(g)] % orders[x] == 0]
             for g in gens]
    out = []
    for choice in itertools.product(*cands):
        img = extend_by_generator_images(Agrp, Agrp, gens, choice)
        if img is not None:
            out.append(img)
    return out


def extension_search(G, *, budget=300000) -> list[ExtensionData]:
    """Every consistent ExtensionData on G: all normal abelian A, every
    f with <A, f> = G, every endomorphism BA of A, every B(f) in A
    compatible with BA across the wrap-around."""
    out = []
    subs = all_subgroups(G)
    for A in subs:
        Agrp, to_parent = A.as_group(validate=False)
        if not Agrp.is_abelian() or not is_normal(G, A):
            continue
        fs = [f for f in range(G.order)
              if _closure_members(G, list(A.gen_elements()) + [f]).size == G.order]
        if not fs:
            continue
        endos = _endomorphism_images(Agrp)
        if len(out) + len(fs) * len(endos) * A.order > budget:
            raise ResourceCapError("extension search exceeds its budget")
        pos = np.full(G.order, -1, dtype=np.int64)
        pos[A.members] = np.arange(A.order)
        for f in fs:
            o = _coset_exponent(G, A, f)
            fo_pos = int(pos[G.power(f, o)])
            for ba in endos:
                target = to_parent[ba[fo_pos]]
                for bf in A.members:
                    if G.power(int(bf), o) == target:
                        out.append(ExtensionData(group=G, a=A, f=int(f),
                                                 ba_images=ba, bf=int(bf)))
    return out


def paper16_fixture():
    """The order-16 group with its non-splitting operator, built through
    the extension construction from A = <a^2, b, c> and f = a."""
    from .catalog import named_group
    G = named_group("paper16")
    A = closure(G, [2, 4, 8])          # a^2, b, c
    Agrp, to_parent = A.as_group(validate=False)
    pos = {int(m): i for i, m in enumerate(A.members)}
    srcs = (pos[2], pos[4], pos[8])
    imgs = (pos[0], pos[6], pos[14])   # B(a^2)=e, B(b)=a^2 b, B(c)=a^2 b c
    ba = extend_by_generator_images(Agrp, Agrp, srcs, imgs)
    data = ExtensionData(group=G, a=A, f=1, ba_images=ba, bf=2)
    candidate, is_rb, cond = extension_construct(data)
    if not (is_rb and cond):
        raise PropertyFailure("paper16-fixture-not-rb")
    op = RBOperator(G, candidate.images,
                    {"mode": "full", "checked": G.order ** 2,
                     "recipe": {"kind": "paper16"}})
    return G, op
