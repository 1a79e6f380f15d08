"""Operator constructions: factorization splits, lifts, the two lemmas."""

import numpy as np
import pytest

import rbgroups as rb
from rbgroups.constructions import ExtensionData, LemmaR2Instance
from rbgroups.errors import InputFormatError, PropertyFailure
from rbgroups.maps import GroupMap


def s3_factorization():
    G = rb.named_group("symmetric:3")
    f = next(f for f in rb.exact_factorizations(G) if f.h.order == 3)
    return G, f


def test_splitting_from_exact_identity():
    G, f = s3_factorization()
    op = rb.splitting_from_exact(f)
    assert rb.verify_rb(G, op).ok
    assert rb.is_splitting(op)
    # B(hl) = l^-1 lands in L and kills H
    for h in map(int, f.h.members):
        assert op.images[h] == 0
    for l in map(int, f.l.members):
        assert op.images[G.mul(int(f.h.members[1]), l)] == G.inv(l)


def test_splitting_orders_hl_lh():
    G, f = s3_factorization()
    hl = rb.splitting_from_exact(f, order="HL")
    lh = rb.splitting_from_exact(f, order="LH")
    assert rb.verify_rb(G, hl).ok and rb.verify_rb(G, lh).ok
    assert rb.image(hl).order == f.l.order
    assert rb.image(lh).order == f.h.order


def test_splitting_images_swap_under_companion():
    G, f = s3_factorization()
    op = rb.splitting_from_exact(f)
    bt = rb.btilde(op)
    assert sorted(map(int, rb.image(op).members)) == sorted(map(int, f.l.members))
    assert sorted(map(int, rb.image(bt).members)) == sorted(map(int, f.h.members))


def test_splitting_every_factorization_all_groups():
    for ident in ["cyclic:6", "symmetric:4", "dihedral:12"]:
        G = rb.named_group(ident)
        for f in rb.exact_factorizations(G):
            for order in ("HL", "LH"):
                op = rb.splitting_from_exact(f, order=order)
                assert rb.verify_rb(G, op).ok
                assert rb.is_splitting(op)


def test_lift_with_trivial_inv_matches_split():
    G, f = s3_factorization()
    lifted = rb.lift_from_factor(f, rb.trivial_inv(f.l.as_group()[0]))
    direct = rb.splitting_from_exact(f, order="HL")
    assert np.array_equal(lifted.images, direct.images)


def test_lift_with_nontrivial_factor_op():
    G = rb.named_group("cyclic:6")
    f = next(f for f in rb.exact_factorizations(G) if f.h.order == 3)
    Lgrp, to_parent = f.l.as_group()
    c = rb.make_rb(Lgrp, [0, 0])        # constant-e on Z2
    op = rb.lift_from_factor(f, c)
    assert rb.verify_rb(G, op).ok
    # everything maps to the identity here
    assert set(map(int, op.images)) == {0}


def test_lift_accepts_positional_images():
    G, f = s3_factorization()
    Lgrp, _ = f.l.as_group()
    op = rb.lift_from_factor(f, [0, 1])   # trivial-inv on Z2 written out
    assert rb.verify_rb(G, op).ok


def test_hom_to_abelian_sign_map():
    G = rb.named_group("symmetric:3")
    H = rb.closure(G, [1])                # a reflection: order 2
    r = int(H.members[1])
    a3 = rb.closure(G, [2]).mask()
    images = np.where(a3, 0, r).astype(np.int64)
    op = rb.hom_to_abelian(G, H, GroupMap(G, G, images))
    assert rb.verify_rb(G, op).ok
    anti = rb.hom_to_abelian(G, H, GroupMap(G, G, images), anti=True)
    assert rb.verify_rb(G, anti).ok


def test_hom_to_abelian_rejects_nonabelian_target():
    G = rb.named_group("symmetric:4")
    H = next(s for s in rb.all_subgroups(G)
             if s.order == 6 and not s.as_group()[0].is_abelian())
    with pytest.raises(InputFormatError):
        rb.hom_to_abelian(G, H, rb.identity_map(G))


def test_hom_to_abelian_rejects_escaping_images():
    G = rb.named_group("symmetric:3")
    H = rb.closure(G, [1])
    with pytest.raises(InputFormatError):
        rb.hom_to_abelian(G, H, rb.identity_map(G))


def test_hom_to_abelian_rejects_non_hom():
    G = rb.named_group("cyclic:6")
    H = rb.closure(G, [2])
    bad = GroupMap(G, G, np.array([0, 2, 0, 0, 0, 0], dtype=np.int64))
    with pytest.raises(InputFormatError):
        rb.hom_to_abelian(G, H, bad)


@pytest.mark.parametrize("ident,count,nonsplit", [
    ("dihedral:8", 39, 15),
    ("symmetric:4", 75, 15),
    ("dihedral:12", 80, 16),
    ("quaternion:8", 3, 3),
])
def test_lemma_r2_search_frozen_counts(ident, count, nonsplit):
    G = rb.named_group(ident)
    found = rb.lemma_r2_search(G)
    assert len(found) == count
    built = [rb.lemma_r2_construct(inst) for inst in found]
    assert all(rb.verify_rb(G, op).ok for op in built)
    assert sum(not rb.is_splitting(op) for op in built) == nonsplit
    # the target regime: |Im(B) ∩ Im(B~)| never exceeds 2
    for op in built:
        assert rb.intersection(rb.image(op), rb.image(rb.btilde(op))).order <= 2


def test_lemma_r2_rejects_bad_instance():
    G = rb.named_group("dihedral:8")
    whole = rb.whole_group(G)
    inst = LemmaR2Instance(h=whole, k=whole, h1=whole, k1=whole, r=0, t=0)
    with pytest.raises(PropertyFailure):
        rb.lemma_r2_construct(inst)


def test_extension_wraparound_guard():
    # BA(f^o) must agree with B(f)^o, otherwise the piecewise formula is
    # not well defined; this datum breaks it on Z4
    G = rb.named_group("cyclic:4")
    A = rb.closure(G, [2])
    data = ExtensionData(group=G, a=A, f=1,
                         ba_images=np.array([0, 1], dtype=np.int64), bf=0)
    with pytest.raises(InputFormatError):
        rb.extension_construct(data)


def test_extension_reproduces_fixture():
    G, fixture_op = rb.paper16_fixture()
    A = rb.closure(G, [2, 4, 8])
    # positions in A's member list [0,2,4,6,8,10,12,14]
    ba = np.array([0, 0, 3, 3, 7, 7, 4, 4], dtype=np.int64)
    data = ExtensionData(group=G, a=A, f=1, ba_images=ba, bf=2)
    cand, is_rb, cond = rb.extension_construct(data)
    assert is_rb and cond
    assert np.array_equal(cand.images, fixture_op.images)


def test_extension_condition_fails_somewhere():
    # on D8 half of all consistent data fail the commutator condition,
    # and the identity fails exactly in those cases
    G = rb.named_group("dihedral:8")
    hits = rb.extension_search(G)
    assert len(hits) == 352
    outcomes = []
    for data in hits:
        _, is_rb, cond = rb.extension_construct(data)
        assert is_rb == cond
        outcomes.append(is_rb)
    assert outcomes.count(True) == 176


def test_extension_search_abelian_always_rb():
    # abelian ambient group: the commutator condition is vacuous
    G = rb.named_group("cyclic:8")
    hits = rb.extension_search(G)
    assert len(hits) == 92
    for data in hits[:30]:
        _, is_rb, cond = rb.extension_construct(data)
        assert is_rb and cond


def test_paper16_fixture_frozen():
    G, op = rb.paper16_fixture()
    assert G.order == 16
    assert list(op.images) == [0, 2, 0, 2, 6, 4, 6, 4, 14, 12, 14, 12, 8, 10, 8, 10]
    assert op.provenance["mode"] == "full"
    assert not rb.is_splitting(op)
    assert rb.verify_rb(G, op).ok


def test_paper16_operator_is_not_a_hom():
    G, op = rb.paper16_fixture()
    phi = GroupMap(G, G, op.images)
    assert not phi.is_homomorphism(mode="full")
    assert not phi.is_homomorphism(mode="full", anti=True)


def test_paper16_not_from_any_factorization():
    # the fixture operator is not a factorization split in either order
    G, op = rb.paper16_fixture()
    for f in rb.exact_factorizations(G):
        for order in ("HL", "LH"):
            other = rb.splitting_from_exact(f, order=order)
            assert not np.array_equal(other.images, op.images)


def test_extension_provenance():
    G = rb.named_group("cyclic:8")
    hits = rb.extension_search(G)
    cand, is_rb, cond = rb.extension_construct(hits[0])
    assert is_rb
    op = rb.make_rb(G, cand.images)
    assert rb.verify_rb(G, op).ok
