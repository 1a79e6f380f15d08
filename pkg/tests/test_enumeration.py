"""Lattice enumeration vs brute force, equivalence orbits, classification."""

import numpy as np
import pytest

import rbgroups as rb
from rbgroups.enumeration import RBGraph, direct_square
from rbgroups.errors import GraphConditionError

# (catalog id, operator count, splitting count, equivalence classes)
# counts were computed once by exhaustive search and frozen
CENSUS = [
    ("cyclic:2", 2, 2, 1),
    ("cyclic:3", 3, 2, 2),
    ("cyclic:4", 4, 2, 2),
    ("cyclic:5", 5, 2, 3),
    ("cyclic:6", 6, 4, 3),
    ("cyclic:7", 7, 2, 4),
    ("cyclic:8", 8, 2, 4),
    ("elemabelian:2:2", 16, 8, 4),
    ("abelian:4x2", 32, 10, 7),
    ("elemabelian:2:3", 512, 58, 7),
    ("symmetric:3", 8, 8, 2),
    ("dihedral:8", 56, 18, 9),
    ("quaternion:8", 8, 2, 2),
]

# nontrivial splitting classes for the same groups, in the same order
EXPECTED_S = [0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 2, 0]


@pytest.mark.parametrize("ident,count,nsplit,nclasses",
                         CENSUS, ids=[c[0] for c in CENSUS])
def test_enumeration_matches_brute_force(ident, count, nsplit, nclasses):
    G = rb.named_group(ident)
    brute = rb.brute_force_rb(G)
    smart = rb.enumerate_rb(G)
    assert len(brute) == len(smart) == count
    assert {o.key() for o in brute} == {o.key() for o in smart}
    assert sum(rb.is_splitting(o) for o in smart) == nsplit


@pytest.mark.parametrize("ident,count,nsplit,nclasses",
                         CENSUS, ids=[c[0] for c in CENSUS])
def test_census_ops_all_verify(ident, count, nsplit, nclasses):
    G = rb.named_group(ident)
    for op in rb.enumerate_rb(G):
        assert rb.verify_rb(G, op).ok


def test_abelian_operators_are_endomorphisms():
    # on an abelian group the identity collapses to B(g)B(h) = B(gh)
    for ident, count, _, _ in CENSUS:
        G = rb.named_group(ident)
        if not G.is_abelian():
            continue
        for op in rb.enumerate_rb(G):
            phi = rb.GroupMap(G, G, op.images)
            assert phi.is_homomorphism(mode="full")


@pytest.mark.parametrize("ident,endo_count", [
    ("cyclic:4", 4), ("cyclic:6", 6),
    ("elemabelian:2:2", 16),      # 2x2 matrices over GF(2)
    ("elemabelian:2:3", 512),     # 3x3 matrices over GF(2)
    ("abelian:4x2", 32),
])
def test_abelian_census_equals_endomorphism_count(ident, endo_count):
    assert len(rb.enumerate_rb(rb.named_group(ident))) == endo_count


def test_graph_roundtrip():
    G = rb.named_group("dihedral:8")
    GG = direct_square(G)
    for op in rb.enumerate_rb(G):
        H = rb.graph_of(op, GG)
        assert H.members.size == G.order
        back = rb.rb_from_graph(H)
        assert np.array_equal(back.images, op.images)


def test_graph_is_subgroup():
    G = rb.named_group("symmetric:3")
    GG = direct_square(G)
    for op in rb.enumerate_rb(G):
        assert rb.graph_of(op, GG).check_subgroup()


def test_diagonal_subgroup_is_not_a_graph():
    # {(g, g)} has full size but constant differences
    G = rb.named_group("cyclic:4")
    GG = direct_square(G)
    codes = GG.pair(np.arange(4), np.arange(4))
    H = RBGraph(GG, codes)
    H.check_subgroup()
    with pytest.raises(GraphConditionError):
        rb.rb_from_graph(H)


def test_non_subgroup_rejected():
    G = rb.named_group("cyclic:4")
    GG = direct_square(G)
    codes = np.array([0, GG.pair(np.array([1]), np.array([2]))[0]])
    with pytest.raises(GraphConditionError):
        RBGraph(GG, codes).check_subgroup()


def test_product_subgroup_gives_splitting_op():
    G = rb.named_group("symmetric:3")
    GG = direct_square(G)
    f = next(f for f in rb.exact_factorizations(G) if f.h.order == 3)
    l, h = f.l.members, f.h.members
    codes = GG.pair(np.repeat(l, h.size), np.tile(h, l.size))
    op = rb.rb_from_graph(RBGraph(GG, codes))
    assert rb.verify_rb(G, op).ok
    assert rb.is_splitting(op)


@pytest.mark.parametrize("ident,count,nsplit,nclasses",
                         CENSUS, ids=[c[0] for c in CENSUS])
def test_equivalence_class_census(ident, count, nsplit, nclasses):
    G = rb.named_group(ident)
    ops = rb.enumerate_rb(G)
    classes = rb.classify_equivalence(ops)  # also re-checks class invariants
    assert len(classes) == nclasses
    assert sum(c.size for c in classes) == count


def test_trivial_pair_shares_an_orbit():
    for ident in ["cyclic:6", "symmetric:3", "quaternion:8"]:
        G = rb.named_group(ident)
        orbit = rb.q_orbit(rb.trivial_e(G))
        GG = direct_square(G)
        assert rb.graph_of(rb.trivial_inv(G), GG).key() in orbit.graph_keys


def test_swap_transform_realizes_companion():
    G = rb.named_group("symmetric:3")
    GG = direct_square(G)
    swap = next(t for t in rb.q_transform_generators(G) if t.label == "swap")
    for op in rb.enumerate_rb(G):
        moved = swap.apply_codes(GG, rb.graph_of(op, GG).members)
        assert moved.tobytes() == rb.graph_of(rb.btilde(op), GG).key()


def test_orbit_invariants_hold():
    G = rb.named_group("dihedral:8")
    ops = rb.enumerate_rb(G)
    for c in rb.classify_equivalence(ops, verify_invariants=True):
        assert c.size >= 1
        assert c.representative.key() in {o.key() for o in ops}


@pytest.mark.parametrize("idx", range(len(CENSUS)), ids=[c[0] for c in CENSUS])
def test_classify_splitting_small_groups(idx):
    ident, _, _, _ = CENSUS[idx]
    G = rb.named_group(ident)
    rep = rb.classify_splitting(G)
    assert rep.s == EXPECTED_S[idx]
    assert rep.verification["representatives_verified"] in (True, None)
    # cross-check against the operator census: nontrivial splitting classes
    classes = rb.classify_equivalence(rb.enumerate_rb(G))
    nontrivial = [c for c in classes if c.splitting and c.image_names[0] != "1"]
    assert rep.s == len(nontrivial)


def test_classify_splitting_images_s3():
    rep = rb.classify_splitting(rb.named_group("symmetric:3"))
    assert [c.images for c in rep.classes] == [("2", "3")]


def test_classify_splitting_images_d8():
    rep = rb.classify_splitting(rb.named_group("dihedral:8"))
    assert sorted(c.images for c in rep.classes) == [("2", "2^2"), ("2", "4")]


@pytest.mark.parametrize("q,s", [(4, 1), (7, 2), (9, 0), (13, 0)])
def test_psl2_expected_table(q, s):
    value, status, note = rb.psl2_expected_s(q)
    assert value == s
    assert status == "MATCH"


def test_psl2_expected_flag_q5():
    value, status, note = rb.psl2_expected_s(5)
    assert value == 1
    assert status == "FLAGGED"
    assert "psl2:4" in note


def test_obstruction_empty_on_small_simple():
    rep = rb.nonsplitting_obstruction(rb.named_group("psl2:7"))
    assert rep.survivors == []
    assert "no non-splitting" in rep.verdict


def test_obstruction_nonempty_on_fixture_group():
    G, _ = rb.paper16_fixture()
    rep = rb.nonsplitting_obstruction(G)
    assert rep.survivors          # the group really carries such operators
    assert rep.eliminated


def test_obstruction_nonempty_where_nonsplitting_exists():
    # Z4 carries the non-splitting doubling endomorphism, so the
    # necessary-condition scan must keep at least one pair
    G = rb.named_group("cyclic:4")
    rep = rb.nonsplitting_obstruction(G)
    assert rep.survivors


def test_orbit_size_counts_distinct_graphs():
    G = rb.named_group("cyclic:6")
    ops = rb.enumerate_rb(G)
    classes = rb.classify_equivalence(ops)
    sizes = sorted(c.size for c in classes)
    assert sizes == [2, 2, 2]
