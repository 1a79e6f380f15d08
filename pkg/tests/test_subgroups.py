"""Subgroup closure, lattice search, quotients, exact factorizations."""

import itertools

import numpy as np
import pytest

import rbgroups as rb
from rbgroups.errors import InputFormatError, ResourceCapError


def brute_closure(G, gens):
    members = {0, *map(int, gens)}
    changed = True
    while changed:
        changed = False
        for a, b in itertools.product(list(members), repeat=2):
            p = G.mul(a, b)
            if p not in members:
                members.add(p)
                changed = True
    return sorted(members)


@pytest.mark.parametrize("ident,gens", [
    ("symmetric:3", [1]), ("symmetric:3", [2]), ("symmetric:3", [1, 2]),
    ("dihedral:8", [2]), ("dihedral:8", [1, 4]),
    ("symmetric:4", [1, 9]), ("paper16", [2, 4]),
])
def test_closure_matches_brute_force(ident, gens):
    G = rb.named_group(ident)
    sub = rb.closure(G, gens)
    assert list(sub.members) == brute_closure(G, gens)


def test_subgroup_contains_and_mask():
    G = rb.named_group("symmetric:3")
    sub = rb.closure(G, [2])
    assert sub.order == 3
    m = sub.mask()
    for g in range(6):
        assert sub.contains(g) == bool(m[g])


def test_as_group_is_faithful():
    G = rb.named_group("symmetric:4")
    sub = rb.closure(G, [1, 9])
    H, to_parent = sub.as_group()
    assert H.order == sub.order
    for a in range(H.order):
        for b in range(H.order):
            assert to_parent[H.mul(a, b)] == G.mul(int(to_parent[a]), int(to_parent[b]))


@pytest.mark.parametrize("ident,count", [
    ("cyclic:12", 6),          # one per divisor
    ("symmetric:3", 6),
    ("dihedral:8", 10),
    ("quaternion:8", 6),
    ("elemabelian:2:2", 5),
    ("symmetric:4", 30),
    ("alternating:5", 59),
])
def test_lattice_counts(ident, count):
    G = rb.named_group(ident)
    assert len(rb.all_subgroups(G)) == count


def test_lattice_orders_divide():
    G = rb.named_group("symmetric:4")
    for sub in rb.all_subgroups(G):
        assert G.order % sub.order == 0


def test_all_subgroups_max_order():
    G = rb.named_group("symmetric:4")
    subs = rb.all_subgroups(G, max_order=8)
    assert {int(s.order) for s in subs} <= {1, 2, 3, 4, 6, 8, 24}
    # proper subgroups above the cut are gone but G itself is reported
    assert max(s.order for s in subs if s.order < 24) <= 8


def test_allowed_orders_filter():
    G = rb.named_group("symmetric:4")
    subs = rb.all_subgroups(G, allowed_orders={1, 2, 3, 4, 6, 8, 12, 24})
    assert len(subs) == 30  # every divisor allowed: same as the full lattice


def test_lattice_cap_raises():
    G = rb.named_group("elemabelian:2:3")
    with pytest.raises(ResourceCapError):
        rb.all_subgroups(G, lattice_cap=3)


@pytest.mark.parametrize("ident,normal_count", [
    ("symmetric:3", 3),       # 1, A3, S3
    ("dihedral:8", 6),
    ("quaternion:8", 6),      # every subgroup is normal
    ("symmetric:4", 4),       # 1, V4, A4, S4
])
def test_normal_subgroup_counts(ident, normal_count):
    G = rb.named_group(ident)
    normals = [s for s in rb.all_subgroups(G) if rb.is_normal(G, s)]
    assert len(normals) == normal_count


def test_normalizer_mask():
    G = rb.named_group("symmetric:3")
    sub = rb.closure(G, [1])           # one reflection, order 2, self-normalizing
    mask = rb.normalizer_mask(G, sub)
    assert int(mask.sum()) == 2
    a3 = rb.closure(G, [2])
    assert int(rb.normalizer_mask(G, a3).sum()) == 6


def test_conjugate_subgroup():
    G = rb.named_group("symmetric:4")
    sub = rb.closure(G, [1])
    for g in range(G.order):
        c = rb.conjugate_subgroup(G, sub, g)
        assert c.order == sub.order
        expect = sorted(int(G.mul(G.mul(G.inv(g), int(s)), g)) for s in sub.members)
        assert list(c.members) == expect


def test_normal_closure():
    G = rb.named_group("symmetric:4")
    # normal closure of a transposition is all of S4
    t = int(np.nonzero(G.element_orders() == 2)[0][0])
    nc = rb.normal_closure(G, [t])
    assert nc.order in (12, 24)
    ds = rb.derived_subgroup(G)
    assert ds.order == 12               # A4


@pytest.mark.parametrize("ident,derived_order", [
    ("symmetric:3", 3), ("symmetric:4", 12), ("alternating:4", 4),
    ("alternating:5", 60), ("dihedral:8", 2), ("quaternion:8", 2),
    ("cyclic:12", 1), ("paper16", 2),
])
def test_derived_subgroup(ident, derived_order):
    G = rb.named_group(ident)
    assert rb.derived_subgroup(G).order == derived_order


def test_intersection_and_product_set():
    G = rb.named_group("dihedral:8")
    subs = rb.all_subgroups(G)
    four = [s for s in subs if s.order == 4]
    a, b = four[0], four[1]
    inter = rb.intersection(a, b)
    prod = rb.product_set(a, b)          # boolean mask over G
    assert inter.order * int(prod.sum()) == a.order * b.order


def test_quotient_s4_mod_v4():
    G = rb.named_group("symmetric:4")
    v4 = next(s for s in rb.all_subgroups(G)
              if s.order == 4 and rb.is_normal(G, s)
              and (G.element_orders()[s.members] <= 2).all())
    Q = rb.quotient(rb.whole_group(G), v4)
    assert Q.order == 6
    assert rb.structure_name(Q) == "S3"


def test_quotient_projection_is_hom():
    G = rb.named_group("dihedral:8")
    centre = rb.closure(G, [int(z) for z in G.center() if z])
    Q, proj = rb.quotient_with_projection(rb.whole_group(G), centre)
    assert Q.order == 4
    for a in range(8):
        for b in range(8):
            assert proj[G.mul(a, b)] == Q.mul(int(proj[a]), int(proj[b]))


def test_quotient_requires_normal():
    G = rb.named_group("symmetric:3")
    refl = rb.closure(G, [1])
    with pytest.raises(InputFormatError):
        rb.quotient(rb.whole_group(G), refl)


@pytest.mark.parametrize("ident,pairs", [
    # one factorization per unordered pair, larger side reported first
    ("cyclic:6", [(3, 2), (6, 1)]),
    ("symmetric:3", [(3, 2), (6, 1)]),
    ("quaternion:8", [(8, 1)]),            # no proper exact factorization
    ("cyclic:4", [(4, 1)]),
])
def test_exact_factorization_order_pairs(ident, pairs):
    G = rb.named_group(ident)
    got = sorted({(int(f.h.order), int(f.l.order)) for f in rb.exact_factorizations(G)})
    assert got == sorted(pairs)


def test_exact_factorizations_cover():
    G = rb.named_group("symmetric:4")
    for f in rb.exact_factorizations(G):
        assert f.h.order * f.l.order == G.order
        assert rb.intersection(f.h, f.l).order == 1
        assert rb.product_set(f.h, f.l).all()


def test_psl27_factorization_shapes():
    G = rb.named_group("psl2:7")
    shapes = {(int(f.h.order), int(f.l.order)) for f in rb.exact_factorizations(G)}
    # exactly the shapes S4 . 7, (7:3) . D8 and the trivial split
    assert sorted(shapes) == [(21, 8), (24, 7), (168, 1)]


def test_trivial_group_factorization():
    G = rb.named_group("cyclic:1")
    fs = rb.exact_factorizations(G)
    assert len(fs) == 1
    assert fs[0].h.order == fs[0].l.order == 1
