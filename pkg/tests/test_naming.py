"""Structure names used in classification output."""

import pytest

import rbgroups as rb


@pytest.mark.parametrize("ident,name", [
    ("cyclic:1", "1"),
    ("cyclic:7", "7"),
    ("cyclic:12", "12"),
    ("elemabelian:2:3", "2^3"),
    ("elemabelian:3:2", "3^2"),
    ("abelian:4x2", "4x2"),
    ("abelian:4x4", "4x4"),
    ("abelian:6x2", "6x2"),
    ("symmetric:3", "S3"),
    ("symmetric:4", "S4"),
    ("symmetric:5", "S5"),
    ("alternating:4", "A4"),
    ("alternating:5", "A5"),
    ("dihedral:8", "D8"),
    ("dihedral:12", "D12"),
    ("dihedral:24", "D24"),
    ("quaternion:8", "Q8"),
    ("paper16", "unidentified(order=16)"),
])
def test_names(ident, name):
    assert rb.structure_name(rb.named_group(ident)) == name


def test_abelian_invariants():
    assert rb.abelian_invariants(rb.named_group("cyclic:12")) == [12]
    assert rb.abelian_invariants(rb.named_group("abelian:4x2")) == [4, 2]
    assert rb.abelian_invariants(rb.named_group("elemabelian:2:3")) == [2, 2, 2]
    assert rb.abelian_invariants(rb.named_group("abelian:6x2")) == [6, 2]
    # Z3 x Z4 is cyclic of order 12
    assert rb.abelian_invariants(rb.named_group("abelian:3x4")) == [12]


def test_a5_beats_icosahedral_ambiguity():
    # PSL2(4) and PSL2(5) both carry the A5 name
    assert rb.structure_name(rb.named_group("psl2:4")) == "A5"
    assert rb.structure_name(rb.named_group("psl2:5")) == "A5"


def test_s3_beats_d6():
    # S3 = D6; the symmetric name wins
    assert rb.structure_name(rb.named_group("dihedral:6")) == "S3"


def test_frobenius_split_names():
    G = rb.named_group("psl2:7")
    for f in rb.exact_factorizations(G):
        if f.h.order == 21:
            assert rb.structure_name(f.h) == "7:3"
        if f.h.order == 24:
            assert rb.structure_name(f.h) == "S4"
        if f.l.order == 8:
            assert rb.structure_name(f.l) == "D8"
    G8 = rb.named_group("psl2:8")
    for f in rb.exact_factorizations(G8):
        if f.h.order == 56:
            assert rb.structure_name(f.h) == "2^3:7"
        if f.l.order == 9:
            assert rb.structure_name(f.l) == "9"


def test_borel_names_psl2_11():
    G = rb.named_group("psl2:11")
    seen = set()
    for f in rb.exact_factorizations(G):
        seen.add(rb.structure_name(f.h))
        seen.add(rb.structure_name(f.l))
    assert "11:5" in seen
    assert "A5" in seen or "A4" in seen


def test_subgroup_shortcuts():
    G = rb.named_group("symmetric:4")
    assert rb.structure_name(rb.trivial_subgroup(G)) == "1"
    assert rb.structure_name(rb.whole_group(G)) == "S4"


def test_name_is_isomorphism_invariant():
    # same name through two different constructions of the same group
    a = rb.named_group("abelian:2x2")
    b = rb.named_group("elemabelian:2:2")
    assert rb.structure_name(a) == rb.structure_name(b) == "2^2"


def test_unidentified_fallback_is_honest():
    name = rb.structure_name(rb.named_group("paper16"))
    assert name.startswith("unidentified")
    assert "16" in name
