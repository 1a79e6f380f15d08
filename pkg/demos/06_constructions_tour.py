"""Every operator construction in the library, one example each.

Run with:  python demos/06_constructions_tour.py
"""

import numpy as np

import rbgroups as rb
from rbgroups.maps import GroupMap


def stamp(tag, G, op):
    rep = rb.structure_report(op)
    print(f"  {tag:28s} images Im(B)={rb.structure_name(rep.image):8s} "
          f"Im(B~)={rb.structure_name(rep.image_tilde):8s} "
          f"splitting={rep.splitting}")


def main():
    print("== trivial operators ==")
    G = rb.named_group("symmetric:4")
    stamp("constant-identity", G, rb.trivial_e(G))
    stamp("inversion", G, rb.trivial_inv(G))

    print("\n== factorization splits on S4 ==")
    for f in rb.exact_factorizations(G):
        if f.h.order in (6, 8) and f.l.order > 1:
            stamp(f"{rb.structure_name(f.h)} . {rb.structure_name(f.l)}",
                  G, rb.splitting_from_exact(f))
            break
    f = next(f for f in rb.exact_factorizations(G) if f.h.order == 12)
    stamp("A4 . 2 (swapped order)", G, rb.splitting_from_exact(f, order="LH"))

    print("\n== homomorphism into an abelian subgroup (S3, sign map) ==")
    S3 = rb.named_group("symmetric:3")
    H = rb.closure(S3, [1])
    sign = np.where(rb.closure(S3, [2]).mask(), 0, int(H.members[1]))
    stamp("sign map", S3, rb.hom_to_abelian(S3, H, GroupMap(S3, S3, sign.astype(np.int64))))

    print("\n== lifting an operator through a factorization (S3 = 3 . 2) ==")
    f = next(f for f in rb.exact_factorizations(S3) if f.h.order == 3)
    stamp("lift of trivial-inv", S3, rb.lift_from_factor(f, [0, 1]))

    print("\n== index-2 gluing (first hit of the search on D8) ==")
    D8 = rb.named_group("dihedral:8")
    found = rb.lemma_r2_search(D8)
    nonsplit = [i for i in found
                if not rb.is_splitting(rb.lemma_r2_construct(i))]
    print(f"  search found {len(found)} instances, "
          f"{len(nonsplit)} give non-splitting operators")
    stamp("first non-splitting hit", D8, rb.lemma_r2_construct(nonsplit[0]))

    print("\n== abelian-extension gluing ==")
    counts = {}
    for ident in ["dihedral:8", "quaternion:8", "paper16"]:
        Gx = rb.named_group(ident)
        hits = rb.extension_search(Gx)
        ok = sum(rb.extension_construct(d)[1] for d in hits)
        counts[ident] = (len(hits), ok)
    for ident, (total, ok) in counts.items():
        print(f"  {ident:14s} {total:5d} consistent data, {ok:5d} satisfy the "
              f"commutator condition (and exactly those are operators)")

    print("\n== the order-16 showcase ==")
    G16, op16 = rb.paper16_fixture()
    stamp("order-16 fixture", G16, op16)


if __name__ == "__main__":
    main()
