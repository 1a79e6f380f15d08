"""Tour of the group layer: catalog ids, subgroups, factorizations.

Run with:  python demos/01_group_basics.py
"""

import rbgroups as rb


def main():
    print("== catalog ==")
    for ident in ["cyclic:12", "dihedral:8", "quaternion:8", "symmetric:4",
                  "alternating:5", "psl2:7", "paper16"]:
        G = rb.named_group(ident)
        print(f"  {ident:16s} order {G.order:4d}  abelian={G.is_abelian()}  "
              f"name={rb.structure_name(G)}")

    print("\n== subgroup lattice of S4 ==")
    G = rb.named_group("symmetric:4")
    subs = rb.all_subgroups(G)
    by_order = {}
    for s in subs:
        by_order.setdefault(int(s.order), []).append(s)
    for order in sorted(by_order):
        members = by_order[order]
        names = sorted({rb.structure_name(s) for s in members})
        print(f"  order {order:2d}: {len(members):2d} subgroups  {names}")

    print("\n== exact factorizations ==")
    for ident in ["cyclic:6", "symmetric:4", "psl2:7"]:
        G = rb.named_group(ident)
        fs = rb.exact_factorizations(G)
        shapes = sorted({(rb.structure_name(f.h), rb.structure_name(f.l))
                         for f in fs if 1 < f.h.order < G.order})
        print(f"  {ident}: {len(fs)} factorizations, proper shapes {shapes}")

    print("\n== quotients ==")
    G = rb.named_group("symmetric:4")
    v4 = next(s for s in rb.all_subgroups(G)
              if s.order == 4 and rb.is_normal(G, s)
              and (G.element_orders()[s.members] <= 2).all())
    Q = rb.quotient(rb.whole_group(G), v4)
    print(f"  S4 / 2^2  ->  {rb.structure_name(Q)}")

    print("\n== automorphisms ==")
    for ident in ["symmetric:3", "quaternion:8", "elemabelian:2:3", "psl2:7"]:
        G = rb.named_group(ident)
        auts = rb.automorphism_group(G)
        inner = sum(1 for a in auts if a.inner)
        print(f"  {ident:18s} |Aut| = {len(auts):4d}   inner = {inner}")


if __name__ == "__main__":
    main()
