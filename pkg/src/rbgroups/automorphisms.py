"""Automorphism groups and isomorphism testing.

Automorphisms are found by extending generator images: a candidate
assignment on a generating set either extends to a unique map (built by
breadth-first search over the Cayley graph, checking every edge for
multiplicativity on the way) or conflicts and dies.  Since the search
checks all n*k edges, a surviving bijection is a genuine automorphism —
no sampling involved.

For larger groups the candidate space is cut down with a stabilizer
decomposition: fix a conjugacy class C that every automorphism must
preserve (it has a class fingerprint shared by no other class), pick a
base point x in C and a mate y with <x, y> = G.  Then every automorphism
is (conjugation moving x within C) composed with an automorphism fixing
x, and the latter are enumerated by candidate images of y alone.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import ResourceCapError
from .groups import FiniteGroup
from .maps import GroupMap, inner_automorphism
from .subgroups import _closure_members


def extend_by_generator_images(G, H, srcs, imgs):
    """The unique map G -> H with the given generator images, or None.

    ``srcs`` must generate G.  Every Cayley edge is checked, so a
    non-None result is a full homomorphism (bijective or not).
    """
    n = G.order
    img = np.full(n, -1, dtype=np.int64)
    img[0] = 0
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        nxt = []
        for s, si in zip(srcs, imgs):
            gs = G.col(int(s))[frontier]
            hs = H.col(int(si))[img[frontier]]
            unseen = img[gs] == -1
            img[gs[unseen]] = hs[unseen]
            if (img[gs] != hs).any():
                return None
            nxt.append(gs[unseen])
        frontier = np.unique(np.concatenate(nxt)) if nxt else np.empty(0, np.int64)
        frontier = frontier[img[frontier] != -1]  # guard: all were assigned
    if (img == -1).any():
        return None
    return img


def class_fingerprints(G):
    """Per-class invariants preserved by every automorphism.

    Returns (classes, class_of, fps) where fps[i] is a hashable
    fingerprint of class i, refined through power maps.
    """
    classes = G.conjugacy_classes()
    cid = G.class_of()
    orders = G.element_orders()
    fps = [(int(orders[c[0]]), len(c)) for c in classes]
    for _ in range(2):
        nxt = []
        for i, c in enumerate(classes):
            rep = int(c[0])
            powers = tuple(fps[cid[G.power(rep, j)]] for j in (2, 3, 5, 7))
            nxt.append((fps[i], powers))
        fps = nxt
    return classes, cid, fps


def _candidates_by_fingerprint(G, fps_by_elem, g):
    want = fps_by_elem[g]
    return [x for x in range(1, G.order) if fps_by_elem[x] == want]


def _elem_fps(G):
    classes, cid, fps = class_fingerprints(G)
    return [fps[cid[x]] for x in range(G.order)]


def _generating_pair(G):
    """A pair (x, y) with <x, y> = G, x taken from a rare fingerprint
    class; None when no pair turns up within a bounded scan."""
    elem_fps = _elem_fps(G)
    counts = {}
    for f in elem_fps[1:]:
        counts[f] = counts.get(f, 0) + 1
    by_rarity = sorted(range(1, G.order), key=lambda g: (counts[elem_fps[g]], g))
    tried = 0
    for x in by_rarity[:8]:
        for y in range(1, G.order):
            if _closure_members(G, [x, y]).size == G.order:
                return x, y
            tried += 1
            if tried > 4 * G.order:
                return None
    return None


def _stabilizer_data(G, node_budget):
    """Base data for the transporter x stabilizer decomposition, or None.

    Picks a conjugacy class ``cls`` no automorphism can move (its class
    fingerprint is unique), a base point x in it and a mate y with
    <x, y> = G, then enumerates the image arrays of every automorphism
    fixing x.  Returns (x, y, cls, stab, conj_x, inner_keys) where
    ``inner_keys`` is the set of (x, y)-image pairs realized by inner
    automorphisms.
    """
    classes, cid, fps = class_fingerprints(G)
    counts = {}
    for f in fps:
        counts[f] = counts.get(f, 0) + 1
    base = None
    for c, f in zip(classes, fps):
        if counts[f] != 1 or (len(c) == 1 and c[0] == 0):
            continue
        x = int(min(c))
        for y in range(1, G.order):
            mem = _closure_members(G, [x, y])
            if mem.size == G.order:
                base = (x, y, np.sort(np.asarray(c)))
                break
        if base is not None:
            break
    if base is None:
        return None
    x, y, cls = base
    elem_fps = [fps[cid[g]] for g in range(G.order)]
    cands = [h for h in range(1, G.order) if elem_fps[h] == elem_fps[y]]
    if len(cands) * G.order * 2 > node_budget:
        raise ResourceCapError("automorphism search exceeds the node budget")
    stab = []
    for y2 in cands:
        img = extend_by_generator_images(G, G, (x, y), (x, y2))
        if img is not None and np.unique(img).size == G.order:
            stab.append(img)
    conj_x = G.conjugate_all(x)
    conj_y = G.conjugate_all(y)
    inner_keys = set()
    for g in range(G.order):
        inner_keys.add((int(conj_x[g]), int(conj_y[g])))
    return x, y, cls, stab, conj_x, inner_keys


def _aut_via_stabilizer(G, node_budget):
    """Automorphisms as transporter x stabilizer, or None if no usable
    base pair exists."""
    data = _stabilizer_data(G, node_budget)
    if data is None:
        return None
    x, y, cls, stab, conj_x, inner_keys = data
    transporter = {}
    for g in range(G.order):
        c = int(conj_x[g])
        if c not in transporter:
            transporter[c] = g
    auts = []
    for c in cls:
        alpha = inner_automorphism(G, transporter[int(c)]).images
        for sig in stab:
            images = alpha[sig]
            flag = (int(images[x]), int(images[y])) in inner_keys
            auts.append(GroupMap(G, G, images, inner=flag))
    assert len({a.key() for a in auts}) == len(auts)
    return auts


def _aut_by_backtracking(G, node_budget):
    gens = G.find_generating_set()
    if len(gens) > 4:
        raise ResourceCapError("more than 4 generators; automorphism search refused")
    elem_fps = _elem_fps(G)
    cand_lists = [_candidates_by_fingerprint(G, elem_fps, g) for g in gens]
    total = 1
    for c in cand_lists:
        total *= max(1, len(c))
    if total * G.order * len(gens) > node_budget:
        raise ResourceCapError("automorphism search exceeds the node budget")
    gen_tuples = {tuple(int(G.conjugate(g, t)) for g in gens) for t in range(G.order)}
    auts = []
    for choice in itertools.product(*cand_lists):
        img = extend_by_generator_images(G, G, gens, choice)
        if img is not None and np.unique(img).size == G.order:
            auts.append(GroupMap(G, G, img, inner=tuple(choice) in gen_tuples))
    return auts


def automorphism_group(G, *, node_budget=10 ** 8):
    """Every automorphism of G as a GroupMap with an ``inner`` flag,
    sorted by image array."""
    if G.order == 1:
        return [GroupMap(G, G, np.zeros(1, dtype=np.int64), inner=True)]
    auts = None
    if not G.is_abelian() and G.order > 60:
        auts = _aut_via_stabilizer(G, node_budget)
    if auts is None:
        auts = _aut_by_backtracking(G, node_budget)
    auts.sort(key=lambda a: a.key())
    return auts


def aut_generators(G, *, node_budget=10 ** 8):
    """A small (not minimal) generating collection of Aut(G): inner
    automorphisms at group generators plus, for larger groups, the base
    stabilizer; for small groups simply every automorphism."""
    inner = [inner_automorphism(G, int(g)) for g in G.find_generating_set()]
    if G.order <= 60 or G.is_abelian():
        return inner + automorphism_group(G, node_budget=node_budget)
    data = _stabilizer_data(G, node_budget)
    if data is None:
        return inner + automorphism_group(G, node_budget=node_budget)
    x, y, _, stab, _, inner_keys = data
    # every automorphism is (inner transporter) o (stabilizer element),
    # so the inner generators plus the stabilizer generate all of Aut
    out = dict((a.key(), a) for a in inner)
    for sig in stab:
        a = GroupMap(G, G, sig, inner=(int(sig[x]), int(sig[y])) in inner_keys)
        if a.key() not in out:
            out[a.key()] = a
    return list(out.values())


def is_isomorphic(G, H, *, node_budget=10 ** 8):
    """Explicit isomorphism search by generator-image backtracking."""
    if G.order != H.order:
        return False
    if G.fingerprint() != H.fingerprint():
        return False
    gens = G.find_generating_set()
    if len(gens) > 2 and not G.is_abelian():
        pair = _generating_pair(G)
        if pair is not None:
            gens = pair
    if len(gens) > 4:
        raise ResourceCapError("more than 4 generators; isomorphism search refused")
    fps_G = _elem_fps(G)
    fps_H = _elem_fps(H)
    cand_lists = []
    for g in gens:
        want = fps_G[g]
        cand_lists.append([x for x in range(1, H.order) if fps_H[x] == want])
    total = 1
    for c in cand_lists:
        total *= max(1, len(c))
    if total * G.order * len(gens) > node_budget:
        raise ResourceCapError("isomorphism search exceeds the node budget")
    for choice in itertools.product(*cand_lists):
        img = extend_by_generator_images(G, H, gens, choice)
        if img is not None and np.unique(img).size == G.order:
            return True
    return False


def find_isomorphism(G, H, *, node_budget=10 ** 8):
    """Like is_isomorphic but returns the GroupMap (or None)."""
    if G.order != H.order or G.fingerprint() != H.fingerprint():
        return None
    gens = G.find_generating_set()
    if len(gens) > 2 and not G.is_abelian():
        pair = _generating_pair(G)
        if pair is not None:
            gens = pair
    fps_G = _elem_fps(G)
    fps_H = _elem_fps(H)
    cand_lists = []
    for g in gens:
        want = fps_G[g]
        cand_lists.append([x for x in range(1, H.order) if fps_H[x] == want])
    for choice in itertools.product(*cand_lists):
        img = extend_by_generator_images(G, H, gens, choice)
        if img is not None and np.unique(img).size == G.order:
            return GroupMap(G, H, img)
    return None
