"""Maps between groups as dense image arrays."""

from __future__ import annotations

from dataclasses import dataclass, field as _dc_field

import numpy as np

from .errors import PropertyFailure


@dataclass
class GroupMap:
    """A map source -> target given by images[g] for every element g.

    ``inner`` is an optional flag for automorphisms (conjugation by some
    element); None means not determined.
    """

    source: object
    target: object
    images: np.ndarray
    inner: bool | None = None

    def __post_init__(self):
        self.images = np.asarray(self.images, dtype=np.int64)

    def __call__(self, g):
        return int(self.images[g])

    def apply(self, arr):
        return self.images[np.asarray(arr, dtype=np.int64)]

    def key(self):
        return self.images.tobytes()

    def is_bijective(self):
        return self.images.size == self.source.order and \
            np.unique(self.images).size == self.images.size

    def is_homomorphism(self, mode="auto", seed=0, samples=200000, anti=False):
        """Check phi(x y) = phi(x) phi(y) (or the reversed product when
        ``anti``), fully for small sources and sampled beyond."""
        G, H, img = self.source, self.target, self.images
        n = G.order
        if mode == "auto":
            mode = "full" if n <= 1500 else "sampled"
        if img[0] != 0:
            return False
        if mode == "full":
            for x in range(n):
                lhs = img[G.row(x)]
                rhs = H.mul_vec(np.full(n, img[x], dtype=np.int64), img) if not anti \
                    else H.mul_vec(img, np.full(n, img[x], dtype=np.int64))
                if not np.array_equal(lhs, rhs):
                    return False
            return True
        rng = np.random.default_rng(seed)
        xs = rng.integers(0, n, size=samples)
        ys = rng.integers(0, n, size=samples)
        lhs = img[G.mul_vec(xs, ys)]
        rhs = H.mul_vec(img[xs], img[ys]) if not anti else H.mul_vec(img[ys], img[xs])
        return bool(np.array_equal(lhs, rhs))

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self after other (apply ``other`` first)."""
        inner = True if (self.inner and other.inner) else None
        return GroupMap(other.source, self.target, self.images[other.images],
                        inner=inner)

    def inverse(self) -> "GroupMap":
        if not self.is_bijective():
            raise PropertyFailure("map-not-bijective")
        inv = np.argsort(self.images)
        return GroupMap(self.target, self.source, inv, inner=self.inner)

    def __repr__(self):
        tag = {True: " inner", False: " outer", None: ""}[self.inner]
        return f"GroupMap({self.source.name}->{self.target.name}{tag})"


def identity_map(G) -> GroupMap:
    return GroupMap(G, G, np.arange(G.order, dtype=np.int64), inner=True)


def inner_automorphism(G, g) -> GroupMap:
    """x -> g^-1 x g."""
    u = G.row(G.inv(int(g)))
    images = G.mul_vec(u, np.full(G.order, int(g), dtype=np.int64))
    return GroupMap(G, G, images, inner=True)
