"""Permutations of the vertex labels {0,1,2,3} of a tetrahedron.

Gluings between tetrahedron faces are recorded as Perm4 objects: the
permutation sends vertex labels of the source tetrahedron to vertex labels
of the destination.  There are exactly 24 instances, interned and totally
ordered by their image tuples, so they may be compared, hashed and used as
dictionary keys freely.
"""

from itertools import permutations

__all__ = ["Perm4", "PERMS4"]


class Perm4:
    """A permutation of {0,1,2,3}, stored as the 4-tuple of images."""

    __slots__ = ("images", "_index")
    _instances = {}

    def __new__(cls, images):
        images = tuple(images)
        try:
            return cls._instances[images]
        except KeyError:
            pass
        if sorted(images) != [0, 1, 2, 3]:
            raise ValueError("not a permutation of {0,1,2,3}: %r" % (images,))
        self = object.__new__(cls)
        self.images = images
        self._index = None
        cls._instances[images] = self
        return self

    @classmethod
    def identity(cls):
        return cls((0, 1, 2, 3))

    @classmethod
    def transposition(cls, a, b):
        images = [0, 1, 2, 3]
        images[a], images[b] = images[b], images[a]
        return cls(images)

    @classmethod
    def from_images(cls, mapping):
        """Build from a {source: image} dict covering all four labels."""
        return cls(tuple(mapping[i] for i in range(4)))

    def __getitem__(self, i):
        return self.images[i]

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        """Composition: (p * q)(x) = p(q(x))."""
        return Perm4(tuple(self.images[other.images[i]] for i in range(4)))

    def inverse(self):
        inv = [0] * 4
        for i, img in enumerate(self.images):
            inv[img] = i
        return Perm4(tuple(inv))

    def sign(self):
        """+1 for even permutations, -1 for odd."""
        s = 1
        for i in range(4):
            for j in range(i + 1, 4):
                if self.images[i] > self.images[j]:
                    s = -s
        return s

    @property
    def index(self):
        """Position in the lexicographic order of all 24 permutations."""
        if self._index is None:
            self._index = PERMS4.index(self)
        return self._index

    def __repr__(self):
        return "Perm4(%d%d%d%d)" % self.images

    def __str__(self):
        return "%d%d%d%d" % self.images

    def __lt__(self, other):
        return self.images < other.images

    def __le__(self, other):
        return self.images <= other.images

    def __hash__(self):
        return hash(self.images)

    def __eq__(self, other):
        return self is other or (isinstance(other, Perm4) and self.images == other.images)


PERMS4 = tuple(Perm4(p) for p in permutations(range(4)))
