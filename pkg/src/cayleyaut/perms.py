"""Permutations of the points 1..n and the groups they generate.

Products are written left to right: ``compose(p, q)`` applies ``p`` first and
then ``q``, so ``compose((1,2), (2,3))`` is the 3-cycle 1->3->2->1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import CapExceeded

DEFAULT_CAP = 50_000


def _trim(images: tuple[int, ...]) -> tuple[int, ...]:
    n = len(images)
    while n and images[n - 1] == n:
        n -= 1
    return images[:n]


@dataclass(frozen=True, eq=False)
class Permutation:
    """A bijection of {1..degree}; ``images[i - 1]`` is the image of point ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int = 0) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, *cycles: Sequence[int], degree: int | None = None) -> Permutation:
        top = max((max(c) for c in cycles if c), default=0)
        n = max(top, degree or 0)
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for i, a in enumerate(cycle):
                if a in seen or a < 1:
                    raise ValueError(f"bad cycle {cycle}")
                seen.add(a)
                images[a - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def transposition(cls, a: int, b: int, degree: int | None = None) -> Permutation:
        if a == b:
            raise ValueError("a transposition needs two distinct points")
        return cls.from_cycles((a, b), degree=degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        if 1 <= point <= len(self.images):
            return self.images[point - 1]
        return point

    def padded(self, degree: int) -> tuple[int, ...]:
        """Image sequence extended with fixed points up to ``degree``."""
        if degree < len(self.images):
            if len(self.key) > degree:
                raise ValueError(f"permutation moves points beyond {degree}")
            return self.images[:degree]
        return self.images + tuple(range(len(self.images) + 1, degree + 1))

    @property
    def key(self) -> tuple[int, ...]:
        """Degree-independent key: the image sequence with trailing fixed points removed."""
        return _trim(self.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return not self.key

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images, 1) if x != i]

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        result = 1
        for c in self.cycles():
            result = result * len(c) // gcd(result, len(c))
        return result

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "Permutation(())"
        return "Permutation(" + "".join("(" + ",".join(map(str, c)) + ")" for c in cycles) + ")"


@dataclass(frozen=True, order=True)
class Transposition:
    """The swap of two distinct points, normalised so that ``a < b``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        a, b = int(self.a), int(self.b)
        if a == b or min(a, b) < 1:
            raise ValueError(f"invalid transposition ({a},{b})")
        object.__setattr__(self, "a", min(a, b))
        object.__setattr__(self, "b", max(a, b))

    def as_permutation(self, degree: int | None = None) -> Permutation:
        return Permutation.transposition(self.a, self.b, degree)

    def commutes_with(self, other: Transposition) -> bool:
        return self == other or not ({self.a, self.b} & {other.a, other.b})

    def __repr__(self) -> str:
        return f"({self.a},{self.b})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` then ``q``: the result sends i to q(p(i))."""
    n = max(p.degree, q.degree)
    pi, qi = p.padded(n), q.padded(n)
    return Permutation(tuple(qi[x - 1] for x in pi))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def conjugate_by(p: Permutation, g: Permutation) -> Permutation:
    """Return g^-1 p g, the permutation taking g(i) to g(p(i))."""
    return compose(compose(inverse(g), p), g)


# Raw image-tuple arithmetic used on hot paths; all tuples share one degree.
def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple([q[x - 1] for x in p])


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p, 1):
        inv[x - 1] = i
    return tuple(inv)


@dataclass(frozen=True, eq=False)
class PermutationGroup:
    """A fully enumerated permutation group.

    ``elements`` is sorted by image sequence, so the identity is always at
    position 0. ``index`` maps an element's image tuple (at ``degree``) to its
    position.
    """

    generators: tuple[Permutation, ...]
    degree: int
    elements: tuple[Permutation, ...]
    index: dict[tuple[int, ...], int] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, p: Permutation) -> int:
        try:
            return self.index[p.padded(self.degree)]
        except (KeyError, ValueError):
            raise KeyError(f"{p!r} is not an element of this group") from None

    def __contains__(self, p: Permutation) -> bool:
        try:
            self.index_of(p)
        except KeyError:
            return False
        return True

    def images(self, i: int) -> tuple[int, ...]:
        return self.elements[i].images

    def product_index(self, i: int, j: int) -> int:
        """Position of elements[i] * elements[j] (i applied first)."""
        return self.index[_mul(self.elements[i].images, self.elements[j].images)]

    def left_table(self, gens: Sequence[Permutation]) -> list[list[int]]:
        """``table[s][i]`` is the position of gens[s] * elements[i]."""
        out = []
        for s in gens:
            si = s.padded(self.degree)
            out.append([self.index[_mul(si, h.images)] for h in self.elements])
        return out

    def right_table(self, gens: Sequence[Permutation]) -> list[list[int]]:
        """``table[s][i]`` is the position of elements[i] * gens[s]."""
        out = []
        for s in gens:
            si = s.padded(self.degree)
            out.append([self.index[_mul(h.images, si)] for h in self.elements])
        return out


def generate_group(
    gens: Iterable[Permutation | Transposition], cap: int = DEFAULT_CAP
) -> PermutationGroup:
    """Enumerate the group generated by ``gens`` by breadth-first closure.

    Raises CapExceeded as soon as more than ``cap`` elements have been found.
    """
    perms = [g.as_permutation() if isinstance(g, Transposition) else g for g in gens]
    if not perms:
        raise ValueError("need at least one generator")
    degree = max(max((len(p.key) for p in perms), default=0), 1)
    raw = sorted({p.padded(degree) for p in perms})
    identity = tuple(range(1, degree + 1))
    seen = {identity}
    queue = deque([identity])
    while queue:
        h = queue.popleft()
        for s in raw:
            x = _mul(s, h)
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise CapExceeded(f"group closure exceeded {cap} elements")
                queue.append(x)
    ordered = sorted(seen)
    return PermutationGroup(
        generators=tuple(Permutation(p) for p in raw),
        degree=degree,
        elements=tuple(Permutation(p) for p in ordered),
        index={p: i for i, p in enumerate(ordered)},
    )


def is_group_automorphism(
    mapping: Sequence[int], group: PermutationGroup, exhaustive: bool = True
) -> bool:
    """Decide whether an element-index map is an automorphism of ``group``.

    The exhaustive check tests map(g*h) = map(g)*map(h) over all pairs. With
    ``exhaustive=False`` only products s*h with s a generator are tested, which
    is equivalent for a bijection because the generators generate the group.
    """
    n = group.order
    if len(mapping) != n or sorted(mapping) != list(range(n)):
        return False
    elems = [e.images for e in group.elements]
    index = group.index
    if exhaustive:
        for i in range(n):
            gi = elems[i]
            mi = elems[mapping[i]]
            for j in range(n):
                if mapping[index[_mul(gi, elems[j])]] != index[_mul(mi, elems[mapping[j]])]:
                    return False
        return True
    for s in group.generators:
        i = group.index_of(s)
        mi = elems[mapping[i]]
        si = elems[i]
        for j in range(n):
            if mapping[index[_mul(si, elems[j])]] != index[_mul(mi, elems[mapping[j]])]:
                return False
    return True
