"""Graph automorphism groups and isomorphisms by refinement and backtracking.

Both searches run colour refinement (the coarsest equitable partition) on a
pair of colourings and branch by individualising one vertex of the first
smallest non-singleton cell.  Automorphism groups are returned with an exact
order obtained from a pointwise stabiliser chain: at each level the orbit of
the base point is found by searching for one automorphism per unreached
candidate, and the group order is the product of the orbit sizes.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .errors import CapExceeded
from .graph import SimpleGraph, bfs_distances

VertexBijection = tuple[int, ...]
Adjacency = Sequence[Sequence[int]]

DEFAULT_ELEMENT_CAP = 50_000


def _relabel(signatures: list, table: dict) -> list[int]:
    return [table[s] for s in signatures]


def refine(adj: Adjacency, colours: Sequence[int]) -> list[int]:
    """Coarsest equitable refinement of ``colours``, canonically relabelled 0..k-1."""
    col = list(colours)
    count = len(set(col))
    while True:
        sig = [(col[v], tuple(sorted([col[u] for u in nbrs]))) for v, nbrs in enumerate(adj)]
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        col = _relabel(sig, table)
        if len(table) == count:
            return col
        count = len(table)


def refine_pair(
    adj_a: Adjacency, col_a: Sequence[int], adj_b: Adjacency, col_b: Sequence[int]
) -> tuple[list[int], list[int]] | None:
    """Refine two colourings in lockstep; None as soon as their cell statistics diverge."""
    ca, cb = list(col_a), list(col_b)
    count = len(set(ca))
    while True:
        sa = [(ca[v], tuple(sorted([ca[u] for u in nbrs]))) for v, nbrs in enumerate(adj_a)]
        sb = [(cb[v], tuple(sorted([cb[u] for u in nbrs]))) for v, nbrs in enumerate(adj_b)]
        if Counter(sa) != Counter(sb):
            return None
        table = {s: i for i, s in enumerate(sorted(set(sa)))}
        ca, cb = _relabel(sa, table), _relabel(sb, table)
        if len(table) == count:
            return ca, cb
        count = len(table)


def _individualise(col: Sequence[int], v: int) -> list[int]:
    out = list(col)
    out[v] = max(col) + 1
    return out


def _target_cell(col: Sequence[int]) -> list[int] | None:
    """Vertices of the first smallest non-singleton cell, or None if discrete."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(col):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        members = cells[c]
        if len(members) > 1 and (best is None or len(members) < len(best)):
            best = members
    return best


def _extend(
    adj_a: Adjacency, adj_b: Adjacency, ca: list[int], cb: list[int], edges_a, nbrs_b
) -> VertexBijection | None:
    cell = _target_cell(ca)
    if cell is None:
        where = {c: w for w, c in enumerate(cb)}
        mapping = tuple(where[c] for c in ca)
        if all(mapping[v] in nbrs_b[mapping[u]] for u, v in edges_a):
            return mapping
        return None
    v = cell[0]
    colour = ca[v]
    for w in [w for w, c in enumerate(cb) if c == colour]:
        refined = refine_pair(adj_a, _individualise(ca, v), adj_b, _individualise(cb, w))
        if refined is None:
            continue
        found = _extend(adj_a, adj_b, refined[0], refined[1], edges_a, nbrs_b)
        if found is not None:
            return found
    return None


def extend_to_isomorphism(
    a: SimpleGraph, b: SimpleGraph, col_a: Sequence[int], col_b: Sequence[int]
) -> VertexBijection | None:
    """Find an isomorphism a -> b respecting the two initial colourings."""
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return None
    refined = refine_pair(a.adjacency, col_a, b.adjacency, col_b)
    if refined is None:
        return None
    nbrs_b = [frozenset(n) for n in b.adjacency]
    return _extend(a.adjacency, b.adjacency, refined[0], refined[1], a.edges(), nbrs_b)


def _distance_profiles(g: SimpleGraph) -> list[tuple]:
    out = []
    for v in range(g.vertex_count):
        hist = Counter(bfs_distances(g, v))
        out.append((g.degree(v), tuple(sorted(hist.items()))))
    return out


def find_isomorphism(a: SimpleGraph, b: SimpleGraph) -> VertexBijection | None:
    """An adjacency-preserving bijection from ``a`` onto ``b``, or None."""
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return None
    if sorted(a.degrees()) != sorted(b.degrees()):
        return None
    pa, pb = _distance_profiles(a), _distance_profiles(b)
    if Counter(pa) != Counter(pb):
        return None
    table = {p: i for i, p in enumerate(sorted(set(pa)))}
    return extend_to_isomorphism(a, b, [table[p] for p in pa], [table[p] for p in pb])


def _orbit(point: int, gens: Sequence[VertexBijection]) -> set[int]:
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def compose_maps(p: VertexBijection, q: VertexBijection) -> VertexBijection:
    """Apply ``p`` then ``q``."""
    return tuple([q[x] for x in p])


def closure(gens: Sequence[VertexBijection], degree: int, cap: int) -> list[VertexBijection]:
    """All elements of the group generated by ``gens``, identity first, then BFS order."""
    identity = tuple(range(degree))
    seen = {identity}
    out = [identity]
    queue = deque([identity])
    while queue:
        h = queue.popleft()
        for g in gens:
            x = compose_maps(h, g)
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise CapExceeded(f"group closure exceeded {cap} elements")
                out.append(x)
                queue.append(x)
    return out


def map_order(p: VertexBijection) -> int:
    identity = tuple(range(len(p)))
    result, x = 1, tuple(p)
    while x != identity:
        x = compose_maps(x, p)
        result += 1
    return result


@dataclass(frozen=True, eq=False)
class GraphGroup:
    """The automorphism group of ``base`` fixing ``fixed`` pointwise.

    ``order`` is exact (product of ``orbit_sizes`` along ``base_points``).
    ``elements`` is populated only when materialised.
    """

    base: SimpleGraph
    generators: tuple[VertexBijection, ...]
    order: int
    fixed: tuple[int, ...] = ()
    base_points: tuple[int, ...] = ()
    orbit_sizes: tuple[int, ...] = ()
    elements: tuple[VertexBijection, ...] | None = field(default=None, repr=False)

    def materialize(self, cap: int = DEFAULT_ELEMENT_CAP) -> GraphGroup:
        if self.elements is not None:
            return self
        if self.order > cap:
            raise CapExceeded(f"group of order {self.order} exceeds element cap {cap}")
        elems = closure(self.generators, self.base.vertex_count, cap)
        if len(elems) != self.order:
            raise AssertionError(f"closure gave {len(elems)} elements, expected {self.order}")
        return GraphGroup(
            self.base, self.generators, self.order, self.fixed,
            self.base_points, self.orbit_sizes, tuple(elems),
        )

    def stabilizer(self, points: Sequence[int], element_cap: int = DEFAULT_ELEMENT_CAP) -> GraphGroup:
        """Pointwise stabiliser of ``points`` inside this group."""
        points = tuple(points)
        if self.elements is not None:
            elems = tuple(e for e in self.elements if all(e[p] == p for p in points))
            gens = tuple(e for e in elems if e != tuple(range(len(e))))
            return GraphGroup(self.base, gens, len(elems), self.fixed + points, elements=elems)
        return automorphism_group(self.base, element_cap, fixed=self.fixed + points)

    def orbit(self, v: int) -> set[int]:
        return _orbit(v, self.generators)


def automorphism_group(
    g: SimpleGraph,
    element_cap: int = DEFAULT_ELEMENT_CAP,
    *,
    fixed: Sequence[int] = (),
    seeds: Sequence[VertexBijection] = (),
    materialize: bool = False,
) -> GraphGroup:
    """Full automorphism group of ``g`` (or of its pointwise stabiliser of ``fixed``).

    ``seeds`` are automorphisms already known to the caller; they only speed up
    orbit discovery and must themselves be automorphisms.  With
    ``materialize=True`` all elements are enumerated, raising CapExceeded when
    the order is larger than ``element_cap``.
    """
    n = g.vertex_count
    adj = g.adjacency
    fixed = tuple(fixed)
    for s in seeds:
        if not g.is_automorphism(s):
            raise ValueError("seed is not an automorphism")
    identity = tuple(range(n))
    pool = [tuple(s) for s in seeds if tuple(s) != identity and all(s[p] == p for p in fixed)]

    col = [0] * n
    for i, p in enumerate(fixed):
        col[p] = i + 1
    col = refine(adj, col)
    edges = g.edges()
    nbrs = [frozenset(x) for x in adj]

    found: list[VertexBijection] = []
    base: list[int] = []
    sizes: list[int] = []
    while (cell := _target_cell(col)) is not None:
        b = cell[0]
        level = [s for s in pool if all(s[p] == p for p in base)]
        level += [s for s in found if all(s[p] == p for p in base)]
        orbit = _orbit(b, level)
        col_b = _individualise(col, b)
        for w in cell:
            if w in orbit:
                continue
            refined = refine_pair(adj, col_b, adj, _individualise(col, w))
            if refined is None:
                continue
            aut = _extend(adj, adj, refined[0], refined[1], edges, nbrs)
            if aut is not None:
                found.append(aut)
                level.append(aut)
                orbit = _orbit(b, level)
        base.append(b)
        sizes.append(len(orbit))
        col = refine(adj, col_b)

    used_seeds = [s for s in pool if any(s[p] != p for p in range(n))]
    gens = tuple(dict.fromkeys(used_seeds + found))
    group = GraphGroup(g, gens, prod(sizes), fixed, tuple(base), tuple(sizes))
    if materialize:
        group = group.materialize(element_cap)
    return group
