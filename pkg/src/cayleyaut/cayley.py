"""Cayley graphs of transposition-generated groups and the 4-/6-cycle conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

from .errors import CapExceeded
from .graph import SimpleGraph, bfs_distances
from .perms import DEFAULT_CAP, Permutation, PermutationGroup, Transposition, _mul, generate_group
from .transpositions import TranspositionSet

Cycle = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class CayleyGraph:
    """Cay(H, S) with vertex ``i`` standing for ``group.elements[i]``.

    Edges join h and s*h for s in S.
    """

    group: PermutationGroup
    gens: TranspositionSet
    graph: SimpleGraph
    identity_vertex: int = 0
    _cycle_cache: dict = field(default_factory=dict, repr=False)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def vertex_of(self, p: Permutation | Transposition) -> int:
        if isinstance(p, Transposition):
            p = p.as_permutation()
        return self.group.index_of(p)

    def element(self, v: int) -> Permutation:
        return self.group.elements[v]

    def right_translation(self, g: Permutation) -> tuple[int, ...]:
        """Vertex map u -> u*g."""
        gi = g.padded(self.group.degree)
        index = self.group.index
        return tuple(index[_mul(h.images, gi)] for h in self.group.elements)


def _cayley_graph(group: PermutationGroup, gens: list[Permutation]) -> SimpleGraph:
    table = group.left_table(gens)
    adj = [set() for _ in range(group.order)]
    for row in table:
        for i, j in enumerate(row):
            adj[i].add(j)
            adj[j].add(i)
    labels = tuple(p.images for p in group.elements)
    return SimpleGraph(labels, tuple(tuple(a) for a in adj))


def build_cayley(s: TranspositionSet, cap: int = DEFAULT_CAP) -> CayleyGraph:
    group = generate_group(s.pairs, cap)
    graph = _cayley_graph(group, s.permutations())
    return CayleyGraph(group, s, graph, group.identity_index)


def build_ambient_cayley(s: TranspositionSet, n: int, cap: int = DEFAULT_CAP) -> SimpleGraph:
    """Cay(S_n, S): vertex set all of S_n, edges {h, s*h}; disconnected when <S> < S_n."""
    if n < s.degree:
        raise ValueError(f"ambient degree {n} is smaller than the support of S")
    if factorial(n) > cap:
        raise CapExceeded(f"S_{n} has {factorial(n)} elements, over cap {cap}")
    sym = generate_group([Permutation.transposition(1, i, n) for i in range(2, n + 1)], cap)
    return _cayley_graph(sym, [t.as_permutation(n) for t in s])


def distance_from_identity(cg: CayleyGraph) -> list[int]:
    return bfs_distances(cg.graph, cg.identity_vertex)


def canonical_cycle(cycle: Cycle) -> Cycle:
    """Rotate to the smallest vertex and pick the direction with the smaller second vertex."""
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    rev = (rot[0],) + tuple(reversed(rot[1:]))
    return min(rot, rev)


def cycles_through(g: SimpleGraph, start: int, length: int) -> list[Cycle]:
    """All simple cycles of exactly ``length`` vertices through ``start``, canonical and sorted."""
    dist = bfs_distances(g, start)
    adj = g.adjacency
    found: set[Cycle] = set()
    path = [start]
    on_path = {start}

    def walk(v: int) -> None:
        depth = len(path)
        if depth == length:
            if g.has_edge(v, start):
                found.add(canonical_cycle(tuple(path)))
            return
        remaining = length - depth
        for u in adj[v]:
            # u sits at position `depth`; it must still be able to close the cycle
            if u in on_path or dist[u] > remaining:
                continue
            path.append(u)
            on_path.add(u)
            walk(u)
            path.pop()
            on_path.discard(u)

    walk(start)
    return sorted(found)


def _cycles_at_identity(cg: CayleyGraph, length: int) -> list[Cycle]:
    if length not in cg._cycle_cache:
        cg._cycle_cache[length] = cycles_through(cg.graph, cg.identity_vertex, length)
    return cg._cycle_cache[length]


def four_cycles_through(cg: CayleyGraph, t: Transposition, k: Transposition) -> list[Cycle]:
    """4-cycles of Cay(H, S) whose vertex set contains e, t and k."""
    if t == k or t not in cg.gens or k not in cg.gens:
        raise ValueError("t and k must be distinct members of S")
    vt, vk = cg.vertex_of(t), cg.vertex_of(k)
    return [c for c in _cycles_at_identity(cg, 4) if vt in c and vk in c]


def six_cycles_through(cg: CayleyGraph, t: Transposition, k: Transposition) -> list[Cycle]:
    """6-cycles containing e, t, k and at least one vertex at distance 3 from e."""
    vt, vk = cg.vertex_of(t), cg.vertex_of(k)
    dist = distance_from_identity(cg)
    return [
        c for c in _cycles_at_identity(cg, 6)
        if vt in c and vk in c and any(dist[x] == 3 for x in c)
    ]


def condition_ii_holds(cg: CayleyGraph, t: Transposition, k: Transposition) -> tuple[bool, list[Cycle]]:
    """Whether exactly one qualifying 6-cycle exists; the cycles found are the witness."""
    if t.commutes_with(k):
        raise ValueError("condition (ii) concerns non-commuting pairs only")
    cycles = six_cycles_through(cg, t, k)
    return len(cycles) == 1, cycles


@dataclass(frozen=True)
class NormalityConditions:
    condition_i: bool
    condition_ii: bool
    failing_pairs: list[tuple[Transposition, Transposition, str]]


def check_normality_conditions(cg: CayleyGraph) -> NormalityConditions:
    """Evaluate conditions (i) and (ii) over every pair of distinct generators."""
    cond_i = cond_ii = True
    failing = []
    for t, k in combinations(cg.gens.pairs, 2):
        commute = t.commutes_with(k)
        unique4 = len(four_cycles_through(cg, t, k)) == 1
        if commute != unique4:
            cond_i = False
            failing.append((t, k, "i"))
        if not commute and not condition_ii_holds(cg, t, k)[0]:
            cond_ii = False
            failing.append((t, k, "ii"))
    return NormalityConditions(cond_i, cond_ii, failing)
