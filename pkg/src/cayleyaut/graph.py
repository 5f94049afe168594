"""Labelled simple undirected graphs and the structural algorithms used on them."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, NamedTuple, Sequence

INFINITE = math.inf


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """A simple undirected graph on vertices 0..n-1 carrying distinct labels.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    labels: tuple[Hashable, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _neighbour_sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        adj = tuple(tuple(sorted(set(nbrs))) for nbrs in self.adjacency)
        if len(labels) != len(adj):
            raise ValueError("labels and adjacency differ in length")
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be distinct")
        sets = tuple(frozenset(n) for n in adj)
        for v, nbrs in enumerate(adj):
            if v in sets[v]:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < len(adj) or v not in sets[u]:
                    raise ValueError(f"adjacency not symmetric at edge {v}-{u}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "_neighbour_sets", sets)

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[int, int]], vertex_count: int | None = None,
        labels: Sequence[Hashable] | None = None,
    ) -> SimpleGraph:
        """Build from index pairs; vertices default to 0..max index."""
        edges = [(int(u), int(v)) for u, v in edges]
        if vertex_count is None:
            vertex_count = len(labels) if labels is not None else 1 + max((max(e) for e in edges), default=-1)
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        if labels is None:
            labels = range(vertex_count)
        return cls(tuple(labels), tuple(tuple(a) for a in adj))

    @classmethod
    def from_labelled_edges(cls, edges: Iterable[tuple[Hashable, Hashable]]) -> SimpleGraph:
        """Build from label pairs; vertices are the labels that occur, in sorted order."""
        edges = list(edges)
        labels = sorted({x for e in edges for x in e})
        pos = {lab: i for i, lab in enumerate(labels)}
        return cls.from_edges(((pos[a], pos[b]) for a, b in edges), labels=labels)

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def label_index(self) -> dict[Hashable, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label: Hashable) -> int:
        return self.label_index[label]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbour_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        """Index pairs (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def is_automorphism(self, mapping: Sequence[int]) -> bool:
        n = self.vertex_count
        if len(mapping) != n or sorted(mapping) != list(range(n)):
            return False
        return all(self.has_edge(mapping[u], mapping[v]) for u, v in self.edges())

    def relabel(self, labels: Sequence[Hashable]) -> SimpleGraph:
        return SimpleGraph(tuple(labels), self.adjacency)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.vertex_count}, m={self.edge_count})"


class Component(NamedTuple):
    graph: SimpleGraph
    vertices: tuple[int, ...]  # original index of each component vertex


def bfs_distances(g: SimpleGraph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def girth(g: SimpleGraph) -> int | float:
    """Length of a shortest cycle, or INFINITE for a forest."""
    best = INFINITE
    n = g.vertex_count
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def induced_subgraph(g: SimpleGraph, vertices: Sequence[int]) -> SimpleGraph:
    pos = {v: i for i, v in enumerate(vertices)}
    adj = [tuple(pos[u] for u in g.adjacency[v] if u in pos) for v in vertices]
    return SimpleGraph(tuple(g.labels[v] for v in vertices), tuple(adj))


def connected_components(g: SimpleGraph) -> list[Component]:
    """Components ordered by their smallest original vertex index."""
    seen = [False] * g.vertex_count
    out = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        members = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    members.append(u)
                    queue.append(u)
        members.sort()
        out.append(Component(induced_subgraph(g, members), tuple(members)))
    return out


def is_connected(g: SimpleGraph) -> bool:
    return g.vertex_count == 0 or len(connected_components(g)) == 1


def line_graph(g: SimpleGraph) -> SimpleGraph:
    """Vertices are the edges of ``g`` (sorted index pairs), labelled by endpoint labels."""
    edges = g.edges()
    at_vertex: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for i, (u, v) in enumerate(edges):
        at_vertex[u].append(i)
        at_vertex[v].append(i)
    adj: list[set[int]] = [set() for _ in edges]
    for incident in at_vertex:
        for i in incident:
            adj[i].update(j for j in incident if j != i)
    labels = tuple((g.labels[u], g.labels[v]) for u, v in edges)
    return SimpleGraph(labels, tuple(tuple(a) for a in adj))


def disjoint_union(graphs: Sequence[SimpleGraph]) -> SimpleGraph:
    """Union with component ``i``'s labels tagged as ``(i, label)``."""
    if len(graphs) == 1:
        return graphs[0]
    labels: list[Hashable] = []
    adj: list[tuple[int, ...]] = []
    offset = 0
    for i, gr in enumerate(graphs):
        labels.extend((i, lab) for lab in gr.labels)
        adj.extend(tuple(u + offset for u in nbrs) for nbrs in gr.adjacency)
        offset += gr.vertex_count
    return SimpleGraph(tuple(labels), tuple(adj))


# Small named graphs, labelled 1..n.

def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges([(i, i + 1) for i in range(n - 1)], n, labels=range(1, n + 1))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph.from_edges([(i, (i + 1) % n) for i in range(n)], n, labels=range(1, n + 1))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(
        [(i, j) for i in range(n) for j in range(i + 1, n)], n, labels=range(1, n + 1)
    )


def complete_bipartite_graph(a: int, b: int) -> SimpleGraph:
    return SimpleGraph.from_edges(
        [(i, a + j) for i in range(a) for j in range(b)], a + b, labels=range(1, a + b + 1)
    )


def star_graph(leaves: int) -> SimpleGraph:
    """K_{1,leaves} with the centre as vertex 0."""
    return complete_bipartite_graph(1, leaves)


def hypercube_graph(r: int) -> SimpleGraph:
    n = 1 << r
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(r) if v < v ^ (1 << b)]
    return SimpleGraph.from_edges(edges, n)


# Edge-list text format: one "u v" pair per line, 1-based labels, '#' comments.

def parse_edge_list(text: str) -> list[tuple[int, int]]:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 1 or v < 1:
            raise ValueError(f"line {lineno}: labels are 1-based")
        pairs.append((u, v))
    return pairs


def format_edge_list(pairs: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in pairs)


def read_edge_list(path: str) -> list[tuple[int, int]]:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
