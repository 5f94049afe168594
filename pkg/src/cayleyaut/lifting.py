"""Restriction of Aut(H, S) to the line graph of T(S), and lifting back to T(S)."""

from __future__ import annotations

from .autsearch import VertexBijection
from .engine import GroupAutomorphism
from .errors import NoLift, NotSFixing
from .graph import SimpleGraph, line_graph
from .transpositions import TranspositionSet, transposition_graph


def psi_restriction(sigma: GroupAutomorphism, s: TranspositionSet) -> VertexBijection:
    """The permutation sigma induces on S, as a map on the vertices of L(T(S))."""
    lg = line_graph(transposition_graph(s))
    group = sigma.group
    position = {group.index_of(t.as_permutation()): lg.index_of((t.a, t.b)) for t in s}
    tau = []
    for t in s:
        img = sigma.element_map[group.index_of(t.as_permutation())]
        if img not in position:
            raise NotSFixing(f"{t!r} is sent outside S")
        tau.append(position[img])
    tau = tuple(tau)
    assert lg.is_automorphism(tau), "restriction is not a line-graph automorphism"
    return tau


def induced_line_map(sigma: VertexBijection, t: SimpleGraph) -> VertexBijection:
    """The permutation of edges (line-graph vertices) induced by a vertex map of ``t``."""
    edges = t.edges()
    pos = {e: i for i, e in enumerate(edges)}
    out = []
    for u, v in edges:
        a, b = sigma[u], sigma[v]
        out.append(pos[(min(a, b), max(a, b))])
    return tuple(out)


def lift_line_graph_aut(tau: VertexBijection, t: SimpleGraph) -> VertexBijection:
    """An automorphism of ``t`` inducing the line-graph automorphism ``tau``.

    A vertex of degree >= 2 is the unique common endpoint of its edges, so
    its image is the common endpoint of their images.  A leaf follows its
    neighbour.  Both ends of an isolated edge are leaves; the lower label is
    sent to the lower label.
    """
    edges = t.edges()
    if len(tau) != len(edges):
        raise NoLift("tau has the wrong length for this graph")
    incident: list[list[int]] = [[] for _ in range(t.vertex_count)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    image = [-1] * t.vertex_count
    for v in range(t.vertex_count):
        if len(incident[v]) >= 2:
            common = set(edges[tau[incident[v][0]]])
            for i in incident[v][1:]:
                common &= set(edges[tau[i]])
            if len(common) != 1:
                raise NoLift(f"edges at vertex {v} do not map to a star")
            image[v] = common.pop()
    for v in range(t.vertex_count):
        if len(incident[v]) != 1:
            continue
        (i,) = incident[v]
        u = edges[i][0] if edges[i][1] == v else edges[i][1]
        a, b = edges[tau[i]]
        if image[u] >= 0:
            if image[u] not in (a, b):
                raise NoLift(f"leaf {v} cannot follow its neighbour")
            image[v] = b if image[u] == a else a
        else:
            lo_to_lo = v < u
            image[v] = a if lo_to_lo else b
    lift = tuple(image)
    if not t.is_automorphism(lift) or induced_line_map(lift, t) != tuple(tau):
        raise NoLift("reconstructed map does not induce tau")
    return lift


def line_graph_of(s: TranspositionSet) -> SimpleGraph:
    return line_graph(transposition_graph(s))
