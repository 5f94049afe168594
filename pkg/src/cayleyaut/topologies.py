"""Named transposition-graph families used as interconnection topologies.

Spec strings accepted by :func:`parse_spec`::

    hypercube:3   bubble:4   star:5   mbs:5   extcube:2x3
    custom:1-2,2-3[,ambient=5]   custom:path/to/file.edges[,ambient=5]
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import InvalidParams
from .graph import INFINITE, SimpleGraph, connected_components, girth
from .transpositions import TranspositionSet, transposition_graph

FAMILIES = ("hypercube", "bubble_sort", "star", "modified_bubble_sort", "extended_cube", "custom")
_ALIASES = {
    "hypercube": "hypercube",
    "bubble": "bubble_sort",
    "star": "star",
    "mbs": "modified_bubble_sort",
    "extcube": "extended_cube",
    "custom": "custom",
}
_SHORT = {v: k for k, v in _ALIASES.items()}


@dataclass(frozen=True)
class TopologySpec:
    family: str
    params: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()
    ambient: int | None = None

    def __post_init__(self) -> None:
        validate(self)

    def __str__(self) -> str:
        if self.family == "custom":
            body = ",".join(f"{a}-{b}" for a, b in self.edges)
            if self.ambient is not None:
                body += f",ambient={self.ambient}"
            return f"custom:{body}"
        if self.family == "extended_cube":
            return f"extcube:{self.params[0]}x{self.params[1]}"
        return f"{_SHORT[self.family]}:{self.params[0]}"


def validate(spec: TopologySpec) -> None:
    f, p = spec.family, spec.params
    if f not in FAMILIES:
        raise InvalidParams(f"unknown family {f!r}")
    if f == "custom":
        if not spec.edges:
            raise InvalidParams("custom topology needs at least one edge")
        top = max(max(e) for e in spec.edges)
        if spec.ambient is not None and spec.ambient < top:
            raise InvalidParams(f"ambient degree {spec.ambient} below largest point {top}")
        return
    expected = 2 if f == "extended_cube" else 1
    if len(p) != expected:
        raise InvalidParams(f"{f} takes {expected} parameter(s), got {p}")
    if f == "hypercube" and p[0] < 1:
        raise InvalidParams("hypercube needs r >= 1")
    if f in ("bubble_sort", "star") and p[0] < 2:
        raise InvalidParams(f"{f} needs n >= 2")
    if f == "modified_bubble_sort" and p[0] < 3:
        raise InvalidParams("modified bubble-sort needs n >= 3")
    if f == "extended_cube" and (p[0] < 1 or p[1] < 3):
        raise InvalidParams("extended cube needs r >= 1 and k >= 3")


def hypercube(r: int) -> TopologySpec:
    return TopologySpec("hypercube", (r,))


def bubble_sort(n: int) -> TopologySpec:
    return TopologySpec("bubble_sort", (n,))


def star(n: int) -> TopologySpec:
    return TopologySpec("star", (n,))


def modified_bubble_sort(n: int) -> TopologySpec:
    return TopologySpec("modified_bubble_sort", (n,))


def extended_cube(r: int, k: int) -> TopologySpec:
    return TopologySpec("extended_cube", (r, k))


def custom(edges, ambient: int | None = None) -> TopologySpec:
    s = TranspositionSet(edges)
    return TopologySpec("custom", edges=tuple(s.to_edges()), ambient=ambient)


def make(spec: TopologySpec) -> TranspositionSet:
    """The transposition set of ``spec``; components occupy consecutive points."""
    f, p = spec.family, spec.params
    if f == "hypercube":
        return TranspositionSet((2 * i + 1, 2 * i + 2) for i in range(p[0]))
    if f == "bubble_sort":
        return TranspositionSet((i, i + 1) for i in range(1, p[0]))
    if f == "star":
        return TranspositionSet((1, i) for i in range(2, p[0] + 1))
    if f == "modified_bubble_sort":
        n = p[0]
        return TranspositionSet([(i, i + 1) for i in range(1, n)] + [(1, n)])
    if f == "extended_cube":
        r, k = p
        return TranspositionSet(
            (c * k + i, c * k + i + 1) for c in range(r) for i in range(1, k)
        )
    return TranspositionSet(spec.edges)


def parse_spec(text: str) -> TopologySpec:
    name, sep, body = text.strip().partition(":")
    if not sep or name not in _ALIASES:
        raise InvalidParams(f"cannot parse topology spec {text!r}")
    family = _ALIASES[name]
    try:
        if family == "custom":
            return _parse_custom(body)
        if family == "extended_cube":
            r, _, k = body.lower().partition("x")
            return TopologySpec(family, (int(r), int(k)))
        return TopologySpec(family, (int(body),))
    except (ValueError, OSError) as exc:
        raise InvalidParams(f"cannot parse topology spec {text!r}: {exc}") from None


def _parse_custom(body: str) -> TopologySpec:
    ambient = None
    items = []
    for item in body.split(","):
        item = item.strip()
        if item.startswith("ambient="):
            ambient = int(item.split("=", 1)[1])
        elif item:
            items.append(item)
    if len(items) == 1 and os.path.exists(items[0]):
        s = TranspositionSet.from_edge_file(items[0])
    else:
        s = TranspositionSet.parse(",".join(items))
    return custom(s.to_edges(), ambient)


def _is_path(g: SimpleGraph) -> bool:
    degs = sorted(g.degrees())
    n = g.vertex_count
    return n >= 2 and g.edge_count == n - 1 and degs[-1] <= 2


def _is_star(g: SimpleGraph) -> bool:
    n = g.vertex_count
    return n >= 2 and g.edge_count == n - 1 and max(g.degrees()) == n - 1


def recognize(s: TranspositionSet) -> TopologySpec:
    """Name the family whose shape T(S) has; falls back to ``custom``.

    A single edge is ``hypercube:1``; other single paths are bubble_sort, so
    ``star:3`` comes back as ``bubble:3`` and ``extcube:1xk`` as ``bubble:k``.
    """
    t = transposition_graph(s)
    comps = [c.graph for c in connected_components(t)]
    sizes = {c.vertex_count for c in comps}
    if len(comps) == 1:
        g = comps[0]
        if g.vertex_count == 2:
            return hypercube(1)
        if _is_path(g):
            return bubble_sort(g.vertex_count)
        if _is_star(g):
            return star(g.vertex_count)
        if g.vertex_count >= 3 and all(d == 2 for d in g.degrees()) and girth(g) == g.vertex_count:
            return modified_bubble_sort(g.vertex_count)
    elif len(sizes) == 1 and all(_is_path(c) for c in comps):
        k = sizes.pop()
        if k == 2:
            return hypercube(len(comps))
        return extended_cube(len(comps), k)
    return custom(s.to_edges())


def shape(s: TranspositionSet) -> tuple[int, tuple[tuple[int, int], ...]]:
    """(component count, sorted (vertices, edges) per component)."""
    comps = [c.graph for c in connected_components(transposition_graph(s))]
    return len(comps), tuple(sorted((c.vertex_count, c.edge_count) for c in comps))


def expected_girth(spec: TopologySpec) -> int | float:
    if spec.family == "modified_bubble_sort":
        return spec.params[0]
    if spec.family == "custom":
        return girth(transposition_graph(make(spec)))
    return INFINITE
