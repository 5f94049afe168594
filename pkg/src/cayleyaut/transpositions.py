"""Transposition sets, their transposition graphs, and the hypothesis checks."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterable, Iterator

from .autsearch import find_isomorphism
from .graph import INFINITE, SimpleGraph, connected_components, girth, parse_edge_list, read_edge_list
from .perms import Permutation, Transposition


@dataclass(frozen=True)
class TranspositionSet:
    """A nonempty set of transpositions, kept in sorted order."""

    pairs: tuple[Transposition, ...]

    def __init__(self, pairs: Iterable[Transposition | tuple[int, int]]):
        items = [p if isinstance(p, Transposition) else Transposition(*p) for p in pairs]
        if not items:
            raise ValueError("a transposition set must be nonempty")
        if len(set(items)) != len(items):
            raise ValueError("duplicate transpositions")
        object.__setattr__(self, "pairs", tuple(sorted(items)))

    @classmethod
    def parse(cls, text: str) -> TranspositionSet:
        """Parse the inline form ``"1-2,2-3"``."""
        pairs = []
        for item in text.replace(" ", "").split(","):
            if not item:
                continue
            a, sep, b = item.partition("-")
            if not sep:
                raise ValueError(f"expected 'a-b', got {item!r}")
            pairs.append((int(a), int(b)))
        return cls(pairs)

    @classmethod
    def from_edge_text(cls, text: str) -> TranspositionSet:
        return cls(parse_edge_list(text))

    @classmethod
    def from_edge_file(cls, path: str) -> TranspositionSet:
        return cls(read_edge_list(path))

    @property
    def support(self) -> list[int]:
        return sorted({x for t in self.pairs for x in (t.a, t.b)})

    @property
    def degree(self) -> int:
        return max(t.b for t in self.pairs)

    def permutations(self) -> list[Permutation]:
        return [t.as_permutation() for t in self.pairs]

    def __iter__(self) -> Iterator[Transposition]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, t: object) -> bool:
        return t in self.pairs

    def to_edges(self) -> list[tuple[int, int]]:
        return [(t.a, t.b) for t in self.pairs]

    def __str__(self) -> str:
        return ",".join(f"{t.a}-{t.b}" for t in self.pairs)


def transposition_graph(s: TranspositionSet) -> SimpleGraph:
    """Graph on the support of ``s`` with one edge per transposition; labels are points."""
    return SimpleGraph.from_labelled_edges(s.to_edges())


def transpositions_from_graph(t: SimpleGraph) -> TranspositionSet:
    return TranspositionSet((t.labels[u], t.labels[v]) for u, v in t.edges())


@dataclass(frozen=True)
class HypothesisReport:
    girth_value: int | float
    girth_ok: bool
    component_count: int
    components_isomorphic: bool
    is_tree: bool
    is_connected: bool

    def to_dict(self) -> dict:
        return {
            "girth_value": "inf" if self.girth_value == INFINITE else int(self.girth_value),
            "girth_ok": self.girth_ok,
            "component_count": self.component_count,
            "components_isomorphic": self.components_isomorphic,
            "is_tree": self.is_tree,
            "is_connected": self.is_connected,
        }


def check_hypotheses(s: TranspositionSet) -> HypothesisReport:
    t = transposition_graph(s)
    g = girth(t)
    comps = connected_components(t)
    first = comps[0].graph
    iso = all(find_isomorphism(first, c.graph) is not None for c in comps[1:])
    return HypothesisReport(
        girth_value=g,
        girth_ok=g >= 5,
        component_count=len(comps),
        components_isomorphic=iso,
        is_tree=len(comps) == 1 and g == INFINITE,
        is_connected=len(comps) == 1,
    )


def generated_order(s: TranspositionSet) -> int:
    """|<S>| without enumeration: the product of |component|! over T(S)."""
    return prod(factorial(c.graph.vertex_count) for c in connected_components(transposition_graph(s)))
