"""Automorphism groups of Cay(H, S): girth-5 fast path and brute-force oracle.

The fast path builds Aut(H, S) by conjugating H with automorphisms of the
transposition graph and reports |Aut(Cay(H, S))| = |H| * |Aut(H, S)|.  The
oracle searches the Cayley graph directly and decides normality by testing
whether every automorphism fixing the identity vertex is a group automorphism.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Sequence, Union

from .autsearch import (
    DEFAULT_ELEMENT_CAP,
    GraphGroup,
    VertexBijection,
    automorphism_group,
    closure,
    compose_maps,
)
from .cayley import CayleyGraph, build_cayley
from .errors import CapExceeded, HypothesisViolated, Mismatch
from .graph import SimpleGraph
from .perms import DEFAULT_CAP, Permutation, PermutationGroup, _inv, _mul, generate_group, is_group_automorphism
from .transpositions import TranspositionSet, check_hypotheses, transposition_graph

DEFAULT_BRUTE_BUDGET = 1_000
DEFAULT_HS_BUDGET = 10_000_000


class Method(str, enum.Enum):
    FAST_PATH = "fast_path"
    BRUTE_FORCE = "brute_force"
    BOTH = "both"


@dataclass(frozen=True)
class Semidirect:
    """R(H) x| A with |R(H)| = normal_order and |A| = complement_order."""

    normal_order: int
    complement_order: int

    @property
    def order(self) -> int:
        return self.normal_order * self.complement_order

    def to_dict(self) -> dict:
        return {
            "type": "semidirect",
            "normal_order": str(self.normal_order),
            "complement_order": str(self.complement_order),
        }


@dataclass(frozen=True)
class Wreath:
    """S_ell[inner]: ell copies permuted by S_ell."""

    ell: int
    inner: "Factorization"

    @property
    def order(self) -> int:
        return factorial(self.ell) * self.inner.order ** self.ell

    def to_dict(self) -> dict:
        return {"type": "wreath", "ell": str(self.ell), "inner": self.inner.to_dict()}


@dataclass(frozen=True)
class Unfactored:
    order: int

    def to_dict(self) -> dict:
        return {"type": "unfactored", "order": str(self.order)}


Factorization = Union[Semidirect, Wreath, Unfactored]


def factorization_from_dict(d: dict) -> Factorization:
    kind = d["type"]
    if kind == "semidirect":
        return Semidirect(int(d["normal_order"]), int(d["complement_order"]))
    if kind == "wreath":
        return Wreath(int(d["ell"]), factorization_from_dict(d["inner"]))
    if kind == "unfactored":
        return Unfactored(int(d["order"]))
    raise ValueError(f"unknown factorization type {kind!r}")


@dataclass(frozen=True)
class AutReport:
    order: int
    factorization: Factorization
    vertex_generators: tuple[VertexBijection, ...]
    is_normal: bool | None
    method: Method
    aut_hs_order: int | None

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_generators[0]) if self.vertex_generators else 0


@dataclass(frozen=True, eq=False)
class GroupAutomorphism:
    """An automorphism of ``group`` given as a map on element positions."""

    group: PermutationGroup
    element_map: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAutomorphism):
            return NotImplemented
        return self.group is other.group and self.element_map == other.element_map

    def __hash__(self) -> int:
        return hash(self.element_map)

    def __call__(self, p: Permutation) -> Permutation:
        return self.group.elements[self.element_map[self.group.index_of(p)]]

    def then(self, other: GroupAutomorphism) -> GroupAutomorphism:
        return GroupAutomorphism(self.group, compose_maps(self.element_map, other.element_map))

    def is_identity(self) -> bool:
        return self.element_map == tuple(range(len(self.element_map)))

    def fixes_setwise(self, s: TranspositionSet) -> bool:
        idx = {self.group.index_of(t.as_permutation()) for t in s}
        return {self.element_map[i] for i in idx} == idx


def _point_permutation(sigma: VertexBijection, t: SimpleGraph, degree: int) -> tuple[int, ...]:
    """Lift a vertex map of T(S) to an image tuple on points 1..degree."""
    images = list(range(1, degree + 1))
    for v, w in enumerate(sigma):
        images[t.labels[v] - 1] = t.labels[w]
    return tuple(images)


def conjugation_automorphism(
    sigma: VertexBijection, t: SimpleGraph, group: PermutationGroup
) -> GroupAutomorphism:
    """c(sigma') restricted to H, for sigma' an automorphism of the transposition graph."""
    g = _point_permutation(sigma, t, group.degree)
    g_inv = _inv(g)
    index = group.index
    return GroupAutomorphism(
        group, tuple(index[_mul(_mul(g_inv, h.images), g)] for h in group.elements)
    )


def _conjugation_generators(s: TranspositionSet, group: PermutationGroup) -> list[tuple[int, ...]]:
    """Distinct non-identity conjugation maps induced by generators of Aut(T(S))."""
    t = transposition_graph(s)
    maps = [conjugation_automorphism(g, t, group).element_map for g in automorphism_group(t).generators]
    identity = tuple(range(group.order))
    return [m for m in dict.fromkeys(maps) if m != identity]


def aut_hs_fast(
    s: TranspositionSet,
    cap: int = DEFAULT_CAP,
    *,
    group: PermutationGroup | None = None,
    require_isomorphic_components: bool = True,
) -> list[GroupAutomorphism]:
    """Aut(H, S) as the conjugation action of Aut(T(S)) on H, identity first."""
    hyp = check_hypotheses(s)
    if not hyp.girth_ok:
        raise HypothesisViolated(f"transposition graph has girth {hyp.girth_value} < 5")
    if require_isomorphic_components and not hyp.components_isomorphic:
        raise HypothesisViolated("components of the transposition graph are not isomorphic")
    if group is None:
        group = generate_group(s.pairs, cap)
    maps = closure(_conjugation_generators(s, group), group.order, cap)
    return [GroupAutomorphism(group, m) for m in maps]


def aut_hs_bruteforce(
    group: PermutationGroup, s: TranspositionSet, budget: int = DEFAULT_HS_BUDGET
) -> list[GroupAutomorphism]:
    """Every bijection of S that extends to an automorphism of H.

    Each bijection pi is propagated along a breadth-first spanning tree of
    Cay(H, S) via map(s*h) = pi(s)*map(h), then checked on every edge.
    """
    gens = s.permutations()
    m, n = len(gens), group.order
    if factorial(m) * n > budget:
        raise CapExceeded(f"{m}! bijections x {n} elements exceeds budget {budget}")
    left = group.left_table(gens)
    tree: list[tuple[int, int, int]] = []  # (child, generator, parent)
    seen = [False] * n
    seen[0] = True
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for k in range(m):
                j = left[k][i]
                if not seen[j]:
                    seen[j] = True
                    tree.append((j, k, i))
                    nxt.append(j)
        frontier = nxt
    out = []
    for pi in permutations(range(m)):
        image = [-1] * n
        image[0] = 0
        for j, k, i in tree:
            image[j] = left[pi[k]][image[i]]
        if len(set(image)) != n:
            continue
        if all(image[left[k][i]] == left[pi[k]][image[i]] for k in range(m) for i in range(n)):
            out.append(GroupAutomorphism(group, tuple(image)))
    return out


def aut_fast(s: TranspositionSet, cap: int = DEFAULT_CAP) -> AutReport:
    """Aut(Cay(H, S)) = R(H) x| Aut(H, S), valid when T(S) has girth at least 5."""
    hyp = check_hypotheses(s)
    if not hyp.girth_ok:
        raise HypothesisViolated(f"transposition graph has girth {hyp.girth_value} < 5")
    group = generate_group(s.pairs, cap)
    gens_hs = _conjugation_generators(s, group)
    # an automorphism of H is fixed by its action on S, so count on S alone
    s_index = [group.index_of(t) for t in s.permutations()]
    position = {v: i for i, v in enumerate(s_index)}
    on_s = [tuple(position[m[v]] for v in s_index) for m in gens_hs]
    aut_hs_order = len(closure(on_s, len(s_index), cap))
    rights = group.right_table(s.permutations())
    return AutReport(
        order=group.order * aut_hs_order,
        factorization=Semidirect(group.order, aut_hs_order),
        vertex_generators=tuple(tuple(r) for r in rights) + tuple(gens_hs),
        is_normal=True,
        method=Method.FAST_PATH,
        aut_hs_order=aut_hs_order,
    )


@dataclass(frozen=True)
class NormalityCertificate:
    is_normal: bool
    stabilizer_order: int
    aut_hs_order: int
    violating: VertexBijection | None
    stabilizer_elements: tuple[VertexBijection, ...]


def verify_normality(
    cg: CayleyGraph, full: GraphGroup, element_cap: int = DEFAULT_ELEMENT_CAP
) -> NormalityCertificate:
    """Normal iff every automorphism fixing e is an automorphism of H."""
    ge = full.stabilizer((cg.identity_vertex,), element_cap).materialize(element_cap)
    violating = None
    passing = 0
    exhaustive = cg.group.order <= 24
    for elem in ge.elements:
        if is_group_automorphism(elem, cg.group, exhaustive=exhaustive):
            passing += 1
        elif violating is None:
            violating = elem
    return NormalityCertificate(violating is None, ge.order, passing, violating, ge.elements)


def stabilizer_Lv(cg: CayleyGraph, full: GraphGroup, v: int) -> GraphGroup:
    """Automorphisms fixing ``v`` and each of its neighbours."""
    return full.stabilizer((v,) + cg.graph.neighbours(v))


def right_translations(cg: CayleyGraph) -> list[VertexBijection]:
    return [tuple(r) for r in cg.group.right_table(cg.gens.permutations())]


def brute_force_group(
    cg: CayleyGraph,
    budget: int = DEFAULT_BRUTE_BUDGET,
    *,
    seed_translations: bool = True,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> GraphGroup:
    """Full automorphism group of the Cayley graph by direct search."""
    if cg.vertex_count > budget:
        raise CapExceeded(f"{cg.vertex_count} vertices exceeds brute-force budget {budget}")
    seeds = right_translations(cg) if seed_translations else ()
    return automorphism_group(cg.graph, element_cap, seeds=seeds)


def bruteforce_with_certificate(
    cg: CayleyGraph,
    budget: int = DEFAULT_BRUTE_BUDGET,
    *,
    seed_translations: bool = True,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> tuple[AutReport, NormalityCertificate]:
    full = brute_force_group(cg, budget, seed_translations=seed_translations, element_cap=element_cap)
    cert = verify_normality(cg, full, element_cap)
    h = cg.group.order
    fact: Factorization = Semidirect(h, full.order // h) if cert.is_normal else Unfactored(full.order)
    report = AutReport(
        order=full.order,
        factorization=fact,
        vertex_generators=full.generators,
        is_normal=cert.is_normal,
        method=Method.BRUTE_FORCE,
        aut_hs_order=cert.aut_hs_order,
    )
    return report, cert


def aut_bruteforce(
    cg: CayleyGraph,
    budget: int = DEFAULT_BRUTE_BUDGET,
    *,
    seed_translations: bool = True,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> AutReport:
    """Automorphism group of the Cayley graph by direct search, with normality decided."""
    return bruteforce_with_certificate(
        cg, budget, seed_translations=seed_translations, element_cap=element_cap
    )[0]


def cross_validate(
    s: TranspositionSet, budget: int = DEFAULT_BRUTE_BUDGET, cap: int = DEFAULT_CAP
) -> AutReport:
    """Run both routes and merge; raises Mismatch if they disagree."""
    fast = aut_fast(s, cap)
    brute = aut_bruteforce(build_cayley(s, cap), budget)
    if (fast.order, fast.aut_hs_order, fast.is_normal) != (brute.order, brute.aut_hs_order, brute.is_normal):
        raise Mismatch(
            f"fast path order {fast.order} (|Aut(H,S)|={fast.aut_hs_order}) vs "
            f"brute force order {brute.order} (|Aut(H,S)|={brute.aut_hs_order})"
        )
    return AutReport(
        order=fast.order,
        factorization=fast.factorization,
        vertex_generators=fast.vertex_generators,
        is_normal=True,
        method=Method.BOTH,
        aut_hs_order=fast.aut_hs_order,
    )


def report_generated_order(report: AutReport, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    """Size of the group generated by the report's vertex generators, by closure."""
    return len(closure(report.vertex_generators, report.vertex_count, cap))
