"""Closed-form automorphism-group orders and the wreath extension to Cay(S_n, S)."""

from __future__ import annotations

from math import factorial

from .engine import AutReport, Factorization, Semidirect, Wreath
from .errors import InvalidParams
from .topologies import TopologySpec
from .transpositions import TranspositionSet, generated_order


def predicted_order(spec: TopologySpec) -> tuple[int, Factorization]:
    """|Aut(Cay(H, S))| for a named family, as R(H) x| Aut(H, S)."""
    f, p = spec.family, spec.params
    if f == "hypercube":
        r = p[0]
        fact = Semidirect(2**r, factorial(r))
    elif f == "bubble_sort":
        n = p[0]
        fact = Semidirect(factorial(n), 2 if n >= 3 else 1)
    elif f == "star":
        n = p[0]
        fact = Semidirect(factorial(n), factorial(n - 1) if n >= 3 else 1)
    elif f == "modified_bubble_sort":
        n = p[0]
        if n < 5:
            raise InvalidParams(f"no closed form for the {n}-cycle; needs n >= 5")
        fact = Semidirect(factorial(n), 2 * n)
    elif f == "extended_cube":
        r, k = p
        fact = Semidirect(factorial(k) ** r, factorial(r) * 2**r)
    else:
        raise InvalidParams(f"no closed form for family {f!r}")
    return fact.order, fact


def ambient_index(s: TranspositionSet, n: int) -> int:
    """ell = |S_n : <S>|, the number of components of Cay(S_n, S)."""
    if n < s.degree:
        raise InvalidParams(f"ambient degree {n} is smaller than the support of S")
    return factorial(n) // generated_order(s)


def wreath_extension(inner: AutReport, ell: int) -> AutReport:
    """Aut of ``ell`` disjoint copies of the graph ``inner`` describes.

    Generators act on the union with copy ``i`` occupying vertices
    ``i*m .. (i+1)*m - 1``: the inner generators on copy 0 plus swaps of
    adjacent copies.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    if ell == 1:
        return inner
    m = inner.vertex_count
    total = ell * m
    gens = []
    for g in inner.vertex_generators:
        gens.append(tuple(g) + tuple(range(m, total)))
    for i in range(ell - 1):
        swap = list(range(total))
        for v in range(m):
            swap[i * m + v], swap[(i + 1) * m + v] = (i + 1) * m + v, i * m + v
        gens.append(tuple(swap))
    return AutReport(
        order=factorial(ell) * inner.order**ell,
        factorization=Wreath(ell, inner.factorization),
        vertex_generators=tuple(gens),
        is_normal=None,
        method=inner.method,
        aut_hs_order=None,
    )
