"""Acceptance criteria 1-10, each checked exactly and against its time limit.

A one-line PASS/FAIL verdict per criterion is printed in the terminal summary.
"""

import random
import time
from contextlib import contextmanager
from math import factorial

import pytest

from cayleyaut.autsearch import automorphism_group, map_order
from cayleyaut.cayley import build_ambient_cayley, build_cayley, condition_ii_holds
from cayleyaut.corollaries import ambient_index, wreath_extension
from cayleyaut.engine import (
    aut_bruteforce,
    aut_fast,
    aut_hs_bruteforce,
    brute_force_group,
    stabilizer_Lv,
    verify_normality,
)
from cayleyaut.errors import HypothesisViolated
from cayleyaut.perms import generate_group
from cayleyaut.suites import (
    ASYMMETRIC_TREE,
    C4,
    condition_ii_exceptions,
    lemma_exceptions,
    psi_lifting_failures,
    random_girth5_set,
)
from cayleyaut.topologies import bubble_sort, extended_cube, hypercube, make, modified_bubble_sort, star
from cayleyaut.transpositions import TranspositionSet, check_hypotheses, generated_order

from conftest import ACCEPTANCE_RESULTS


@contextmanager
def criterion(number: int, limit: float | None):
    """Record the verdict for ``number``; a failed assertion or an overrun time limit is FAIL."""
    state = {"detail": ""}
    start = time.perf_counter()
    try:
        yield state
    except BaseException as exc:
        ACCEPTANCE_RESULTS[number] = (False, f"{state['detail']} {type(exc).__name__}: {exc}".strip())
        raise
    elapsed = time.perf_counter() - start
    ok = limit is None or elapsed < limit
    bound = "" if limit is None else f" (limit {limit:g}s)"
    ACCEPTANCE_RESULTS[number] = (ok, f"{state['detail']} in {elapsed:.2f}s{bound}")
    assert ok, f"took {elapsed:.2f}s, limit {limit}s"


def brute_and_fast(s):
    return aut_bruteforce(build_cayley(s)).order, aut_fast(s).order


def test_criterion_01_hypercube():
    with criterion(1, 5.0) as c:
        got = [brute_and_fast(make(hypercube(r))) for r in range(1, 5)]
        assert got == [(2, 2), (8, 8), (48, 48), (384, 384)]
        assert all(b == 2**r * factorial(r) for r, (b, _) in zip(range(1, 5), got))
        c["detail"] = "hypercube r=1..4 orders " + ", ".join(str(b) for b, _ in got)


def test_criterion_02_trees():
    with criterion(2, 30.0) as c:
        assert build_cayley(make(bubble_sort(4))).vertex_count == 24
        assert brute_and_fast(make(bubble_sort(4))) == (48, 48)
        assert build_cayley(make(star(5))).vertex_count == 120
        assert brute_and_fast(make(star(5))) == (2880, 2880)
        c["detail"] = "bubble-sort P4 48/48, star K_{1,4} 2880/2880"


def test_criterion_03_modified_bubble_sort():
    with criterion(3, 60.0) as c:
        brute, fast = brute_and_fast(make(modified_bubble_sort(5)))
        assert brute == fast == 1200 == 120 * 10
        c["detail"] = f"mbs n=5 brute {brute} fast {fast}"


def test_criterion_04_c4_counterexample():
    with criterion(4, 5.0) as c:
        with pytest.raises(HypothesisViolated):
            aut_fast(C4)
        cg = build_cayley(C4)
        assert cg.vertex_count == 24
        full = brute_force_group(cg)
        assert full.order > 192
        assert verify_normality(cg, full).is_normal is False
        lv = stabilizer_Lv(cg, full, cg.identity_vertex).materialize()
        identity = tuple(range(cg.vertex_count))
        assert lv.order == 4
        assert all(map_order(x) == 2 for x in lv.elements if x != identity)
        c["detail"] = f"C4 fast refused, brute order {full.order} > 192, not normal, |L_e| = 4 of exponent 2"


def test_criterion_05_extended_cube():
    with criterion(5, 5.0) as c:
        s = make(extended_cube(2, 3))
        assert build_cayley(s).vertex_count == 36
        brute, fast = brute_and_fast(s)
        assert brute == fast == 288 == factorial(3) ** 2 * factorial(2) * 2**2
        c["detail"] = f"extended cube (2,3) brute {brute} fast {fast}"


def test_criterion_06_wreath():
    with criterion(6, 1.0) as c:
        s = TranspositionSet([(1, 2)])
        ell = ambient_index(s, 3)
        union = build_ambient_cayley(s, 3)
        assert (ell, union.vertex_count, union.edge_count) == (3, 6, 3)
        wreath = wreath_extension(aut_fast(s), ell).order
        brute = automorphism_group(union).order
        assert wreath == brute == 48
        c["detail"] = f"3K2 wreath {wreath} brute {brute}"


def test_criterion_07_commuting_pairs_exhaustive():
    with criterion(7, 120.0) as c:
        sets, pairs, bad = lemma_exceptions(5)
        assert sets == 1023
        assert bad == []
        c["detail"] = f"{sets} sets, {pairs} pairs, 0 exceptions"


def test_criterion_08_condition_ii_random():
    with criterion(8, None) as c:
        rng = random.Random(20240229)
        sets = [random_girth5_set(rng, max_order=720) for _ in range(50)]
        assert all(check_hypotheses(s).girth_ok and generated_order(s) <= 720 for s in sets)
        pairs, bad = condition_ii_exceptions(sets)
        assert pairs > 0
        assert bad == []
        c["detail"] = f"50 girth>=5 sets, {pairs} non-commuting pairs, 0 exceptions"


def test_criterion_09_psi_and_lifting():
    instances = [make(hypercube(r)) for r in range(1, 5)] + [
        make(bubble_sort(4)), make(star(5)), make(modified_bubble_sort(5)), C4, make(extended_cube(2, 3)),
    ]
    with criterion(9, None) as c:
        problems = {str(s): psi_lifting_failures(s) for s in instances}
        assert {k: v for k, v in problems.items() if v} == {}
        c["detail"] = f"{len(instances)} instances: |Aut(H,S)| = |Aut(L(T))|, lift/restrict identity, routes agree"


def test_criterion_10_asymmetric_tree():
    with criterion(10, 600.0) as c:
        hyp = check_hypotheses(ASYMMETRIC_TREE)
        assert hyp.is_tree and len(ASYMMETRIC_TREE.support) == 7
        fast = aut_fast(ASYMMETRIC_TREE)
        assert fast.aut_hs_order == 1
        assert fast.order == 5040 == factorial(7)
        group = generate_group(ASYMMETRIC_TREE.pairs)
        assert len(aut_hs_bruteforce(group, ASYMMETRIC_TREE)) == 1
        brute = aut_bruteforce(build_cayley(ASYMMETRIC_TREE), budget=6000)
        assert brute.order == 5040 and brute.is_normal
        c["detail"] = f"fast {fast.order} with trivial Aut(H,S); brute force {brute.order}"
