"""Exhaustive and randomised checks of the structural statements on concrete instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Callable, Iterator

from .autsearch import automorphism_group
from .cayley import build_ambient_cayley, build_cayley, condition_ii_holds, four_cycles_through
from .corollaries import ambient_index, predicted_order, wreath_extension
from .engine import DEFAULT_BRUTE_BUDGET, aut_bruteforce, aut_fast, aut_hs_bruteforce, aut_hs_fast, conjugation_automorphism
from .errors import CapExceeded
from .graph import SimpleGraph, girth
from .lifting import lift_line_graph_aut, line_graph_of, psi_restriction
from .perms import generate_group
from .topologies import bubble_sort, extended_cube, hypercube, make, modified_bubble_sort, star
from .transpositions import TranspositionSet, check_hypotheses, generated_order, transposition_graph

ASYMMETRIC_TREE = TranspositionSet([(1, 2), (1, 3), (3, 4), (1, 5), (5, 6), (6, 7)])
C4 = TranspositionSet([(1, 2), (2, 3), (3, 4), (1, 4)])


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  {self.detail}".rstrip()


def all_transposition_sets(max_points: int) -> Iterator[TranspositionSet]:
    """Every nonempty set of transpositions on points 1..max_points."""
    pool = list(combinations(range(1, max_points + 1), 2))
    for mask in range(1, 1 << len(pool)):
        yield TranspositionSet(p for i, p in enumerate(pool) if mask >> i & 1)


def lemma_exceptions(max_points: int = 5) -> tuple[int, int, list[tuple[str, str, str, int]]]:
    """Check tk = kt <=> exactly one 4-cycle through e, t, k on every set.

    Returns (sets checked, pairs checked, exceptions).
    """
    sets = pairs = 0
    bad = []
    for s in all_transposition_sets(max_points):
        sets += 1
        cg = build_cayley(s)
        for t, k in combinations(s.pairs, 2):
            pairs += 1
            n4 = len(four_cycles_through(cg, t, k))
            if t.commutes_with(k) != (n4 == 1):
                bad.append((str(s), repr(t), repr(k), n4))
    return sets, pairs, bad


def random_girth5_set(rng: random.Random, max_order: int = 720, max_points: int = 8) -> TranspositionSet:
    """Rejection-sample a transposition set with girth(T) >= 5 and |<S>| <= max_order."""
    while True:
        n = rng.randint(2, max_points)
        pool = list(combinations(range(1, n + 1), 2))
        rng.shuffle(pool)
        keep = rng.uniform(0.2, 0.9)
        chosen: list[tuple[int, int]] = []
        for e in pool:
            if rng.random() > keep:
                continue
            trial = chosen + [e]
            if girth(SimpleGraph.from_labelled_edges(trial)) >= 5:
                chosen = trial
        if not chosen:
            continue
        s = TranspositionSet(chosen)
        if generated_order(s) <= max_order:
            return s


def condition_ii_exceptions(sets: list[TranspositionSet]) -> tuple[int, list[tuple[str, str, str, int]]]:
    pairs = 0
    bad = []
    for s in sets:
        cg = build_cayley(s)
        for t, k in combinations(s.pairs, 2):
            if t.commutes_with(k):
                continue
            pairs += 1
            ok, cycles = condition_ii_holds(cg, t, k)
            if not ok:
                bad.append((str(s), repr(t), repr(k), len(cycles)))
    return pairs, bad


def standard_instances() -> list[tuple[str, TranspositionSet]]:
    """The hypercube, tree, 5-cycle, 4-cycle and extended-cube instances."""
    out = [(f"hypercube:{r}", make(hypercube(r))) for r in range(1, 5)]
    out += [
        ("bubble:4", make(bubble_sort(4))),
        ("star:5", make(star(5))),
        ("mbs:5", make(modified_bubble_sort(5))),
        ("mbs:4", C4),
        ("extcube:2x3", make(extended_cube(2, 3))),
    ]
    return out


def psi_lifting_failures(s: TranspositionSet) -> list[str]:
    """Problems found when comparing Aut(H,S), Aut(L(T)) and the lifting maps."""
    problems = []
    group = generate_group(s.pairs)
    brute = aut_hs_bruteforce(group, s)
    lg = line_graph_of(s)
    aut_l = automorphism_group(lg, materialize=True)
    if len(brute) != aut_l.order:
        problems.append(f"|Aut(H,S)| = {len(brute)} but |Aut(L(T))| = {aut_l.order}")
    images = [psi_restriction(a, s) for a in brute]
    if len(set(images)) != len(images):
        problems.append("psi is not injective")
    for a, b in combinations(range(len(brute)), 2):
        lhs = psi_restriction(brute[a].then(brute[b]), s)
        rhs = tuple(images[b][x] for x in images[a])
        if lhs != rhs:
            problems.append("psi is not a homomorphism")
            break
    hyp = check_hypotheses(s)
    if hyp.girth_ok:
        fast = aut_hs_fast(s, group=group, require_isomorphic_components=False)
        if len(fast) != len(brute) or set(fast) != set(brute):
            problems.append(f"fast Aut(H,S) has {len(fast)} elements, brute force {len(brute)}")
        t = transposition_graph(s)
        for tau in aut_l.elements:
            sigma_t = lift_line_graph_aut(tau, t)
            if psi_restriction(conjugation_automorphism(sigma_t, t, group), s) != tau:
                problems.append(f"lift of {tau} does not restrict back to it")
                break
    return problems


def corollary_rows(budget: int = DEFAULT_BRUTE_BUDGET) -> list[dict]:
    """Predicted vs computed orders for every named-family instance and the wreath case."""
    specs = [hypercube(r) for r in range(1, 5)] + [
        bubble_sort(3), bubble_sort(4), star(4), star(5),
        modified_bubble_sort(5), modified_bubble_sort(6), extended_cube(2, 3), extended_cube(2, 4),
    ]
    rows = []
    for spec in specs:
        s = make(spec)
        predicted, _ = predicted_order(spec)
        fast = aut_fast(s).order
        try:
            brute = aut_bruteforce(build_cayley(s), budget).order
        except CapExceeded:
            brute = None
        rows.append({"instance": str(spec), "predicted": predicted, "fast": fast, "brute": brute})

    rows.append({
        "instance": "asymmetric tree (7 points)",
        "predicted": factorial(7),
        "fast": aut_fast(ASYMMETRIC_TREE).order,
        "brute": None,
    })
    for n in (3, 4):
        single = TranspositionSet([(1, 2)])
        ell = ambient_index(single, n)
        inner = aut_fast(single)
        wreath = wreath_extension(inner, ell).order
        brute = automorphism_group(build_ambient_cayley(single, n)).order
        rows.append({
            "instance": f"custom:1-2,ambient={n}",
            "predicted": factorial(ell) * 2**ell,
            "fast": wreath,
            "brute": brute,
        })
    return rows


def _row_ok(row: dict) -> bool:
    return row["predicted"] == row["fast"] and row["brute"] in (None, row["predicted"])


def run_suite(name: str, *, max_points: int = 5, seed: int = 0, samples: int = 50,
              budget: int = DEFAULT_BRUTE_BUDGET) -> list[CheckResult]:
    """Run one named suite (lemma, cond2, psi, lifting, corollaries, all)."""
    if name == "all":
        out = []
        for sub in SUITES:
            out += run_suite(sub, max_points=max_points, seed=seed, samples=samples, budget=budget)
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SUITES[name](max_points=max_points, seed=seed, samples=samples, budget=budget)


def _lemma(max_points, **_) -> list[CheckResult]:
    sets, pairs, bad = lemma_exceptions(max_points)
    return [CheckResult(
        f"lemma (<= {max_points} points)", not bad,
        f"{sets} sets, {pairs} pairs, {len(bad)} exceptions",
    )]


def _cond2(seed, samples, **_) -> list[CheckResult]:
    rng = random.Random(seed)
    sets = [random_girth5_set(rng) for _ in range(samples)]
    pairs, bad = condition_ii_exceptions(sets)
    return [CheckResult(
        f"condition (ii) ({samples} random girth>=5 sets, seed {seed})", not bad,
        f"{pairs} non-commuting pairs, {len(bad)} exceptions",
    )]


def _psi(**_) -> list[CheckResult]:
    out = []
    for label, s in standard_instances():
        problems = psi_lifting_failures(s)
        out.append(CheckResult(f"psi/lift {label}", not problems, "; ".join(problems)))
    return out


def _lifting(**_) -> list[CheckResult]:
    out = []
    for label, s in standard_instances():
        if not check_hypotheses(s).girth_ok:
            continue
        t = transposition_graph(s)
        aut_l = automorphism_group(line_graph_of(s), materialize=True)
        aut_t = automorphism_group(t)
        ok = True
        try:
            for tau in aut_l.elements:
                lift_line_graph_aut(tau, t)
        except Exception as exc:  # reported, not raised
            ok = False
            detail = str(exc)
        else:
            detail = f"{aut_l.order} line-graph automorphisms lifted; |Aut(T)| = {aut_t.order}"
        out.append(CheckResult(f"lifting {label}", ok, detail))
    return out


def _corollaries(budget, **_) -> list[CheckResult]:
    out = []
    for row in corollary_rows(budget):
        brute = "-" if row["brute"] is None else row["brute"]
        out.append(CheckResult(
            f"order {row['instance']}", _row_ok(row),
            f"predicted {row['predicted']} fast {row['fast']} brute {brute}",
        ))
    return out


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "lemma": _lemma,
    "cond2": _cond2,
    "psi": _psi,
    "lifting": _lifting,
    "corollaries": _corollaries,
}
