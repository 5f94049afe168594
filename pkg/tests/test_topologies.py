from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleyaut.corollaries import ambient_index, predicted_order, wreath_extension
from cayleyaut.engine import Semidirect, Wreath, aut_fast
from cayleyaut.errors import InvalidParams
from cayleyaut.graph import INFINITE
from cayleyaut.topologies import (
    TopologySpec,
    bubble_sort,
    custom,
    expected_girth,
    extended_cube,
    hypercube,
    make,
    modified_bubble_sort,
    parse_spec,
    recognize,
    shape,
    star,
)
from cayleyaut.transpositions import TranspositionSet, check_hypotheses


def test_make_examples():
    assert make(hypercube(3)).to_edges() == [(1, 2), (3, 4), (5, 6)]
    assert make(extended_cube(2, 3)).to_edges() == [(1, 2), (2, 3), (4, 5), (5, 6)]
    assert make(modified_bubble_sort(5)).to_edges() == [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
    assert make(bubble_sort(4)).to_edges() == [(1, 2), (2, 3), (3, 4)]
    assert make(star(4)).to_edges() == [(1, 2), (1, 3), (1, 4)]


@pytest.mark.parametrize(
    "bad",
    [
        lambda: hypercube(0),
        lambda: bubble_sort(1),
        lambda: star(1),
        lambda: modified_bubble_sort(2),
        lambda: extended_cube(2, 2),
        lambda: extended_cube(0, 3),
        lambda: TopologySpec("torus", (3,)),
        lambda: custom([(1, 5)], ambient=3),
    ],
)
def test_invalid_params(bad):
    with pytest.raises(InvalidParams):
        bad()


@pytest.mark.parametrize(
    "text, spec",
    [
        ("hypercube:3", hypercube(3)),
        ("bubble:4", bubble_sort(4)),
        ("star:5", star(5)),
        ("mbs:5", modified_bubble_sort(5)),
        ("extcube:2x3", extended_cube(2, 3)),
        ("custom:1-2,2-3", custom([(1, 2), (2, 3)])),
        ("custom:1-2,ambient=3", custom([(1, 2)], ambient=3)),
    ],
)
def test_parse_spec_round_trip(text, spec):
    assert parse_spec(text) == spec
    assert str(spec) == text
    assert parse_spec(str(spec)) == spec


def test_parse_spec_from_file(tmp_path):
    f = tmp_path / "single_edge.edges"
    f.write_text("1 2\n")
    assert make(parse_spec(f"custom:{f}")).to_edges() == [(1, 2)]
    assert parse_spec(f"custom:{f},ambient=4").ambient == 4


@pytest.mark.parametrize("text", ["foo:3", "hypercube", "hypercube:x", "extcube:2", "custom:", "custom:1-1",
                                  "custom:/no/such/file.edges", "mbs:2"])
def test_parse_spec_errors(text):
    with pytest.raises(InvalidParams):
        parse_spec(text)


NAMED = [hypercube(r) for r in (1, 2, 3)] + [
    bubble_sort(4), bubble_sort(6), star(4), star(6),
    modified_bubble_sort(4), modified_bubble_sort(6), extended_cube(2, 3), extended_cube(3, 4),
]


@pytest.mark.parametrize("spec", NAMED, ids=str)
def test_recognize_round_trip(spec):
    assert recognize(make(spec)) == spec


def test_recognize_fallbacks():
    assert recognize(make(star(3))) == bubble_sort(3)
    odd = TranspositionSet([(1, 2), (2, 3), (4, 5)])
    assert recognize(odd).family == "custom"


def test_shape():
    assert shape(make(extended_cube(2, 3))) == (2, ((3, 2), (3, 2)))
    assert shape(make(modified_bubble_sort(5))) == (1, ((5, 5),))


@pytest.mark.parametrize("spec", NAMED, ids=str)
def test_expected_girth(spec):
    assert check_hypotheses(make(spec)).girth_value == expected_girth(spec)


def test_expected_girth_values():
    assert expected_girth(modified_bubble_sort(5)) == 5
    assert expected_girth(hypercube(2)) == INFINITE
    assert expected_girth(custom([(1, 2), (2, 3), (1, 3)])) == 3


@pytest.mark.parametrize(
    "spec, order",
    [
        (modified_bubble_sort(5), 1200),
        (hypercube(4), 384),
        (extended_cube(2, 3), 288),
        (hypercube(1), 2),
        (bubble_sort(4), 48),
        (bubble_sort(2), 2),
        (star(5), 2880),
    ],
    ids=str,
)
def test_predicted_order_examples(spec, order):
    got, fact = predicted_order(spec)
    assert got == order
    assert isinstance(fact, Semidirect) and fact.order == order


def test_predicted_order_factorization():
    _, fact = predicted_order(extended_cube(2, 3))
    assert (fact.normal_order, fact.complement_order) == (36, 8)


def test_predicted_order_refusals():
    with pytest.raises(InvalidParams):
        predicted_order(modified_bubble_sort(4))
    with pytest.raises(InvalidParams):
        predicted_order(custom([(1, 2)]))


@given(st.integers(1, 4))
def test_hypercube_prediction_matches_fast_path(r):
    assert predicted_order(hypercube(r))[0] == aut_fast(make(hypercube(r))).order == 2**r * factorial(r)


@pytest.mark.parametrize("r, k", [(1, 3), (2, 3), (1, 4), (3, 3)])
def test_extended_cube_prediction_matches_fast_path(r, k):
    assert predicted_order(extended_cube(r, k))[0] == aut_fast(make(extended_cube(r, k))).order


def test_wreath_extension_examples():
    single = TranspositionSet([(1, 2)])
    inner = aut_fast(single)
    assert wreath_extension(inner, 1) is inner
    assert ambient_index(single, 3) == 3
    w = wreath_extension(inner, 3)
    assert w.order == 48
    assert isinstance(w.factorization, Wreath) and w.factorization.order == 48
    assert w.vertex_count == 6
    assert ambient_index(single, 4) == 12
    assert wreath_extension(inner, 12).order == factorial(12) * 2**12
    with pytest.raises(InvalidParams):
        ambient_index(make(bubble_sort(4)), 3)
