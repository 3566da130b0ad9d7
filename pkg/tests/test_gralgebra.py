import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laga import (
    QQ,
    FreeElement,
    KOutOfRange,
    V,
    build_boolean,
    build_complete_layered,
    distinguished_path,
    e_tilde,
    enumerate_B_basis,
    gr_dimension,
    gr_hilbert_table,
    in_relation_span,
    is_quadratic_to_degree,
    leading_part,
    monomial_m,
    normalize,
    pair_weight,
    random_uniform_graph,
    sequence_monomial,
    skeleton,
    to_pair_sequence,
    word_weight,
    words_of_bidegree,
)


def test_distinguished_path_follows_least_successor(boolean3):
    # {1,2,3} -> {1,2} -> {1} -> {}
    assert distinguished_path(boolean3, V(3, 0)) == (V(3, 0), V(2, 0), V(1, 0), V(0, 0))
    assert distinguished_path(boolean3, V(2, 2)) == (V(2, 2), V(1, 1), V(0, 0))


def test_monomial_m(boolean3):
    m = monomial_m(boolean3, V(3, 0), 2)
    assert m == FreeElement.word((V(3, 0), V(2, 0)))
    with pytest.raises(KOutOfRange):
        monomial_m(boolean3, V(2, 0), 3)


def test_e_tilde_degree_two_vertex(boolean3):
    # for |v| = 2 the expansion is (t - (v-w))(t - w) = t^2 - vt + vw,
    # so the length-1 coefficient is -v
    v, w = V(2, 0), V(1, 0)
    assert e_tilde(boolean3, v, 1) == FreeElement({(v,): QQ(-1)})
    assert e_tilde(boolean3, v, 0) == FreeElement.scalar(1)
    assert e_tilde(boolean3, v, 2) == FreeElement({(v, w): QQ(1), (w, w): QQ(-1)})


def test_e_tilde_leading_term_is_run_monomial(boolean3):
    for v in boolean3.positive_vertices():
        for k in range(v.level + 1):
            lead = leading_part(e_tilde(boolean3, v, k))
            target = monomial_m(boolean3, v, k)
            (word, coeff), = lead.terms.items()
            assert word == next(iter(target.terms))
            assert coeff in (QQ(1), QQ(-1))


def test_skeleton_and_pair_sequence(boolean3):
    # (3,0)(2,0)(1,0) is one full distinguished run
    word = (V(3, 0), V(2, 0), V(1, 0))
    assert skeleton(boolean3, word) == (1, 4)
    assert to_pair_sequence(boolean3, word) == ((V(3, 0), 3),)
    # (3,0)(2,1) breaks the run: {1,3} is not the least successor
    word = (V(3, 0), V(2, 1))
    assert skeleton(boolean3, word) == (1, 2, 3)
    assert to_pair_sequence(boolean3, word) == ((V(3, 0), 1), (V(2, 1), 1))


def test_pair_weight():
    assert pair_weight((V(3, 0), 3)) == 3 + 2 + 1
    assert pair_weight((V(3, 0), 1)) == 3
    assert pair_weight((V(2, 1), 2)) == 2 + 1


def test_sequence_monomial_round_trip(boolean3):
    for m in range(1, 4):
        for n in range(1, 9):
            for pairs in enumerate_B_basis(boolean3, m, n):
                word = sequence_monomial(boolean3, pairs)
                assert to_pair_sequence(boolean3, word) == pairs
                assert len(word) == m and word_weight(word) == n


def test_normalize_fixes_basis_words(boolean3):
    for pairs in enumerate_B_basis(boolean3, 3, 6):
        word = sequence_monomial(boolean3, pairs)
        assert normalize(boolean3, word) == word


def test_normalize_rewrites_covering_step(boolean3):
    # {1,2,3} followed by its non-distinguished successor {1,3} is a
    # covering pair and rewrites to the distinguished run
    word = (V(3, 0), V(2, 1))
    assert to_pair_sequence(boolean3, word) == ((V(3, 0), 1), (V(2, 1), 1))
    result = normalize(boolean3, word)
    assert result == (V(3, 0), V(2, 0))
    assert to_pair_sequence(boolean3, result) == ((V(3, 0), 2),)
    # a word two levels apart is not a covering pair and stays put
    assert normalize(boolean3, (V(3, 0), V(1, 0))) == (V(3, 0), V(1, 0))


def test_normalize_preserves_quotient_class(boolean3):
    word = (V(3, 0), V(2, 1))
    result = normalize(boolean3, word)
    diff = FreeElement.word(word) - FreeElement.word(result)
    assert in_relation_span(boolean3, diff, 2, 5)


def test_pair_sequences_count_equals_quotient_dimension(boolean3):
    for m in range(1, 4):
        for n in range(1, 9):
            assert len(enumerate_B_basis(boolean3, m, n)) == gr_dimension(
                boolean3, m, n
            )


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10_000))
def test_pair_sequences_count_random_uniform(seed):
    g = random_uniform_graph(random.Random(seed), max_levels=3, max_width=4)
    for m in range(1, 4):
        for n in range(1, 7):
            assert len(enumerate_B_basis(g, m, n)) == gr_dimension(g, m, n)


def test_words_of_bidegree(boolean3):
    assert len(words_of_bidegree(boolean3, 2, 3)) == 2 * 3 * 3
    assert words_of_bidegree(boolean3, 2, 1) == []


def test_quadratic_for_uniform_graphs(boolean3, subspace23):
    assert is_quadratic_to_degree(boolean3, 4) == (True, None)
    assert is_quadratic_to_degree(build_complete_layered([1, 2, 2, 2]), 4) == (
        True,
        None,
    )


def test_not_quadratic_for_nonuniform_witness(nonuniform_graph):
    ok, where = is_quadratic_to_degree(nonuniform_graph, 4)
    assert not ok
    assert where is not None and where[0] >= 3


def test_hilbert_table_render(boolean3):
    table = gr_hilbert_table(boolean3, 2, 4)
    assert table.as_dict()[(1, 1)] == 3
    text = table.render()
    assert text.splitlines()[0].startswith("m\\n")
    assert len(text.splitlines()) == 3
