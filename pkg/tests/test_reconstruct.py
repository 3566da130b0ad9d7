import pytest

from laga import (
    GF,
    AlgebraView,
    BElement,
    LevelMismatch,
    NonNestingViolated,
    NotUniform,
    ReconstructionFailed,
    V,
    algebra_view,
    are_isomorphic,
    build_boolean,
    build_complete_layered,
    build_subspace_lattice,
    intersection_size,
    kappa_combinatorial,
    kappa_view,
    outdegree_multiset,
    reconstruct_boolean,
    reconstruct_nonnesting,
    reconstruct_subspace,
    reconstruction_report,
    span,
    upper_part,
    upper_vertex_like_basis,
    view_from_json_dict,
    view_to_json_dict,
)

F3 = GF(3)


def _unit(d, i):
    return tuple(F3.one if j == i else F3.zero for j in range(d))


def test_view_requires_uniform(nonuniform_graph):
    with pytest.raises(NotUniform):
        algebra_view(nonuniform_graph)


def test_plain_view_shape(boolean3):
    view = algebra_view(boolean3)
    assert view.plain
    assert view.level_dims == (0, 3, 3, 1)
    assert view.top_level == 3
    scrambled = algebra_view(boolean3, scramble_seed=1)
    assert not scrambled.plain
    assert scrambled.level_dims == view.level_dims


def test_kappa_view_matches_combinatorial_on_plain(boolean3):
    view = algebra_view(boolean3)
    for n in range(2, 4):
        for v in boolean3.level_vertices(n):
            unit = _unit(view.level_dims[n], v.index)
            assert kappa_view(view, n, unit) == kappa_combinatorial(
                boolean3, [v], field=F3
            )
    # level 1 is reported as multiplying into nothing
    assert kappa_view(view, 1, _unit(3, 0)).ambient_dim == 0
    with pytest.raises(LevelMismatch):
        kappa_view(view, 4, ())
    with pytest.raises(LevelMismatch):
        kappa_view(view, 2, (1,))


def test_basis_modes_agree_on_plain_view(boolean3):
    view = algebra_view(boolean3)
    for n in range(2, 4):
        exhaustive = upper_vertex_like_basis(view, n, "exhaustive")
        vertex = upper_vertex_like_basis(view, n, "vertex")
        assert sorted(exhaustive.ks) == sorted(vertex.ks)
        assert sorted(k.key() for k in exhaustive.kappas) == sorted(
            k.key() for k in vertex.kappas
        )


def test_sampled_mode_agrees(subspace23):
    view = algebra_view(subspace23, scramble_seed=3)
    for n in range(2, 4):
        sampled = upper_vertex_like_basis(view, n, "sampled")
        exhaustive = upper_vertex_like_basis(view, n, "exhaustive")
        assert sorted(sampled.ks) == sorted(exhaustive.ks)
        assert sorted(k.key() for k in sampled.kappas) == sorted(
            k.key() for k in exhaustive.kappas
        )


def test_nested_graph_greedy_basis(nested_graph):
    view = algebra_view(nested_graph)
    basis = upper_vertex_like_basis(view, 2)
    # the narrow vertex c (successors {x, y}) has the bigger kernel and
    # is chosen first
    assert basis.ks == (2, 1)
    assert basis.kappas[0] == span([[1, 1, 0], [0, 0, 1]], 3, F3)
    assert basis.kappas[1] == span([[1, 1, 1]], 3, F3)


def test_outdegree_multisets(boolean3, nested_graph):
    view = algebra_view(boolean3)
    assert outdegree_multiset(view, 2) == [2, 2, 2]
    assert outdegree_multiset(view, 3) == [3]
    assert outdegree_multiset(algebra_view(nested_graph), 2) == [2, 3]


def test_intersection_sizes(boolean3):
    view = algebra_view(boolean3)
    # {1,2} and {1,3} share one element; a vertex with itself reports its
    # out-degree
    a = BElement(F3, 2, _unit(3, 0))
    b = BElement(F3, 2, _unit(3, 1))
    assert intersection_size(view, a, b) == 1
    assert intersection_size(view, a, a) == 2
    with pytest.raises(LevelMismatch):
        intersection_size(view, a, BElement(F3, 3, _unit(1, 0)))


def test_nonnesting_recovers_upper_part(boolean4):
    view = algebra_view(boolean4, scramble_seed=5)
    recovered = reconstruct_nonnesting(view, expect_levels=(6, 4, 1))
    assert are_isomorphic(recovered, upper_part(boolean4, 2)) is not None


def test_nonnesting_rejects_nested_views(nested_graph):
    with pytest.raises(NonNestingViolated):
        reconstruct_nonnesting(algebra_view(nested_graph))


def test_boolean_reconstruction_over_seeds(boolean3):
    for seed in (None, 1, 2, 3):
        view = algebra_view(boolean3, scramble_seed=seed)
        result = reconstruct_boolean(view, 3)
        assert are_isomorphic(result, boolean3) is not None


def test_boolean4_reconstruction(boolean4):
    view = algebra_view(boolean4, scramble_seed=7)
    result = reconstruct_boolean(view, 4)
    assert are_isomorphic(result, boolean4) is not None


def test_subspace_reconstruction(subspace23):
    view = algebra_view(subspace23, scramble_seed=1)
    result = reconstruct_subspace(view, 2, 3)
    assert are_isomorphic(result, subspace23) is not None


def test_reconstruction_rejects_wrong_dimensions(subspace23):
    view = algebra_view(subspace23)
    with pytest.raises(ReconstructionFailed):
        reconstruct_boolean(view, 3)
    with pytest.raises(ReconstructionFailed):
        reconstruct_subspace(view, 2, 2)


def test_complete_graph_fails_boolean_recovery():
    # the complete layered graph shares the Boolean level sizes but all
    # its kernels coincide, so the nesting screen rejects it
    g = build_complete_layered([1, 4, 6, 4, 1])
    view = algebra_view(g)
    with pytest.raises(NonNestingViolated):
        reconstruct_boolean(view, 4)


def test_view_json_round_trip(boolean3):
    for seed in (None, 2):
        view = algebra_view(boolean3, scramble_seed=seed)
        again = view_from_json_dict(view_to_json_dict(view))
        assert again == view


def test_invariants_are_scramble_invariant(subspace23):
    plain = algebra_view(subspace23)
    scrambled = algebra_view(subspace23, scramble_seed=11)
    for n in range(2, 4):
        assert outdegree_multiset(plain, n, "auto") == outdegree_multiset(
            scrambled, n, "auto"
        )


def test_reconstruction_report(boolean3):
    view = algebra_view(boolean3, scramble_seed=4)
    report = reconstruction_report(view, "boolean", n=3)
    assert report["certified"] is True
    assert report["levels"] == [1, 3, 3, 1]
    assert {row["level"]: row["k_values"] for row in report["per_level"]} == {
        2: [2, 2, 2],
        3: [1],
    }
    nn = reconstruction_report(view, "nonnesting", reference=boolean3)
    assert nn["certified"] is True
    with pytest.raises(ReconstructionFailed):
        reconstruction_report(view, "mystery")
