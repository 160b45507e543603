from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from star_spectra.coxeter import g_vector, orbit_entries
from star_spectra.param_bridge import (
    AlgebraParams,
    DegenerateCharacterError,
    DegenerateDimensionError,
    GenDim,
    ShapeMismatchError,
    algebra_params,
    character_to_params,
    dim_to_generalized,
    generalized_to_dim,
    params_to_character,
    trace_gap,
)
from star_spectra.star_graph import build_star

D4 = build_star(1, 1, 1)
E6 = build_star(2, 2, 1)
E7 = build_star(2, 3, 1)
E8 = build_star(2, 4, 1)
GRAPHS = {(1, 1, 1): D4, (2, 2, 1): E6, (2, 3, 1): E7, (2, 4, 1): E8}


@st.composite
def valid_params(draw, lengths):
    den = draw(st.integers(min_value=1, max_value=6))
    fams = []
    for k in lengths:
        nums = draw(
            st.lists(st.integers(min_value=1, max_value=60), min_size=k, max_size=k, unique=True)
        )
        fams.append(tuple(Q(n, den) for n in sorted(nums, reverse=True)))
    gamma = Q(draw(st.integers(min_value=1, max_value=120)), den)
    return AlgebraParams(fams[0], fams[1], fams[2], gamma)


@st.composite
def valid_gendim(draw, lengths):
    fams = [
        tuple(draw(st.integers(min_value=1, max_value=4)) for _ in range(k)) for k in lengths
    ]
    slack = draw(st.integers(min_value=1, max_value=3))
    n0 = max(sum(f) for f in fams) + slack
    return GenDim(n0, fams[0], fams[1], fams[2])


# -- validation


def test_params_require_strict_decrease():
    with pytest.raises(ValueError):
        algebra_params([1, 1], [2, 1], [1], 1)
    with pytest.raises(ValueError):
        algebra_params([1, 2], [2, 1], [1], 1)
    with pytest.raises(ValueError):
        algebra_params([2, 1], [2, 1], [0], 1)
    with pytest.raises(ValueError):
        algebra_params([2, 1], [2, 1], [1], 0)


def test_gendim_requires_positive_entries():
    with pytest.raises(ValueError):
        GenDim(3, (1, 0), (1, 1), (1,))
    with pytest.raises(ValueError):
        GenDim(0, (1,), (1,), (1,))
    assert GenDim(3, (1, 1), (1, 1), (1,)).is_nondegenerate
    assert not GenDim(2, (1, 1), (1,), (1,)).is_nondegenerate


# -- characters


def test_e6_character_table():
    p = algebra_params([2, 1], [2, 1], ["3/2"], "5/2")
    f = params_to_character(p, E6)
    assert f.values == (Q(5, 2), 1, 2, 1, 2, Q(3, 2))


def test_length_one_branch_head_is_the_single_weight():
    p = algebra_params([2, 1], [2, 1], ["3/2"], "5/2")
    f = params_to_character(p, E6)
    assert f[5] == Q(3, 2)


def test_e7_alpha_branch_values():
    p = algebra_params([3, 1], [3, 2, 1], [1], 4)
    f = params_to_character(p, E7)
    assert f[2] == 3 and f[1] == 2


def test_character_shape_mismatch():
    p = algebra_params([2, 1], [2, 1], [1], 3)
    with pytest.raises(ShapeMismatchError):
        params_to_character(p, E7)


@settings(max_examples=80)
@given(st.sampled_from(sorted(GRAPHS)).flatmap(lambda L: st.tuples(st.just(L), valid_params(L))))
def test_character_strictly_positive_and_roundtrips(case):
    lengths, p = case
    g = GRAPHS[lengths]
    f = params_to_character(p, g)
    assert all(v > 0 for v in f.values)
    assert character_to_params(f, g) == p


def test_character_to_params_example():
    f = g_vector(E6, (Q(5, 2), 1, 2, 1, 2, Q(3, 2)))
    p = character_to_params(f, E6)
    assert p == algebra_params([2, 1], [2, 1], ["3/2"], "5/2")


def test_character_boundary_rejection():
    # equal head and next-to-head values force a zero weight
    f = g_vector(E6, (Q(5, 2), 2, 2, 1, 2, Q(3, 2)))
    with pytest.raises(DegenerateCharacterError):
        character_to_params(f, E6)


def test_character_rejects_nonpositive():
    with pytest.raises(DegenerateCharacterError):
        character_to_params(g_vector(E6, (1, 1, 1, 1, 1, 0)), E6)


# -- dimensions


@pytest.mark.parametrize(
    "graph,dim,flat",
    [
        (E6, (3, 1, 2, 1, 2, 1), (3, 1, 1, 1, 1, 1)),
        (E6, (3, 1, 2, 1, 2, 2), (3, 1, 1, 1, 1, 2)),
        (E7, (4, 1, 2, 1, 2, 3, 2), (4, 1, 1, 1, 1, 1, 2)),
        (E7, (4, 1, 3, 1, 2, 3, 2), (4, 2, 1, 1, 1, 1, 2)),
        (E7, (4, 2, 3, 1, 2, 3, 2), (4, 1, 2, 1, 1, 1, 2)),
        (D4, (2, 1, 1, 1), (2, 1, 1, 1)),
    ],
)
def test_dim_to_generalized_tables(graph, dim, flat):
    n = dim_to_generalized(g_vector(graph, dim), graph)
    assert n.flat() == flat
    assert generalized_to_dim(n, graph) == g_vector(graph, dim)


def test_dim_to_generalized_rejects_degenerate():
    with pytest.raises(DegenerateDimensionError):
        dim_to_generalized(g_vector(D4, (1, 1, 1, 1)), D4)  # head not below center
    with pytest.raises(DegenerateDimensionError):
        dim_to_generalized(g_vector(E6, (3, 2, 2, 1, 2, 1)), E6)  # not strictly increasing
    with pytest.raises(DegenerateDimensionError):
        dim_to_generalized(g_vector(E6, (3, Q(1, 2), 2, 1, 2, 1)), E6)


@settings(max_examples=80)
@given(st.sampled_from(sorted(GRAPHS)).flatmap(lambda L: st.tuples(st.just(L), valid_gendim(L))))
def test_gendim_roundtrip(case):
    lengths, n = case
    g = GRAPHS[lengths]
    d = generalized_to_dim(n, g)
    assert dim_to_generalized(d, g) == n


@pytest.mark.parametrize("graph", [D4, E6, E7, E8])
def test_enumerated_dims_roundtrip(graph):
    for e in orbit_entries(graph):
        d = g_vector(graph, e.dim)
        assert generalized_to_dim(dim_to_generalized(d, graph), graph) == d


def test_trace_gap():
    p = algebra_params([2, 1], [2, 1], ["3/2"], "5/2")
    n = GenDim(3, (1, 1), (1, 1), (1,))
    assert trace_gap(p, n) == 0
    assert trace_gap(algebra_params([2, 1], [2, 1], ["3/2"], 3), n) == Q(-3, 2)
