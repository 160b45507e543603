import pytest
from hypothesis import given
from hypothesis import strategies as st

from star_spectra.star_graph import (
    DynkinClass,
    Parity,
    StarGraph,
    build_star,
    classify,
    positive_root_count,
)

lengths_st = st.tuples(
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=1, max_value=5),
)


def test_build_d4():
    g = build_star(1, 1, 1)
    assert g.vertex_count == 4
    assert len(g.neighbors[0]) == 3
    assert all(len(g.neighbors[v]) == 1 for v in (1, 2, 3))
    # center is odd by convention, so the three leaves are even
    assert g.parity[0] is Parity.ODD
    assert all(g.parity[v] is Parity.EVEN for v in (1, 2, 3))


def test_build_e6_odd_set():
    g = build_star(2, 2, 1)
    assert set(g.vertices_of_parity(Parity.ODD)) == {0, 1, 3}
    assert set(g.vertices_of_parity(Parity.EVEN)) == {2, 4, 5}


def test_build_e8_shape():
    g = build_star(2, 4, 1)
    assert g.vertex_count == 8
    assert g.branches == ((1, 2), (3, 4, 5, 6), (7,))
    assert g.heads == (2, 6, 7)


@pytest.mark.parametrize("bad", [(0, 1, 1), (1, -2, 1), (1, 1, 0)])
def test_rejects_nonpositive_lengths(bad):
    with pytest.raises(ValueError):
        build_star(*bad)


@given(lengths_st)
def test_bipartition_valid_on_every_edge(lengths):
    g = build_star(*lengths)
    assert len(g.edges) == g.vertex_count - 1
    for u, v in g.edges:
        assert g.parity[u] is not g.parity[v]


@pytest.mark.parametrize(
    "lengths,name,h",
    [
        ((1, 1, 1), "D4", 6),
        ((1, 1, 2), "D5", 8),
        ((1, 1, 4), "D7", 12),
        ((2, 2, 1), "E6", 12),
        ((2, 3, 1), "E7", 18),
        ((2, 4, 1), "E8", 30),
        ((2, 2, 2), "AffineE6", None),
        ((1, 3, 3), "AffineE7", None),
        ((1, 2, 5), "AffineE8", None),
        ((2, 2, 3), "Indefinite", None),
        ((3, 3, 3), "Indefinite", None),
    ],
)
def test_classify(lengths, name, h):
    c = classify(build_star(*lengths))
    assert c.name == name
    assert c.coxeter_number == h


@given(lengths_st, st.permutations([0, 1, 2]))
def test_classify_permutation_invariant(lengths, perm):
    base = classify(build_star(*lengths))
    permuted = classify(build_star(*(lengths[i] for i in perm)))
    assert base == permuted


@pytest.mark.parametrize("lengths", [(1, 1, 1), (2, 2, 1), (2, 3, 1), (2, 4, 1), (1, 1, 3)])
def test_finite_rank_equals_vertex_count(lengths):
    g = build_star(*lengths)
    c = classify(g)
    assert c.is_finite
    assert c.rank == g.vertex_count


@pytest.mark.parametrize(
    "lengths,count", [((1, 1, 1), 12), ((2, 2, 1), 36), ((2, 3, 1), 63), ((2, 4, 1), 120)]
)
def test_positive_root_count(lengths, count):
    assert positive_root_count(classify(build_star(*lengths))) == count


def test_positive_root_count_rejects_nonfinite():
    with pytest.raises(ValueError):
        positive_root_count(DynkinClass("Indefinite"))
