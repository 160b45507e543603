from fractions import Fraction as Q

import pytest

from star_spectra.instances import CATALOG_INSTANCES, all_case_ids, instance_graph
from star_spectra.membership import (
    CATALOG,
    cross_validate,
    decide_catalog,
    decide_generic,
)
from star_spectra.param_bridge import AlgebraParams, GenDim, algebra_params, trace_gap
from star_spectra.star_graph import build_star

D4 = build_star(1, 1, 1)
E6 = build_star(2, 2, 1)
E8 = build_star(2, 4, 1)


def test_catalog_shape():
    assert {name: len(cases) for name, cases in CATALOG.items()} == {
        "D4": 1,
        "E6": 2,
        "E7": 3,
        "E8": 11,
    }
    strict_counts = {"D4": 3, "E6": 5, "E7": 6, "E8": 7}
    for name, cases in CATALOG.items():
        for case in cases:
            strict = [c for c in case.conditions if c.kind == "strict"]
            eqs = [c for c in case.conditions if c.kind == "eq"]
            assert len(strict) == strict_counts[name]
            assert len(eqs) == 1


def test_d4_member_example():
    p = algebra_params([1], [1], [1], "3/2")
    for decide in (decide_generic, decide_catalog):
        decision = decide(p, D4)
        assert decision.member
        assert decision.witness_gendims == frozenset({GenDim(2, (1,), (1,), (1,))})


def test_d4_nonmember_trace():
    p = algebra_params([1], [1], [1], 2)
    assert not decide_generic(p, D4).member
    decision = decide_catalog(p, D4)
    assert not decision.member
    assert "D4.1.eq" in decision.failed_conditions


def test_e6_member_example():
    p = algebra_params([2, 1], [2, 1], ["3/2"], "5/2")
    generic = decide_generic(p, E6)
    catalog = decide_catalog(p, E6)
    want = frozenset({GenDim(3, (1, 1), (1, 1), (1,))})
    assert generic.witness_gendims == catalog.witness_gendims == want
    assert generic.witnesses[0].steps == 4


def test_e8_huge_gamma_fails_every_equality():
    p = algebra_params([8, 7], [4, 3, 2, 1], [5], 10**6)
    decision = decide_catalog(p, E8)
    assert not decision.member
    eq_failures = {c for c in decision.failed_conditions if c.endswith(".eq")}
    assert eq_failures == {f"E8.{i}.eq" for i in range(1, 12)}


def test_decide_catalog_rejects_d5():
    p = algebra_params([1], [1], [2, 1], 2)
    with pytest.raises(ValueError):
        decide_catalog(p, build_star(1, 1, 2))


def test_stored_instances_cover_all_cases_with_margin():
    assert set(CATALOG_INSTANCES) == set(all_case_ids())
    for case_id, params in CATALOG_INSTANCES.items():
        g = instance_graph(case_id)
        case = next(c for cases in CATALOG.values() for c in cases if c.case_id == case_id)
        gendim = GenDim(case.n0, case.n_a, case.n_b, case.n_d)
        generic = decide_generic(params, g)
        catalog = decide_catalog(params, g)
        assert generic.member and catalog.member
        assert generic.witness_gendims == catalog.witness_gendims == frozenset({gendim})
        assert trace_gap(params, gendim) == 0
        margins = [
            c.margin(params.alpha, params.beta, params.delta, params.gamma)
            for c in case.conditions
            if c.kind == "strict"
        ]
        assert min(margins) >= Q(1, 10)


def test_role_permutation_handles_reordered_branches():
    # the E7.1 instance with its long branch listed first
    p = CATALOG_INSTANCES["E7.1"]
    swapped = AlgebraParams(p.beta, p.alpha, p.delta, p.gamma)
    g = build_star(3, 2, 1)
    generic = decide_generic(swapped, g)
    catalog = decide_catalog(swapped, g)
    assert generic.member and catalog.member
    assert generic.witness_gendims == catalog.witness_gendims
    witness = next(iter(catalog.witness_gendims))
    assert witness == GenDim(4, (1, 1, 1), (1, 1), (2,))


@pytest.mark.parametrize("lengths", [(1, 1, 1), (2, 2, 1), (2, 3, 1), (2, 4, 1)])
def test_cross_validation_agrees(lengths):
    report = cross_validate(build_star(*lengths), samples=300, seed=5)
    assert report.agree
    assert report.member_count > 0


def test_cross_validation_deterministic():
    a = cross_validate(D4, samples=100, seed=9)
    b = cross_validate(D4, samples=100, seed=9)
    assert (a.member_count, a.multi_witness_count, a.disagreements) == (
        b.member_count,
        b.multi_witness_count,
        b.disagreements,
    )


def test_cross_validation_empty():
    report = cross_validate(D4, samples=0, seed=1)
    assert report.agree and report.samples == 0 and report.member_count == 0
