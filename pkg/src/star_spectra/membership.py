"""Membership deciders for the admissible-weight set: generic Coxeter unwinding vs. the case catalog.

The catalog transcribes, verbatim, one inequality-and-equality system per
admissible generalized dimension of the four star types that have any
(D4, E6, E7, E8).  Every inequality is strict and every trace relation exact,
so boundary tuples are classified non-member by both deciders.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from math import lcm

from .coxeter import GVector, g_vector, orbit_entries, unwind_exact
from .param_bridge import (
    AlgebraParams,
    GenDim,
    dim_to_generalized,
    generalized_to_dim,
    params_to_character,
)
from .star_graph import StarGraph, classify, positive_root_count

Weights = tuple[Fraction, ...]
MarginFn = Callable[[Weights, Weights, Weights, Fraction], Fraction]


@dataclass(frozen=True)
class Condition:
    cond_id: str
    kind: str  # "strict" (margin > 0) or "eq" (margin == 0)
    margin: MarginFn

    def holds(self, a: Weights, b: Weights, dl: Weights, g: Fraction) -> bool:
        m = self.margin(a, b, dl, g)
        return m == 0 if self.kind == "eq" else m > 0


def _strict(cond_id: str, fn: MarginFn) -> Condition:
    return Condition(cond_id, "strict", fn)


def _eq(cond_id: str, fn: MarginFn) -> Condition:
    return Condition(cond_id, "eq", fn)


@dataclass(frozen=True)
class CatalogCase:
    """One admissible case: its generalized dimension and the conditions carving it out.

    Weight roles inside the condition functions: a = length-2 family (length-1
    for D4), b = long family, dl = length-1 family, g = the scalar.
    Multiplicity tuples are in weight order (first entry pairs with the largest
    weight).
    """

    case_id: str
    n0: int
    n_a: tuple[int, ...]
    n_b: tuple[int, ...]
    n_d: tuple[int, ...]
    conditions: tuple[Condition, ...]

    def evaluate(self, a: Weights, b: Weights, dl: Weights, g: Fraction):
        failed = tuple(c.cond_id for c in self.conditions if not c.holds(a, b, dl, g))
        return not failed, failed


def _case(case_id, n0, n_a, n_b, n_d, strict_margins, eq_margin) -> CatalogCase:
    conds = tuple(
        _strict(f"{case_id}.{i}", fn) for i, fn in enumerate(strict_margins, start=1)
    ) + (_eq(f"{case_id}.eq", eq_margin),)
    return CatalogCase(case_id, n0, n_a, n_b, n_d, conds)


_D4_CASES = (
    _case(
        "D4.1", 2, (1,), (1,), (1,),
        (
            lambda a, b, dl, g: dl[0] + b[0] - a[0],
            lambda a, b, dl, g: a[0] + b[0] - dl[0],
            lambda a, b, dl, g: dl[0] + a[0] - b[0],
        ),
        lambda a, b, dl, g: 2 * g - (a[0] + b[0] + dl[0]),
    ),
)

_E6_CASES = (
    _case(
        "E6.1", 3, (1, 1), (1, 1), (1,),
        (
            lambda a, b, dl, g: g - a[0],
            lambda a, b, dl, g: g - b[0],
            lambda a, b, dl, g: a[1] + b[0] - g,
            lambda a, b, dl, g: a[0] + b[1] - g,
            lambda a, b, dl, g: g - (a[1] + b[1]),
        ),
        lambda a, b, dl, g: 3 * g - (dl[0] + a[0] + a[1] + b[0] + b[1]),
    ),
    _case(
        "E6.2", 3, (1, 1), (1, 1), (2,),
        (
            lambda a, b, dl, g: dl[0] + b[0] - g,
            lambda a, b, dl, g: g - (dl[0] + a[1]),
            lambda a, b, dl, g: g - (dl[0] + b[1]),
            lambda a, b, dl, g: dl[0] + a[0] - g,
            lambda a, b, dl, g: dl[0] + a[1] + b[1] - g,
        ),
        lambda a, b, dl, g: 3 * g - (2 * dl[0] + a[0] + a[1] + b[0] + b[1]),
    ),
)

_E7_CASES = (
    _case(
        "E7.1", 4, (1, 1), (1, 1, 1), (2,),
        (
            lambda a, b, dl, g: g - (dl[0] + b[2]),
            lambda a, b, dl, g: dl[0] + a[0] + b[0] - 2 * g,
            lambda a, b, dl, g: dl[0] + b[1] - g,
            lambda a, b, dl, g: 2 * g - (dl[0] + a[1] + b[0]),
            lambda a, b, dl, g: g - b[0],
            lambda a, b, dl, g: 2 * g - (dl[0] + a[0] + b[1]),
        ),
        lambda a, b, dl, g: 4 * g - (a[0] + a[1] + b[0] + b[1] + b[2] + 2 * dl[0]),
    ),
    _case(
        "E7.2", 4, (2, 1), (1, 1, 1), (2,),
        (
            lambda a, b, dl, g: a[0] + b[1] - g,
            lambda a, b, dl, g: 2 * g - (a[0] + b[0] + dl[0]),
            lambda a, b, dl, g: g - (a[0] + b[2]),
            lambda a, b, dl, g: 2 * g - (dl[0] + a[0] + b[1] + b[2]),
            lambda a, b, dl, g: dl[0] + a[0] - g,
            lambda a, b, dl, g: dl[0] + a[0] + b[0] + b[2] - 2 * g,
        ),
        lambda a, b, dl, g: 4 * g - (2 * a[0] + a[1] + b[0] + b[1] + b[2] + 2 * dl[0]),
    ),
    _case(
        "E7.3", 4, (1, 2), (1, 1, 1), (2,),
        (
            lambda a, b, dl, g: g - (a[1] + b[1]),
            lambda a, b, dl, g: dl[0] + a[1] + b[2] - g,
            lambda a, b, dl, g: a[1] + b[0] - g,
            lambda a, b, dl, g: dl[0] + a[1] + b[0] + b[1] - 2 * g,
            lambda a, b, dl, g: g - (dl[0] + a[1]),
            lambda a, b, dl, g: 2 * g - (dl[0] + a[1] + b[0] + b[2]),
        ),
        lambda a, b, dl, g: 4 * g - (a[0] + 2 * a[1] + b[0] + b[1] + b[2] + 2 * dl[0]),
    ),
)

_E8_CASES = (
    _case(
        "E8.1", 5, (1, 2), (1, 1, 1, 1), (2,),
        (
            lambda a, b, dl, g: g - (a[1] + b[2]),
            lambda a, b, dl, g: dl[0] + a[1] + b[0] + b[3] - 2 * g,
            lambda a, b, dl, g: a[1] + b[1] - g,
            lambda a, b, dl, g: dl[0] + a[1] + b[1] + b[2] - 2 * g,
            lambda a, b, dl, g: 2 * g - (dl[0] + a[1] + b[0]),
            lambda a, b, dl, g: g - b[0],
            lambda a, b, dl, g: 2 * g - (dl[0] + a[1] + b[1] + b[3]),
        ),
        lambda a, b, dl, g: 5 * g - (2 * dl[0] + a[0] + 2 * a[1] + b[0] + b[1] + b[2] + b[3]),
    ),
    _case(
        "E8.2", 5, (2, 2), (1, 1, 1, 1), (3,),
        (
            lambda a, b, dl, g: dl[0] + a[1] + b[2] - g,
            lambda a, b, dl, g: 5 * g + b[0] + b[2] + b[3] - (2 * dl[0] + 3 * a[0] + 3 * a[1] + 4 * b[1]),
            lambda a, b, dl, g: g - (dl[0] + a[1] + b[3]),
            lambda a, b, dl, g: 4 * dl[0] + a[0] + a[1] + 3 * b[0] + 3 * b[1] - (5 * g + 2 * b[2] + 2 * b[3]),
            lambda a, b, dl, g: 2 * dl[0] + 3 * a[0] + 3 * a[1] + 4 * b[0] - (5 * g + b[1] + b[2] + b[3]),
            lambda a, b, dl, g: dl[0] + a[0] - g,
            lambda a, b, dl, g: 2 * dl[0] + 3 * a[0] + 3 * a[1] + 4 * b[1] + 4 * b[3] - (5 * g + b[0] + b[2]),
        ),
        lambda a, b, dl, g: 5 * g - (3 * dl[0] + 2 * a[0] + 2 * a[1] + b[0] + b[1] + b[2] + b[3]),
    ),
    _case(
        "E8.3", 6, (2, 2), (1, 1, 1, 1), (3,),
        (
            lambda a, b, dl, g: 2 * g - (dl[0] + a[0] + b[1]),
            lambda a, b, dl, g: dl[0] + a[0] + a[1] + b[2] - 2 * g,
            lambda a, b, dl, g: dl[0] + a[0] + b[0] - 2 * g,
            lambda a, b, dl, g: 3 * g - (2 * dl[0] + a[0] + a[1] + b[2] + b[3]),
            lambda a, b, dl, g: 2 * g - (dl[0] + a[0] + a[1] + b[3]),
            lambda a, b, dl, g: g - (dl[0] + a[1]),
            lambda a, b, dl, g: 2 * dl[0] + a[0] + a[1] + b[1] + b[3] - 3 * g,
        ),
        lambda a, b, dl, g: 6 * g - (3 * dl[0] + 2 * a[0] + 2 * a[1] + b[0] + b[1] + b[2] + b[3]),
    ),
    _case(
        "E8.4", 6, (2, 2), (2, 1, 1, 1), (3,),
        (
            lambda a, b, dl, g: dl[0] + a[0] + b[0] + b[3] - 2 * g,
            lambda a, b, dl, g: 2 * g - (dl[0] + a[1] + b[0] + b[2]),
            lambda a, b, dl, g: 2 * g - (dl[0] + a[0] + b[0]),
            lambda a, b, dl, g: 3 * g - (2 * dl[0] + a[0] + a[1] + b[0] + b[3]),
            lambda a, b, dl, g: dl[0] + a[1] + b[0] + b[1] - 2 * g,
            lambda a, b, dl, g: a[1] + b[0] - g,
            lambda a, b, dl, g: 2 * dl[0] + a[0] + a[1] + b[0] + b[2] - 3 * g,
        ),
        lambda a, b, dl, g: 6 * g - (3 * dl[0] + 2 * a[0] + 2 * a[1] + 2 * b[0] + b[1] + b[2] + b[3]),
    ),
    _case(
        "E8.5", 6, (2, 2), (1, 1, 1, 2), (3,),
        (
            lambda a, b, dl, g: 2 * g - (dl[0] + a[1] + b[0] + b[3]),
            lambda a, b, dl, g: dl[0] + a[0] + b[1] + b[3] - 2 * g,
            lambda a, b, dl, g: dl[0] + a[1] + b[3] - g,
            lambda a, b, dl, g: 2 * dl[0] + a[0] + a[1] + b[0] + b[3] - 3 * g,
            lambda a, b, dl, g: 2 * g - (dl[0] + a[0] + b[2] + b[3]),
            lambda a, b, dl, g: g - (a[0] + b[3]),
            lambda a, b, dl, g: 3 * g - (2 * dl[0] + a[0] + a[1] + b[1] + b[3]),
        ),
        lambda a, b, dl, g: 6 * g - (3 * dl[0] + 2 * a[0] + 2 * a[1] + b[0] + b[1] + b[2] + 2 * b[3]),
    ),
    _case(
        "E8.6", 6, (2, 2), (1, 2, 1, 1), (3,),
        (
            lambda a, b, dl, g: dl[0] + a[0] + a[1] + b[1] - 2 * g,
            lambda a, b, dl, g: 2 * g - (dl[0] + a[0] + b[1] + b[3]),
            lambda a, b, dl, g: g - (a[1] + b[1]),
            lambda a, b, dl, g: 3 * g - (dl[0] + a[0] + a[1] + b[0] + b[1]),
            lambda a, b, dl, g: dl[0] + a[0] + b[1] + b[2] - 2 * g,
            lambda a, b, dl, g: dl[0] + b[1] - g,
            lambda a, b, dl, g: 3 * g - (2 * dl[0] + a[0] + a[1] + b[1] + b[2]),
        ),
        lambda a, b, dl, g: 6 * g - (3 * dl[0] + 2 * a[0] + 2 * a[1] + b[0] + 2 * b[1] + b[2] + b[3]),
    ),
    _case(
        "E8.7", 6, (2, 2), (1, 1, 2, 1), (3,),
        (
            lambda a, b, dl, g: 2 * g - (dl[0] + a[0] + a[1] + b[2]),
            lambda a, b, dl, g: dl[0] + a[1] + b[0] + b[2] - 2 * g,
            lambda a, b, dl, g: a[0] + b[2] - g,
            lambda a, b, dl, g: dl[0] + a[0] + a[1] + b[2] + b[3] - 2 * g,
            lambda a, b, dl, g: 2 * g - (dl[0] + a[1] + b[1] + b[2]),
            lambda a, b, dl, g: g - (dl[0] + b[2]),
            lambda a, b, dl, g: 2 * dl[0] + a[0] + a[1] + b[1] + b[2] - 3 * g,
        ),
        lambda a, b, dl, g: 6 * g - (3 * dl[0] + 2 * a[0] + 2 * a[1] + b[0] + b[1] + 2 * b[2] + b[3]),
    ),
    _case(
        "E8.8", 5, (2, 1), (1, 1, 1, 1), (2,),
        (
            lambda a, b, dl, g: 5 * g + a[1] + b[0] + b[2] + b[3] - (3 * dl[0] + 3 * a[0] + 4 * b[1]),
            lambda a, b, dl, g: a[0] + b[2] - g,
            lambda a, b, dl, g: g - b[0],
            lambda a, b, dl, g: 5 * g + 2 * b[0] - (dl[0] + a[0] + 3 * a[1] + 3 * b[1] + 3 * b[2] + 3 * b[3]),
            lambda a, b, dl, g: 5 * g + a[1] + b[0] + b[1] - (3 * dl[0] + 3 * a[0] + 4 * b[2] + 4 * b[3]),
            lambda a, b, dl, g: g - (a[0] + b[3]),
            lambda a, b, dl, g: 5 * g + 2 * b[1] + 2 * b[3] - (dl[0] + a[0] + 3 * a[1] + 3 * b[0] + 3 * b[2]),
        ),
        lambda a, b, dl, g: 5 * g - (2 * dl[0] + 2 * a[0] + a[1] + b[0] + b[1] + b[2] + b[3]),
    ),
    _case(
        "E8.9", 5, (2, 1), (1, 1, 1, 1), (3,),
        (
            lambda a, b, dl, g: 5 * g + 2 * b[0] + 2 * b[3] - (4 * dl[0] + a[0] + 3 * a[1] + 3 * b[1] + 3 * b[2]),
            lambda a, b, dl, g: g - (dl[0] + b[2]),
            lambda a, b, dl, g: dl[0] + a[0] - g,
            lambda a, b, dl, g: 5 * g + a[1] + b[1] + b[2] + b[3] - (2 * dl[0] + 3 * a[0] + 4 * b[0]),
            lambda a, b, dl, g: 5 * g + 2 * b[1] + 2 * b[2] - (4 * dl[0] + a[0] + 3 * a[1] + 3 * b[0] + 3 * b[3]),
            lambda a, b, dl, g: dl[0] + b[1] - g,
            lambda a, b, dl, g: 5 * g + a[1] + b[0] + b[2] - (2 * dl[0] + 3 * a[0] + 4 * b[1] + 4 * b[3]),
        ),
        lambda a, b, dl, g: 5 * g - (3 * dl[0] + 2 * a[0] + a[1] + b[0] + b[1] + b[2] + b[3]),
    ),
    _case(
        "E8.10", 5, (1, 2), (1, 1, 1, 1), (3,),
        (
            lambda a, b, dl, g: 5 * g + a[0] + b[1] + b[2] - (2 * dl[0] + 3 * a[1] + 4 * b[0] + 4 * b[3]),
            lambda a, b, dl, g: dl[0] + b[1] - g,
            lambda a, b, dl, g: g - (dl[0] + a[1]),
            lambda a, b, dl, g: dl[0] + a[1] + b[3] - g,
            lambda a, b, dl, g: 5 * g + a[0] + b[0] + b[3] - (2 * dl[0] + 3 * a[1] + 4 * b[1] + 4 * b[2]),
            lambda a, b, dl, g: g - (dl[0] + b[2]),
            lambda a, b, dl, g: 5 * g + 2 * b[0] + 2 * b[2] - (4 * dl[0] + 3 * a[0] + a[1] + 3 * b[1] + 3 * b[3]),
        ),
        lambda a, b, dl, g: 5 * g - (3 * dl[0] + a[0] + 2 * a[1] + b[0] + b[1] + b[2] + b[3]),
    ),
    _case(
        "E8.11", 5, (2, 2), (1, 1, 1, 1), (2,),
        (
            lambda a, b, dl, g: 5 * g + 2 * b[1] - (dl[0] + a[0] + a[1] + 3 * b[0] + 3 * b[2] + 3 * b[3]),
            lambda a, b, dl, g: g - (a[0] + b[3]),
            lambda a, b, dl, g: a[1] + b[0] - g,
            lambda a, b, dl, g: g - (a[1] + b[1]),
            lambda a, b, dl, g: 5 * g + 2 * b[2] + 2 * b[3] - (dl[0] + a[0] + a[1] + 3 * b[0] + 3 * b[1]),
            lambda a, b, dl, g: a[0] + b[2] - g,
            lambda a, b, dl, g: 5 * g + b[0] + b[1] + b[3] - (3 * dl[0] + 3 * a[0] + 3 * a[1] + 4 * b[2]),
        ),
        lambda a, b, dl, g: 5 * g - (2 * dl[0] + 2 * a[0] + 2 * a[1] + b[0] + b[1] + b[2] + b[3]),
    ),
)

CATALOG: dict[str, tuple[CatalogCase, ...]] = {
    "D4": _D4_CASES,
    "E6": _E6_CASES,
    "E7": _E7_CASES,
    "E8": _E8_CASES,
}

# Canonical branch lengths of the weight roles (a, b, dl) per catalogued type.
_ROLE_LENGTHS = {
    "D4": (1, 1, 1),
    "E6": (2, 2, 1),
    "E7": (2, 3, 1),
    "E8": (2, 4, 1),
}


@dataclass(frozen=True)
class Witness:
    gendim: GenDim
    dimension: GVector
    steps: int


@dataclass(frozen=True)
class MembershipDecision:
    member: bool
    witnesses: tuple[Witness, ...]
    method: str
    failed_conditions: tuple[str, ...] = ()

    @property
    def witness_gendims(self) -> frozenset[GenDim]:
        return frozenset(w.gendim for w in self.witnesses)


def _role_permutation(g: StarGraph) -> tuple[int, int, int]:
    """Map weight roles (a, b, dl) to the user's branch positions, by branch length.

    E6's two length-2 branches are interchangeable: its condition systems are
    symmetric under swapping the first two roles.
    """
    name = classify(g).name
    if name not in _ROLE_LENGTHS:
        raise ValueError(f"no case catalog for graph type {name}")
    wanted = _ROLE_LENGTHS[name]
    available = list(g.branch_lengths)
    perm: list[int] = []
    for length in wanted:
        pos = next(
            i for i, ln in enumerate(available) if ln == length and i not in perm
        )
        perm.append(pos)
    return tuple(perm)  # type: ignore[return-value]


def _permute_gendim_from_roles(case: CatalogCase, perm: tuple[int, int, int]) -> GenDim:
    role_mults = (case.n_a, case.n_b, case.n_d)
    user_mults: list[tuple[int, ...]] = [(), (), ()]
    for role, pos in enumerate(perm):
        user_mults[pos] = role_mults[role]
    return GenDim(case.n0, user_mults[0], user_mults[1], user_mults[2])


def _integer_scaled(p: AlgebraParams) -> tuple[tuple[int, ...], ...]:
    """Clear denominators across all weights and gamma; membership is scale-invariant."""
    scale = lcm(
        p.gamma.denominator, *(w.denominator for fam in p.families for w in fam)
    )
    fams = tuple(tuple(int(w * scale) for w in fam) for fam in p.families)
    return (*fams, (int(p.gamma * scale),))


def decide_catalog(p: AlgebraParams, g: StarGraph) -> MembershipDecision:
    """Evaluate every transcribed case system exactly; witnesses are the satisfied cases."""
    if p.branch_lengths != g.branch_lengths:
        raise ValueError(
            f"params have branch lengths {p.branch_lengths}, graph has {g.branch_lengths}"
        )
    perm = _role_permutation(g)
    fams = _integer_scaled(p)
    a, b, dl = (fams[perm[0]], fams[perm[1]], fams[perm[2]])
    gamma = fams[3][0]
    step_by_dim = {e.dim: e.steps for e in orbit_entries(g)}
    witnesses = []
    failed: list[str] = []
    for case in CATALOG[classify(g).name]:
        ok, failed_ids = case.evaluate(a, b, dl, gamma)
        if ok:
            gendim = _permute_gendim_from_roles(case, perm)
            dim = generalized_to_dim(gendim, g)
            steps = step_by_dim[tuple(int(v) for v in dim.values)]
            witnesses.append(Witness(gendim, dim, steps))
        else:
            failed.extend(failed_ids)
    return MembershipDecision(
        member=bool(witnesses),
        witnesses=tuple(witnesses),
        method="catalog",
        failed_conditions=tuple(failed),
    )


def decide_generic(p: AlgebraParams, g: StarGraph) -> MembershipDecision:
    """Unwind the induced character against every enumerated non-degenerate dimension."""
    f = params_to_character(p, g)
    scale = lcm(*(v.denominator for v in f.values))
    f_ints = tuple(int(v * scale) for v in f.values)
    cap = positive_root_count(classify(g))
    witnesses = []
    for entry in orbit_entries(g):
        member, _, steps, _, _ = unwind_exact(g, entry.dim, f_ints, cap)
        if member:
            dim = g_vector(g, entry.dim)
            witnesses.append(Witness(dim_to_generalized(dim, g), dim, steps))
    return MembershipDecision(member=bool(witnesses), witnesses=tuple(witnesses), method="generic")


# -- randomized cross-validation


@dataclass(frozen=True)
class Disagreement:
    sample_index: int
    params: AlgebraParams
    generic: MembershipDecision
    catalog: MembershipDecision


@dataclass(frozen=True)
class CrossValidationReport:
    graph: tuple[int, int, int]
    samples: int
    seed: int
    member_count: int
    multi_witness_count: int
    disagreements: tuple[Disagreement, ...] = field(default_factory=tuple)

    @property
    def agree(self) -> bool:
        return not self.disagreements


def _sample_params(g: StarGraph, rng: random.Random, surface_case: CatalogCase | None,
                   perm: tuple[int, int, int]) -> AlgebraParams:
    """One random weight tuple; when surface_case is given, gamma solves its trace equality exactly."""
    den = rng.choice((1, 2, 3, 4))
    fams = []
    for length in g.branch_lengths:
        nums = rng.sample(range(1, 25), length)
        fams.append(tuple(Fraction(n, den) for n in sorted(nums, reverse=True)))
    if surface_case is None:
        gamma = Fraction(rng.randint(1, 48), den)
    else:
        gendim = _permute_gendim_from_roles(surface_case, perm)
        total = sum(
            (w * m for fam, mult in zip(fams, gendim.multiplicities) for w, m in zip(fam, mult)),
            Fraction(0),
        )
        gamma = total / gendim.n0
    return AlgebraParams(fams[0], fams[1], fams[2], gamma)


def cross_validate(g: StarGraph, samples: int, seed: int) -> CrossValidationReport:
    """Run both deciders on seeded random tuples and report every disagreement.

    Even-indexed samples are placed exactly on the trace-equality surface of a
    rotating catalog case (free sampling would hit the equality with
    probability zero, leaving the member branch untested).
    """
    perm = _role_permutation(g)
    cases = CATALOG[classify(g).name]
    disagreements = []
    member_count = 0
    multi_witness = 0
    for i in range(samples):
        rng = random.Random(seed * 1_000_003 + i)
        surface = cases[(i // 2) % len(cases)] if i % 2 == 0 else None
        p = _sample_params(g, rng, surface, perm)
        generic = decide_generic(p, g)
        catalog = decide_catalog(p, g)
        if generic.member != catalog.member or generic.witness_gendims != catalog.witness_gendims:
            disagreements.append(Disagreement(i, p, generic, catalog))
        if generic.member:
            member_count += 1
        if len(generic.witnesses) > 1:
            multi_witness += 1
    return CrossValidationReport(
        graph=g.branch_lengths,
        samples=samples,
        seed=seed,
        member_count=member_count,
        multi_witness_count=multi_witness,
        disagreements=tuple(disagreements),
    )
