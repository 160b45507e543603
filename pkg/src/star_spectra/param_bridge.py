"""Exact translation between algebra data (weights, multiplicities) and graph data (characters, dimensions).

Each branch carries one weight family; all formulas are branch-local, so the
three branches share a single implementation.  Branch heads sit next to the
center, so within a branch tuple the far-end vertex comes first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coxeter import GVector, g_vector
from .star_graph import StarGraph


class ShapeMismatchError(ValueError):
    """Branch lengths of the data and the graph disagree."""


class DegenerateCharacterError(ValueError):
    """The vector is not the character of a non-degenerate representation."""


class DegenerateDimensionError(ValueError):
    """The vector is not a non-degenerate dimension."""


@dataclass(frozen=True)
class AlgebraParams:
    """Weight data (alpha, beta, delta, gamma): three strictly decreasing positive tuples and a positive scalar."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    delta: tuple[Fraction, ...]
    gamma: Fraction

    def __post_init__(self) -> None:
        for name, fam in (("alpha", self.alpha), ("beta", self.beta), ("delta", self.delta)):
            if not fam:
                raise ValueError(f"{name} must be nonempty")
            if any(v <= 0 for v in fam):
                raise ValueError(f"{name} must be strictly positive, got {fam}")
            if any(x <= y for x, y in zip(fam, fam[1:])):
                raise ValueError(f"{name} must be strictly decreasing, got {fam}")
        if self.gamma <= 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")

    @property
    def branch_lengths(self) -> tuple[int, int, int]:
        return (len(self.alpha), len(self.beta), len(self.delta))

    @property
    def families(self) -> tuple[tuple[Fraction, ...], ...]:
        return (self.alpha, self.beta, self.delta)


def algebra_params(alpha, beta, delta, gamma) -> AlgebraParams:
    """Build AlgebraParams, coercing ints/strings to exact fractions."""
    as_fracs = lambda xs: tuple(Fraction(x) for x in xs)
    return AlgebraParams(as_fracs(alpha), as_fracs(beta), as_fracs(delta), Fraction(gamma))


@dataclass(frozen=True)
class GenDim:
    """Generalized dimension: total space size n0 and one multiplicity per weight.

    Multiplicity tuples follow the weight order (n_p[0] belongs to the largest
    alpha weight).  Non-degeneracy (each family summing below n0) is guaranteed
    for outputs of dim_to_generalized but not imposed at construction, so that
    degenerate requests can be formed and rejected downstream.
    """

    n0: int
    n_p: tuple[int, ...]
    n_q: tuple[int, ...]
    n_s: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n0 < 1:
            raise ValueError(f"n0 must be a positive integer, got {self.n0}")
        for name, fam in (("n_p", self.n_p), ("n_q", self.n_q), ("n_s", self.n_s)):
            if not fam or any(not isinstance(n, int) or n < 1 for n in fam):
                raise ValueError(f"{name} must be a nonempty tuple of positive integers, got {fam}")

    @property
    def branch_lengths(self) -> tuple[int, int, int]:
        return (len(self.n_p), len(self.n_q), len(self.n_s))

    @property
    def multiplicities(self) -> tuple[tuple[int, ...], ...]:
        return (self.n_p, self.n_q, self.n_s)

    @property
    def is_nondegenerate(self) -> bool:
        return all(sum(fam) < self.n0 for fam in self.multiplicities)

    def flat(self) -> tuple[int, ...]:
        return (self.n0, *self.n_p, *self.n_q, *self.n_s)


def _outer_in_order(k: int) -> list[int]:
    """Assignment order 1, k, 2, k-1, 3, ... as 1-based weight indices."""
    lo, hi = 1, k
    out = []
    take_lo = True
    while lo <= hi:
        if take_lo:
            out.append(lo)
            lo += 1
        else:
            out.append(hi)
            hi -= 1
        take_lo = not take_lo
    return out


def _branch_character(weights: tuple[Fraction, ...]) -> list[Fraction]:
    """Character values over one branch, far end first, from its weight tuple.

    Walking down from the head with offset j: the head carries the largest
    weight; then the values alternate differences w_t - w_{k-t+1} (j = 2t-1)
    and w_{t+1} - w_{k-t+1} (j = 2t).
    """
    k = len(weights)
    out: list[Fraction] = [Fraction(0)] * k
    out[k - 1] = weights[0]
    for j in range(1, k):
        if j % 2 == 1:
            t = (j + 1) // 2
            val = weights[t - 1] - weights[k - t]
        else:
            t = j // 2
            val = weights[t] - weights[k - t]
        out[k - 1 - j] = val
    return out


def params_to_character(p: AlgebraParams, g: StarGraph) -> GVector:
    """Character of the locally-scalar representation induced by the weights; strictly positive."""
    if p.branch_lengths != g.branch_lengths:
        raise ShapeMismatchError(
            f"params have branch lengths {p.branch_lengths}, graph has {g.branch_lengths}"
        )
    values: list[Fraction] = [p.gamma] * g.vertex_count
    for branch, fam in zip(g.branches, p.families):
        for v, val in zip(branch, _branch_character(fam)):
            values[v] = val
    return g_vector(g, values)


def _branch_weights(xs: list[Fraction]) -> tuple[Fraction, ...]:
    """Invert _branch_character: alternating partial sums from the head, assigned outer-in."""
    k = len(xs)
    rev = list(reversed(xs))  # head first
    weights: list[Fraction] = [Fraction(0)] * k
    total = Fraction(0)
    sign = 1
    for j, idx in enumerate(_outer_in_order(k)):
        total += sign * rev[j]
        sign = -sign
        weights[idx - 1] = total
    return tuple(weights)


def character_to_params(f: GVector, g: StarGraph) -> AlgebraParams:
    """Recover the weight data from a strictly positive character; exact inverse of params_to_character."""
    if f.graph != g:
        raise ShapeMismatchError("character belongs to a different graph")
    if not all(v > 0 for v in f.values):
        raise DegenerateCharacterError("character must be strictly positive everywhere")
    fams = []
    for branch in g.branches:
        weights = _branch_weights([f[v] for v in branch])
        if any(w <= 0 for w in weights) or any(x <= y for x, y in zip(weights, weights[1:])):
            raise DegenerateCharacterError(
                f"recovered weights {weights} are not strictly decreasing positive"
            )
        fams.append(weights)
    return AlgebraParams(fams[0], fams[1], fams[2], f[0])


def dim_to_generalized(d: GVector, g: StarGraph) -> GenDim:
    """Multiplicities from a non-degenerate dimension: successive head-down differences, assigned outer-in."""
    if d.graph != g:
        raise ShapeMismatchError("dimension belongs to a different graph")
    if not d.is_integral():
        raise DegenerateDimensionError("dimension must be an integer vector")
    fams = []
    for branch in g.branches:
        xs = [int(d[v]) for v in branch] + [int(d[0])]  # far ... head, center
        if xs[0] <= 0 or any(x >= y for x, y in zip(xs, xs[1:])):
            raise DegenerateDimensionError(
                "dimension must increase strictly along each branch and stay below the center value"
            )
        k = len(branch)
        diffs = [xs[k - 1 - j] - (xs[k - 2 - j] if j < k - 1 else 0) for j in range(k)]
        mult = [0] * k
        for j, idx in enumerate(_outer_in_order(k)):
            mult[idx - 1] = diffs[j]
        fams.append(tuple(mult))
    return GenDim(int(d[0]), fams[0], fams[1], fams[2])


def generalized_to_dim(n: GenDim, g: StarGraph) -> GVector:
    """Dimension vector from multiplicities via the branch partial sums; inverse of dim_to_generalized."""
    if n.branch_lengths != g.branch_lengths:
        raise ShapeMismatchError(
            f"generalized dimension has branch lengths {n.branch_lengths}, graph has {g.branch_lengths}"
        )
    values = [Fraction(n.n0)] * g.vertex_count
    for branch, mult in zip(g.branches, n.multiplicities):
        k = len(branch)
        diffs = [mult[idx - 1] for idx in _outer_in_order(k)]
        level = sum(diffs)
        for j in range(k):  # head down to the far end
            values[branch[k - 1 - j]] = Fraction(level)
            level -= diffs[j]
    return g_vector(g, values)


def weighted_multiplicity_sum(p: AlgebraParams, n: GenDim) -> Fraction:
    """Sum of weight * multiplicity over all three families."""
    if p.branch_lengths != n.branch_lengths:
        raise ShapeMismatchError("weights and multiplicities have different branch lengths")
    return sum(
        (w * m for fam, mult in zip(p.families, n.multiplicities) for w, m in zip(fam, mult)),
        Fraction(0),
    )


def trace_gap(p: AlgebraParams, n: GenDim) -> Fraction:
    """Exact defect of the trace identity: weighted multiplicity sum minus gamma * n0."""
    return weighted_multiplicity_sum(p, n) - p.gamma * n.n0
