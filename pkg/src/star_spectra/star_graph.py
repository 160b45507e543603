"""Star-shaped graphs: three branches joined at a center, with bipartition and Lie-type classification."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property


class Parity(Enum):
    ODD = "odd"
    EVEN = "even"

    def flipped(self) -> "Parity":
        return Parity.EVEN if self is Parity.ODD else Parity.ODD


@dataclass(frozen=True)
class StarGraph:
    """A tree with one degree-3 center and three simple-path branches.

    Vertices are indexed 0..k+l+m: 0 is the center; branch one is 1..k with
    vertex k adjacent to the center and vertex 1 the far end; branch two is
    k+1..k+l (head k+l); branch three is k+l+1..k+l+m (head k+l+m).
    """

    branch_lengths: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.branch_lengths) != 3 or any(
            not isinstance(n, int) or n < 1 for n in self.branch_lengths
        ):
            raise ValueError(f"branch lengths must be three positive integers, got {self.branch_lengths}")

    @property
    def vertex_count(self) -> int:
        return 1 + sum(self.branch_lengths)

    @cached_property
    def branches(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        """Vertex indices per branch, ordered far end first, head (center-adjacent) last."""
        k, l, m = self.branch_lengths
        return (
            tuple(range(1, k + 1)),
            tuple(range(k + 1, k + l + 1)),
            tuple(range(k + l + 1, k + l + m + 1)),
        )

    @cached_property
    def heads(self) -> tuple[int, int, int]:
        return tuple(branch[-1] for branch in self.branches)  # type: ignore[return-value]

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for branch in self.branches:
            chain = list(branch) + [0]  # far end ... head, center
            for a, b in zip(chain, chain[1:]):
                adj[a].append(b)
                adj[b].append(a)
        return tuple(tuple(sorted(ns)) for ns in adj)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.vertex_count) for v in self.neighbors[u] if u < v
        )

    @cached_property
    def parity(self) -> tuple[Parity, ...]:
        """Bipartition by distance from the center; the center is odd."""
        out = [Parity.ODD] * self.vertex_count
        for branch in self.branches:
            for dist, v in enumerate(reversed(branch), start=1):
                out[v] = Parity.ODD if dist % 2 == 0 else Parity.EVEN
        return tuple(out)

    @cached_property
    def _parity_vertices(self) -> dict[Parity, tuple[int, ...]]:
        return {
            p: tuple(v for v in range(self.vertex_count) if self.parity[v] is p)
            for p in Parity
        }

    def vertices_of_parity(self, p: Parity) -> tuple[int, ...]:
        return self._parity_vertices[p]


@dataclass(frozen=True)
class DynkinClass:
    """Trichotomy tag of a star graph; rank and Coxeter number are set only for finite types."""

    name: str
    rank: int | None = None
    coxeter_number: int | None = None

    @property
    def is_finite(self) -> bool:
        return self.coxeter_number is not None


def build_star(k: int, l: int, m: int) -> StarGraph:
    """Canonical star graph with branch lengths (k, l, m)."""
    return StarGraph((k, l, m))


def classify(g: StarGraph) -> DynkinClass:
    """Classify by the harmonic trichotomy on arm lengths (branch length + 1 each)."""
    p, q, r = sorted(n + 1 for n in g.branch_lengths)
    s = Fraction(1, p) + Fraction(1, q) + Fraction(1, r)
    if s > 1:
        if (p, q) == (2, 2):
            n = r + 2
            return DynkinClass(f"D{n}", rank=n, coxeter_number=2 * (n - 1))
        if (p, q, r) == (2, 3, 3):
            return DynkinClass("E6", rank=6, coxeter_number=12)
        if (p, q, r) == (2, 3, 4):
            return DynkinClass("E7", rank=7, coxeter_number=18)
        if (p, q, r) == (2, 3, 5):
            return DynkinClass("E8", rank=8, coxeter_number=30)
        raise AssertionError(f"unreachable finite arm triple {(p, q, r)}")
    if s == 1:
        name = {(3, 3, 3): "AffineE6", (2, 4, 4): "AffineE7", (2, 3, 6): "AffineE8"}[(p, q, r)]
        return DynkinClass(name)
    return DynkinClass("Indefinite")


def positive_root_count(c: DynkinClass) -> int:
    """Number of positive roots of a finite type: rank * coxeter_number / 2."""
    if not c.is_finite:
        raise ValueError(f"{c.name} is not a finite Dynkin type")
    assert c.rank is not None and c.coxeter_number is not None
    return c.rank * c.coxeter_number // 2
