"""Exact reflections and Coxeter transforms on vertex vectors, orbit enumeration, and the unwinding existence test.

All arithmetic is exact (ints / fractions); membership questions reduce to strict
inequalities plus one equality, so floating point is never used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .star_graph import Parity, StarGraph, classify, positive_root_count

Coords = tuple  # tuple of ints or Fractions, one entry per vertex


class NonDynkinError(ValueError):
    """Raised when an operation requires a finite Dynkin star graph."""


class OrbitOverflowError(RuntimeError):
    """An alternating orbit exceeded the positive-root-count cap (internal invariant violation)."""


@dataclass(frozen=True)
class GVector:
    """An exact rational value per vertex, in canonical order (center; branch one far-to-head; two; three)."""

    graph: StarGraph
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.graph.vertex_count:
            raise ValueError(
                f"expected {self.graph.vertex_count} coordinates, got {len(self.values)}"
            )
        if not all(isinstance(v, Fraction) for v in self.values):
            object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def __getitem__(self, v: int) -> Fraction:
        return self.values[v]

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    @property
    def is_positive(self) -> bool:
        """Nonzero with no negative coordinate."""
        return not self.is_zero and all(v >= 0 for v in self.values)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, x in enumerate(self.values) if x != 0)

    def strictly_positive_on(self, vertices: tuple[int, ...]) -> bool:
        return all(self.values[v] > 0 for v in vertices)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def is_simple(self) -> tuple[bool, int | None]:
        """Whether this is a unit vector e_v; returns (flag, v)."""
        support = self.support
        if len(support) == 1 and self.values[support[0]] == 1:
            return True, support[0]
        return False, None


def g_vector(graph: StarGraph, values) -> GVector:
    return GVector(graph, tuple(Fraction(v) for v in values))


def simple_vector(graph: StarGraph, v: int) -> GVector:
    return g_vector(graph, tuple(1 if u == v else 0 for u in range(graph.vertex_count)))


# -- core updates on raw coordinate tuples (shared by the exact int fast path and the public API)


def _reflect_at(values: Coords, neighbors, v: int) -> Coords:
    out = list(values)
    out[v] = -values[v] + sum(values[u] for u in neighbors[v])
    return tuple(out)


def _multi_reflect(values: Coords, neighbors, vertices) -> Coords:
    # Simultaneous reflection: sums read the snapshot. The vertex sets used here
    # are single-parity, hence pairwise non-adjacent, so this equals any
    # sequential composition order.
    out = list(values)
    for v in vertices:
        out[v] = -values[v] + sum(values[u] for u in neighbors[v])
    return tuple(out)


def _char_reflect(f: Coords, d: Coords, neighbors, parity_vertices) -> Coords:
    verts = tuple(v for v in parity_vertices if d[v] != 0)
    return _multi_reflect(f, neighbors, verts)


def reflect(v: int, x: GVector) -> GVector:
    """Replace the coordinate at v by (neighbor sum - coordinate); all others unchanged."""
    if not 0 <= v < x.graph.vertex_count:
        raise ValueError(f"unknown vertex {v}")
    return GVector(x.graph, _reflect_at(x.values, x.graph.neighbors, v))


def coxeter_map(p: Parity, d: GVector) -> GVector:
    """Simultaneous reflection at every vertex of parity p."""
    verts = d.graph.vertices_of_parity(p)
    return GVector(d.graph, _multi_reflect(d.values, d.graph.neighbors, verts))


def char_map(p: Parity, d: GVector, f: GVector) -> GVector:
    """Reflect f at the parity-p vertices inside the support of d; carry f unchanged elsewhere."""
    if f.graph != d.graph:
        raise ValueError("character and dimension live on different graphs")
    if not (d.is_integral() and all(v >= 0 for v in d.values)):
        raise ValueError("dimension vector must be a non-negative integer vector")
    verts = d.graph.vertices_of_parity(p)
    return GVector(f.graph, _char_reflect(f.values, d.values, f.graph.neighbors, verts))


# -- orbit enumeration


@dataclass(frozen=True)
class OrbitEntry:
    """A non-degenerate dimension with the provenance of its first discovery."""

    dim: tuple[int, ...]
    start_vertex: int
    first_parity: Parity
    steps: int


def _is_nondegenerate_dim(dim: tuple[int, ...], graph: StarGraph) -> bool:
    # Strictly increasing along each branch toward the center, branch head < center value.
    d0 = dim[0]
    if d0 <= 0:
        return False
    for branch in graph.branches:
        prev = 0
        for v in branch:
            if dim[v] <= prev:
                return False
            prev = dim[v]
        if prev >= d0:
            return False
    return True


@lru_cache(maxsize=None)
def _orbit_entries(graph: StarGraph) -> tuple[OrbitEntry, ...]:
    c = classify(graph)
    if not c.is_finite:
        raise NonDynkinError(f"orbit enumeration requires a finite Dynkin star, got {c.name}")
    cap = positive_root_count(c)
    neighbors = graph.neighbors
    parity_sets = {p: graph.vertices_of_parity(p) for p in Parity}
    found: dict[tuple[int, ...], OrbitEntry] = {}
    for start in range(graph.vertex_count):
        base = tuple(1 if u == start else 0 for u in range(graph.vertex_count))
        for first in (Parity.EVEN, Parity.ODD):
            cur = base
            seen = {cur}
            p = first
            for step in range(1, cap + 2):
                cur = _multi_reflect(cur, neighbors, parity_sets[p])
                if any(x < 0 for x in cur) or cur in seen:
                    break
                if step > cap:
                    # Finiteness of the orbit is a theorem for Dynkin graphs;
                    # the cap turns it into a runtime check.
                    raise OrbitOverflowError(
                        f"orbit from vertex {start} exceeded {cap} steps on {c.name}"
                    )
                seen.add(cur)
                if _is_nondegenerate_dim(cur, graph) and cur not in found:
                    found[cur] = OrbitEntry(cur, start, first, step)
                p = p.flipped()
    return tuple(sorted(found.values(), key=lambda e: e.dim))


def orbit_entries(g: StarGraph) -> tuple[OrbitEntry, ...]:
    """Non-degenerate dimensions of g with discovery provenance, in canonical order."""
    return _orbit_entries(g)


@lru_cache(maxsize=None)
def enumerate_nondegenerate_dims(g: StarGraph) -> frozenset[GVector]:
    """All dimensions of non-degenerate irreducible locally-scalar representations of g."""
    return frozenset(g_vector(g, e.dim) for e in orbit_entries(g))


def orbit_parity_path(entry: OrbitEntry) -> tuple[Parity, ...]:
    """The alternating parities applied, in order, to reach entry.dim from its start vertex."""
    path = []
    p = entry.first_parity
    for _ in range(entry.steps):
        path.append(p)
        p = p.flipped()
    return tuple(path)


# -- unwinding


@dataclass(frozen=True)
class UnwindReport:
    member: bool
    root_vertex: int | None = None
    steps: int | None = None
    final_character: GVector | None = None
    first_parity: Parity | None = None
    failure_reason: str | None = None


def _attempt_unwind(
    d: tuple[int, ...],
    f: tuple[int, ...],
    graph: StarGraph,
    first: Parity,
    cap: int,
):
    """One alternating descent to a simple vector.

    A step of parity q demands f > 0 on the parity-q part of supp(d), reflects f
    at the opposite-parity part of supp(d), then reflects d at all parity-q
    vertices.  Returns (root, steps, final f) or (None, reason, None).
    """
    neighbors = graph.neighbors
    parity_sets = {p: graph.vertices_of_parity(p) for p in Parity}
    q = first
    for step in range(1, cap + 1):
        support_q = tuple(v for v in parity_sets[q] if d[v] != 0)
        if any(f[v] <= 0 for v in support_q):
            return None, f"character not positive on the {q.value} part of the support", None
        f = _char_reflect(f, d, neighbors, parity_sets[q.flipped()])
        d = _multi_reflect(d, neighbors, parity_sets[q])
        if any(x < 0 for x in d):
            return None, "dimension left the positive cone", None
        total = sum(d)
        if total == 1:
            root = next(v for v, x in enumerate(d) if x == 1)
            return root, step, f
        q = q.flipped()
    return None, f"no simple vector within {cap} steps", None


def unwind_exact(graph: StarGraph, d_ints: tuple[int, ...], f_vals: Coords, cap: int):
    """Both-parity unwinding on raw coordinate tuples (exact, no validation).

    Returns (member, root, steps, final character tuple, first parity) with the
    last four None on failure except that the final tuple carries the reasons.
    """
    reasons = []
    for first in (Parity.ODD, Parity.EVEN):
        root, steps, final = _attempt_unwind(d_ints, f_vals, graph, first, cap)
        if root is None:
            reasons.append(f"{first.value}-first: {steps}")
            continue
        if final[root] == 0 and all(x > 0 for v, x in enumerate(final) if v != root):
            return True, root, steps, final, first
        reasons.append(
            f"{first.value}-first: terminal character fails the sign pattern at e_{root}"
        )
    return False, None, None, "; ".join(reasons), None


def unwind(d: GVector, f: GVector) -> UnwindReport:
    """Alternating descent of (d, f) to a simple vector e_v; membership holds iff the
    terminal character vanishes at v and is strictly positive everywhere else.

    Both starting parities are attempted; at most one can succeed for a valid d.
    """
    graph = d.graph
    if d not in enumerate_nondegenerate_dims(graph):
        raise ValueError("d is not a non-degenerate irreducible dimension of this graph")
    if f.graph != graph:
        raise ValueError("character and dimension live on different graphs")
    if not f.strictly_positive_on(d.support):
        raise ValueError("character must be strictly positive on the support of d")

    cap = positive_root_count(classify(graph))
    d_ints = tuple(int(v) for v in d.values)
    scale = lcm(*(v.denominator for v in f.values))
    f_ints = tuple(int(v * scale) for v in f.values)

    member, root, steps, final, first = unwind_exact(graph, d_ints, f_ints, cap)
    if not member:
        return UnwindReport(member=False, failure_reason=final)
    return UnwindReport(
        member=True,
        root_vertex=root,
        steps=steps,
        final_character=g_vector(graph, tuple(Fraction(x, scale) for x in final)),
        first_parity=first,
    )
