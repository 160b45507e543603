"""Numerical construction and verification of weighted projection-family representations.

A representation in generalized dimension n is three families of orthogonal
projections (P_i), (Q_j), (S_d) on C^{n0} whose weighted sum is gamma * I.
Equivalently: three Hermitian matrices A, B, C with prescribed spectra
(weights with their multiplicities, padded by zeros) summing to gamma * I.
The solver alternates between the affine constraint and the product of unitary
spectral orbits; all exact reasoning (the trace obstruction) happens before any
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .param_bridge import AlgebraParams, GenDim, trace_gap
from .serialize import format_rational, matrix_from_json, matrix_to_json, parse_rational
from .star_graph import StarGraph, build_star


class RankExtractionError(ValueError):
    """A projection's range could not be read off its spectrum (defective input)."""


@dataclass(frozen=True, eq=False)
class StarRep:
    """Concrete Hermitian matrix families realizing the weighted sum relation."""

    params: AlgebraParams
    gendim: GenDim
    p_family: tuple[np.ndarray, ...]
    q_family: tuple[np.ndarray, ...]
    s_family: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.gendim.n0

    @property
    def families(self) -> tuple[tuple[np.ndarray, ...], ...]:
        return (self.p_family, self.q_family, self.s_family)

    def all_matrices(self) -> tuple[np.ndarray, ...]:
        return (*self.p_family, *self.q_family, *self.s_family)

    def weighted_sum(self) -> np.ndarray:
        total = np.zeros((self.dim, self.dim), dtype=complex)
        for weights, family in zip(self.params.families, self.families):
            for w, m in zip(weights, family):
                total += float(w) * m
        return total


@dataclass(frozen=True, eq=False)
class GraphRep:
    """Locally-scalar form: per-vertex spaces and one matrix per edge (adjoint pairs implied).

    operators maps (u, v) with u < v to the matrix H_v -> H_u; the reverse
    direction is its adjoint.  character_measured holds (mean eigenvalue,
    eigenvalue spread) of the vertex operator A_g at every vertex.
    """

    graph: StarGraph
    spaces: tuple[int, ...]
    operators: dict[tuple[int, int], np.ndarray]
    character_measured: tuple[tuple[float, float], ...]


def target_spectra(
    p: AlgebraParams, n: GenDim
) -> tuple[tuple[tuple[Fraction, int], ...], ...]:
    """Per family: each weight with its multiplicity plus the zero eigenvalue filling up to n0."""
    if p.branch_lengths != n.branch_lengths:
        raise ValueError(
            f"weights have branch lengths {p.branch_lengths}, multiplicities {n.branch_lengths}"
        )
    out = []
    for weights, mults in zip(p.families, n.multiplicities):
        zero_mult = n.n0 - sum(mults)
        if zero_mult <= 0:
            raise ValueError(
                f"family with multiplicities {mults} leaves no kernel in dimension {n.n0}"
            )
        out.append(tuple(zip(weights, mults)) + ((Fraction(0), zero_mult),))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class SolveResult:
    status: str  # "solved" | "infeasible" | "not_found"
    rep: StarRep | None = None
    residual: float | None = None
    iterations: int = 0
    restarts_used: int = 0
    winning_restart: int | None = None
    seed: int = 0
    message: str = ""

    @property
    def solved(self) -> bool:
        return self.status == "solved"


def _random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def _spectrum_vector(spectrum: tuple[tuple[Fraction, int], ...], n0: int) -> np.ndarray:
    vals = [float(v) for v, mult in spectrum for _ in range(mult)]
    assert len(vals) == n0
    return np.array(vals)  # already descending: weights decrease, zero last


def _project_to_orbit(x: np.ndarray, targets_asc: np.ndarray) -> np.ndarray:
    """Closest matrix (Frobenius) with the prescribed spectrum: keep eigenvectors, swap eigenvalues."""
    x = (x + x.conj().T) / 2
    _, vecs = np.linalg.eigh(x)  # ascending; pairing ascending targets preserves stable ties
    return (vecs * targets_asc) @ vecs.conj().T


def _extract_projections(
    x: np.ndarray, spectrum: tuple[tuple[Fraction, int], ...]
) -> tuple[np.ndarray, ...]:
    """Group eigenvectors of x by the target multiplicity blocks (descending, stable)."""
    w, vecs = np.linalg.eigh(x)
    order = np.argsort(-w, kind="stable")
    vecs = vecs[:, order]
    out = []
    pos = 0
    for value, mult in spectrum:
        if value != 0:
            block = vecs[:, pos : pos + mult]
            proj = block @ block.conj().T
            out.append((proj + proj.conj().T) / 2)
        pos += mult
    return tuple(out)


def solve_representation(
    p: AlgebraParams,
    n: GenDim,
    seed: int = 0,
    tol: float = 1e-10,
    max_restarts: int = 32,
    max_iterations: int = 100_000,
) -> SolveResult:
    """Alternating projections between the affine constraint A+B+C = gamma*I and the spectral orbits.

    The exact trace identity is checked first; its violation certifies
    infeasibility with no floating-point work.  Restart exhaustion is reported
    as "not_found" and is explicitly inconclusive.
    """
    spectra = target_spectra(p, n)
    gap = trace_gap(p, n)
    if gap != 0:
        return SolveResult(
            status="infeasible",
            seed=seed,
            message=f"trace identity fails exactly: weighted multiplicity sum - gamma*n0 = {gap}",
        )
    n0 = n.n0
    gamma_eye = float(p.gamma) * np.eye(n0)
    desc = [_spectrum_vector(s, n0) for s in spectra]
    asc = [v[::-1].copy() for v in desc]

    total_iterations = 0
    stall_window, stall_eps = 100, 1e-14
    for restart in range(max_restarts):
        rng = np.random.default_rng([seed & 0xFFFFFFFF, restart])
        xs = [u @ np.diag(d) @ u.conj().T for d, u in ((d, _random_unitary(rng, n0)) for d in desc)]
        history: list[float] = []
        for _ in range(max_iterations):
            total_iterations += 1
            excess = (xs[0] + xs[1] + xs[2] - gamma_eye) / 3
            xs = [_project_to_orbit(x - excess, a) for x, a in zip(xs, asc)]
            residual = float(np.linalg.norm(xs[0] + xs[1] + xs[2] - gamma_eye))
            if residual < tol:
                fams = [_extract_projections(x, s) for x, s in zip(xs, spectra)]
                rep = StarRep(p, n, fams[0], fams[1], fams[2])
                return SolveResult(
                    status="solved",
                    rep=rep,
                    residual=residual,
                    iterations=total_iterations,
                    restarts_used=restart + 1,
                    winning_restart=restart,
                    seed=seed,
                )
            history.append(residual)
            if len(history) > stall_window:
                if history[-stall_window - 1] - residual < stall_eps:
                    break
    return SolveResult(
        status="not_found",
        iterations=total_iterations,
        restarts_used=max_restarts,
        seed=seed,
        message="restart budget exhausted; inconclusive (not a certificate of non-existence)",
    )


@dataclass(frozen=True, eq=False)
class VerifyReport:
    hermiticity: float
    idempotence: float
    orthogonality: float
    sum_residual: float
    ranks: tuple[tuple[int, ...], ...]
    rank_error: int
    nondegeneracy_margins: tuple[int, ...]
    passed: bool

    def deviations(self) -> dict[str, float]:
        return {
            "hermiticity": self.hermiticity,
            "idempotence": self.idempotence,
            "orthogonality": self.orthogonality,
            "sum_residual": self.sum_residual,
            "rank_error": float(self.rank_error),
            "nondegeneracy_violation": float(max(0, 1 - min(self.nondegeneracy_margins))),
        }


def _measured_rank(m: np.ndarray) -> int:
    return int(np.sum(np.linalg.eigvalsh(m) > 0.5))


def verify(r: StarRep, tol: float = 1e-8) -> VerifyReport:
    """Report max deviations from the defining relations; pass iff all are below tol."""
    herm = max(float(np.linalg.norm(m - m.conj().T)) for m in r.all_matrices())
    idem = max(float(np.linalg.norm(m @ m - m)) for m in r.all_matrices())
    orth = 0.0
    for family in r.families:
        for i in range(len(family)):
            for j in range(i + 1, len(family)):
                orth = max(orth, float(np.linalg.norm(family[i] @ family[j])))
    sum_residual = float(np.linalg.norm(r.weighted_sum() - float(r.params.gamma) * np.eye(r.dim)))
    ranks = tuple(tuple(_measured_rank(m) for m in family) for family in r.families)
    rank_error = max(
        abs(measured - expected)
        for fam_ranks, fam_mults in zip(ranks, r.gendim.multiplicities)
        for measured, expected in zip(fam_ranks, fam_mults)
    )
    margins = tuple(r.dim - sum(fam_ranks) for fam_ranks in ranks)
    report = VerifyReport(
        hermiticity=herm,
        idempotence=idem,
        orthogonality=orth,
        sum_residual=sum_residual,
        ranks=ranks,
        rank_error=rank_error,
        nondegeneracy_margins=margins,
        passed=False,
    )
    passed = all(v < tol for v in report.deviations().values())
    return VerifyReport(**{**report.__dict__, "passed": passed})


def _commutator_system(mats1, mats2, n: int) -> np.ndarray:
    """Rows of the linear system X M1 = M2 X over all generator pairs, for row-major vec(X)."""
    eye = np.eye(n)
    blocks = [np.kron(eye, m1.T) - np.kron(m2, eye) for m1, m2 in zip(mats1, mats2)]
    return np.vstack(blocks)


def _null_space(k: np.ndarray, n: int, tol: float) -> np.ndarray:
    """Orthonormal basis (rows) of the numerical null space of k acting on C^(n*n)."""
    _, sv, vh = np.linalg.svd(k)
    smax = sv[0] if len(sv) else 0.0
    if smax == 0.0:
        return np.eye(n * n, dtype=complex)
    rank = int(np.sum(sv > tol * smax))
    return vh[rank:]


def commutant_dimension(r: StarRep, tol: float = 1e-8) -> int:
    """Dimension of {X : XM = MX for every family matrix M}; 1 iff irreducible."""
    mats = r.all_matrices()
    k = _commutator_system(mats, mats, r.dim)
    return _null_space(k, r.dim, tol).shape[0]


def intertwiner_equivalence(r1: StarRep, r2: StarRep, tol: float = 1e-8) -> bool:
    """Whether an invertible X with X M1 = M2 X over all corresponding generators exists.

    For two irreducible representations this certifies unitary equivalence up
    to a scalar.
    """
    if r1.params != r2.params or r1.gendim != r2.gendim:
        raise ValueError("representations must share weights and generalized dimension")
    n = r1.dim
    basis = _null_space(_commutator_system(r1.all_matrices(), r2.all_matrices(), n), n, tol)
    if basis.shape[0] == 0:
        return False
    candidates = [vec.reshape(n, n) for vec in basis]
    if basis.shape[0] > 1:
        rng = np.random.default_rng(1)
        for _ in range(4):
            coeffs = rng.standard_normal(basis.shape[0]) + 1j * rng.standard_normal(basis.shape[0])
            candidates.append((coeffs @ basis).reshape(n, n))
    for x in candidates:
        sv = np.linalg.svd(x, compute_uv=False)
        if sv[0] > 0 and sv[-1] >= tol * sv[0]:
            return True
    return False


# -- the locally-scalar graph form


def _branch_windows(k: int) -> list[tuple[int, ...]]:
    """Component windows per branch position (1 = far end ... k = head).

    The head carries all k components; moving outward drops one component per
    step, alternately from the small-index side and the large-index side.
    """
    win = list(range(1, k + 1))
    by_pos = {k: tuple(win)}
    drop_left = True
    for t in range(k - 1, 0, -1):
        win = win[1:] if drop_left else win[:-1]
        by_pos[t] = tuple(win)
        drop_left = not drop_left
    return [by_pos[t] for t in range(1, k + 1)]


def _range_isometry(proj: np.ndarray, rank: int) -> np.ndarray:
    """Orthonormal column basis of the range of an (approximate) orthoprojection."""
    w, vecs = np.linalg.eigh(proj)
    cols = vecs[:, w > 0.5]
    if cols.shape[1] != rank:
        raise RankExtractionError(
            f"projection has {cols.shape[1]} eigenvalues above 1/2, expected rank {rank}"
        )
    return cols


def star_to_graph(r: StarRep) -> GraphRep:
    """Build the locally-scalar graph form: weighted range isometries at the center edges,
    square-root difference blocks along the branches."""
    lengths = r.params.branch_lengths
    graph = build_star(*lengths)
    n0 = r.dim
    spaces = [n0] + [0] * (graph.vertex_count - 1)
    operators: dict[tuple[int, int], np.ndarray] = {}
    for branch, weights, mults, family in zip(
        graph.branches, r.params.families, r.gendim.multiplicities, r.families
    ):
        k = len(branch)
        isometries = {
            i: _range_isometry(proj, mult)
            for i, (proj, mult) in enumerate(zip(family, mults), start=1)
        }
        windows = _branch_windows(k)
        dims = {i: mults[i - 1] for i in range(1, k + 1)}
        for t in range(1, k + 1):
            spaces[branch[t - 1]] = sum(dims[i] for i in windows[t - 1])
        head = branch[-1]
        operators[(0, head)] = np.hstack(
            [np.sqrt(float(weights[i - 1])) * isometries[i] for i in windows[k - 1]]
        )
        for t in range(k, 1, -1):
            big, small = windows[t - 1], windows[t - 2]
            dropped = next(i for i in big if i not in small)
            mat = np.zeros((sum(dims[i] for i in small), sum(dims[i] for i in big)), dtype=complex)
            row = 0
            rows = {}
            for i in small:
                rows[i] = row
                row += dims[i]
            col = 0
            for i in big:
                if i in small:
                    scale = np.sqrt(abs(float(weights[dropped - 1]) - float(weights[i - 1])))
                    mat[rows[i] : rows[i] + dims[i], col : col + dims[i]] = scale * np.eye(dims[i])
                col += dims[i]
            operators[(branch[t - 2], branch[t - 1])] = mat
    gr = GraphRep(graph, tuple(spaces), operators, character_measured=())
    measured = measure_local_scalars(gr)
    return GraphRep(graph, tuple(spaces), operators, character_measured=measured)


def measure_local_scalars(gr: GraphRep) -> tuple[tuple[float, float], ...]:
    """Per vertex: (mean eigenvalue, spread) of A_g = sum of incoming edge compositions.

    A locally-scalar representation has every spread near zero; vertices with a
    zero-dimensional space report (0, 0).
    """
    sums = {
        v: np.zeros((d, d), dtype=complex) for v, d in enumerate(gr.spaces)
    }
    for (u, v), mat in gr.operators.items():
        sums[u] += mat @ mat.conj().T
        sums[v] += mat.conj().T @ mat
    out = []
    for v in range(gr.graph.vertex_count):
        if gr.spaces[v] == 0:
            out.append((0.0, 0.0))
            continue
        w = np.linalg.eigvalsh(sums[v])
        out.append((float(np.mean(w)), float(w[-1] - w[0])))
    return tuple(out)


# -- JSON wire format


def starrep_to_json_obj(r: StarRep) -> dict:
    return {
        "gamma": format_rational(r.params.gamma),
        "alpha": [format_rational(w) for w in r.params.alpha],
        "beta": [format_rational(w) for w in r.params.beta],
        "delta": [format_rational(w) for w in r.params.delta],
        "gendim": {
            "n0": r.gendim.n0,
            "n_p": list(r.gendim.n_p),
            "n_q": list(r.gendim.n_q),
            "n_s": list(r.gendim.n_s),
        },
        "families": {
            "P": [matrix_to_json(m) for m in r.p_family],
            "Q": [matrix_to_json(m) for m in r.q_family],
            "S": [matrix_to_json(m) for m in r.s_family],
        },
    }


def starrep_from_json_obj(obj: dict) -> StarRep:
    params = AlgebraParams(
        tuple(parse_rational(w) for w in obj["alpha"]),
        tuple(parse_rational(w) for w in obj["beta"]),
        tuple(parse_rational(w) for w in obj["delta"]),
        parse_rational(obj["gamma"]),
    )
    gd = obj["gendim"]
    gendim = GenDim(int(gd["n0"]), tuple(gd["n_p"]), tuple(gd["n_q"]), tuple(gd["n_s"]))
    n0 = gendim.n0
    fams = obj["families"]
    return StarRep(
        params,
        gendim,
        tuple(matrix_from_json(m, n0) for m in fams["P"]),
        tuple(matrix_from_json(m, n0) for m in fams["Q"]),
        tuple(matrix_from_json(m, n0) for m in fams["S"]),
    )
