"""Construct one admissible weight tuple per catalog case.

Strategy: pick the case's dimension vector, walk its Coxeter path backwards
from the terminal simple vector carrying a strictly positive character, and
read the weights off the resulting character.  Positivity of the terminal
values makes every strict inequality of the case hold; the trace equality
holds automatically.  Instances are scaled so that every strict margin is at
least 1/10 (all conditions are homogeneous, so scaling is harmless).

Run from the repository root:  python scripts/find_admissible_instances.py
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from star_spectra.coxeter import char_map, coxeter_map, g_vector, orbit_entries, orbit_parity_path, simple_vector
from star_spectra.membership import CATALOG, _ROLE_LENGTHS, decide_catalog, decide_generic
from star_spectra.param_bridge import (
    DegenerateCharacterError,
    GenDim,
    character_to_params,
    generalized_to_dim,
)
from star_spectra.star_graph import build_star


def replay_character(graph, entry, terminal_values):
    """Carry a terminal character forward along the dimension path of an orbit entry."""
    d = simple_vector(graph, entry.start_vertex)
    f = g_vector(graph, terminal_values)
    for parity in orbit_parity_path(entry):
        d = coxeter_map(parity, d)
        f = char_map(parity.flipped(), d, f)
    return d, f


def find_instance(graph, case, terminal_choices):
    gendim = GenDim(case.n0, case.n_a, case.n_b, case.n_d)
    target = tuple(int(v) for v in generalized_to_dim(gendim, graph).values)
    entry = next(e for e in orbit_entries(graph) if e.dim == target)
    for choice in terminal_choices:
        values = [choice[v % len(choice)] for v in range(graph.vertex_count)]
        values[entry.start_vertex] = 0
        d, f = replay_character(graph, entry, values)
        assert tuple(int(v) for v in d.values) == target
        try:
            params = character_to_params(f, graph)
        except DegenerateCharacterError:
            continue
        ok, _ = case.evaluate(params.alpha, params.beta, params.delta, params.gamma)
        if not ok:
            continue
        margins = [
            c.margin(params.alpha, params.beta, params.delta, params.gamma)
            for c in case.conditions
            if c.kind == "strict"
        ]
        worst = min(margins)
        if worst < Fraction(1, 10):
            scale = (Fraction(1, 10) / worst).__ceil__()
            params = type(params)(
                tuple(w * scale for w in params.alpha),
                tuple(w * scale for w in params.beta),
                tuple(w * scale for w in params.delta),
                params.gamma * scale,
            )
            worst = worst * scale
        return params, worst, entry
    raise RuntimeError(f"no terminal choice worked for {case.case_id}")


TERMINAL_CHOICES = [
    (Fraction(1), Fraction(1), Fraction(1), Fraction(1), Fraction(1), Fraction(1), Fraction(1), Fraction(1)),
    tuple(Fraction(n, 4) for n in (4, 5, 6, 7, 8, 9, 10, 11)),
    tuple(Fraction(n, 3) for n in (3, 5, 7, 4, 8, 10, 11, 13)),
    tuple(Fraction(n, 5) for n in (7, 5, 9, 6, 11, 8, 13, 10)),
]


def main() -> None:
    print("CATALOG_INSTANCES = {")
    for name, cases in CATALOG.items():
        graph = build_star(*_ROLE_LENGTHS[name])
        for case in cases:
            params, worst, entry = find_instance(graph, case, TERMINAL_CHOICES)
            generic = decide_generic(params, graph)
            catalog = decide_catalog(params, graph)
            assert generic.member and catalog.member
            assert generic.witness_gendims == catalog.witness_gendims
            fmt = lambda xs: "(" + ", ".join(f'"{x}"' for x in xs) + ("," if len(xs) == 1 else "") + ")"
            print(
                f'    "{case.case_id}": ({fmt(params.alpha)}, {fmt(params.beta)}, '
                f'{fmt(params.delta)}, "{params.gamma}"),'
                f"  # margin {worst}, witnesses {sorted(w.gendim.flat() for w in generic.witnesses)}"
            )
    print("}")


if __name__ == "__main__":
    main()
