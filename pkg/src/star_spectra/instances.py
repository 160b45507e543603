"""Stored admissible weight tuples, one per catalog case.

Each instance satisfies its case's trace equality exactly and every strict
inequality with margin >= 1/10 (here the margins are all >= 1).  Produced by
scripts/find_admissible_instances.py: walk the case's Coxeter path backwards
from an all-positive terminal character and read the weights off the result.
"""

from __future__ import annotations

from .membership import _ROLE_LENGTHS, CATALOG
from .param_bridge import AlgebraParams, algebra_params
from .star_graph import StarGraph, build_star

CATALOG_INSTANCES: dict[str, AlgebraParams] = {
    case_id: algebra_params(alpha, beta, delta, gamma)
    for case_id, (alpha, beta, delta, gamma) in {
        "D4.1": (("2",), ("2",), ("2",), "3"),
        "E6.1": (("4", "2"), ("4", "2"), ("3",), "5"),
        "E6.2": (("4", "2"), ("4", "2"), ("3",), "6"),
        "E7.1": (("5", "3"), ("6", "4", "2"), ("4",), "7"),
        "E7.2": (("5", "2"), ("6", "4", "2"), ("4",), "8"),
        "E7.3": (("6", "3"), ("6", "4", "2"), ("4",), "8"),
        "E8.1": (("7", "4"), ("8", "6", "4", "2"), ("5",), "9"),
        "E8.2": (("7", "3"), ("8", "6", "4", "2"), ("5",), "11"),
        "E8.3": (("8", "4"), ("9", "7", "5", "3"), ("6",), "11"),
        "E8.4": (("8", "4"), ("9", "6", "4", "2"), ("6",), "12"),
        "E8.5": (("8", "4"), ("10", "8", "6", "3"), ("6",), "12"),
        "E8.6": (("8", "4"), ("10", "7", "4", "2"), ("6",), "12"),
        "E8.7": (("8", "4"), ("10", "8", "5", "2"), ("6",), "12"),
        "E8.8": (("6", "3"), ("8", "6", "4", "2"), ("5",), "9"),
        "E8.9": (("6", "3"), ("8", "6", "4", "2"), ("5",), "10"),
        "E8.10": (("7", "4"), ("8", "6", "4", "2"), ("5",), "10"),
        "E8.11": (("7", "3"), ("8", "6", "4", "2"), ("5",), "10"),
    }.items()
}


def instance_graph(case_id: str) -> StarGraph:
    """The canonical graph the stored instance lives on."""
    return build_star(*_ROLE_LENGTHS[case_id.split(".")[0]])


def all_case_ids() -> tuple[str, ...]:
    return tuple(case.case_id for cases in CATALOG.values() for case in cases)
