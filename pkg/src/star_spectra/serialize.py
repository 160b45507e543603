"""Canonical exact-rational strings and matrix JSON encoding.

Rationals travel as "p/q" strings (lowest terms, positive denominator, bare
integers for q = 1).  Decimal input is rejected: the exact layer is
boundary-sensitive and must never see rounded values.  Matrices travel as
row-major arrays of [re, im] double pairs; Python's shortest-roundtrip float
repr makes the JSON round-trip bit-exact.
"""

from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not an exact rational (use p/q or an integer): {text!r}")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(part) for part in text.split(","))


def matrix_to_json(m: np.ndarray) -> list[list[float]]:
    flat = np.asarray(m, dtype=complex).reshape(-1)
    return [[float(z.real), float(z.imag)] for z in flat]


def matrix_from_json(data: list[list[float]], n: int) -> np.ndarray:
    if len(data) != n * n:
        raise ValueError(f"matrix payload has {len(data)} entries, expected {n * n}")
    flat = np.array([complex(re_, im) for re_, im in data], dtype=complex)
    return flat.reshape(n, n)
