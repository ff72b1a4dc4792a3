"""Exact sparse linear algebra over Q, fraction-free.

Vectors are dicts ``column -> coefficient``. Rows are scaled to primitive
integer vectors on entry, and elimination uses only integer combinations
``a*row - b*pivot_row`` followed by division by the content.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

__all__ = ["Echelon", "primitive", "nullspace", "rank"]


def primitive(vec: Mapping[int, int | Fraction]) -> dict:
    """Scale to integer entries with gcd 1 and a positive leading entry."""
    vec = {k: v for k, v in vec.items() if v}
    if not vec:
        return {}
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    ints = {k: int(v * den) for k, v in vec.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if ints[min(ints)] < 0:
        g = -g
    return {k: v // g for k, v in ints.items()}


def _combine(a: int, x: dict, b: int, y: dict) -> dict:
    """Primitive part of ``a*x - b*y``."""
    out = {k: a * v for k, v in x.items()}
    for k, v in y.items():
        s = out.get(k, 0) - b * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return primitive(out)


class Echelon:
    """Reduced row echelon form built one vector at a time.

    Rows are keyed by pivot column; a pivot column is nonzero only in its own
    row. A new row pivots at its smallest surviving column.
    """

    def __init__(self, rows: Iterable[Mapping] = ()):
        self.rows: dict = {}
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        """Primitive normal form of ``vec`` modulo the row space (empty if in it)."""
        v = primitive(vec)
        for p, row in self.rows.items():
            c = v.get(p)
            if c:
                v = _combine(row[p], v, c, row)
        return v

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True if it was independent."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        for q, row in list(self.rows.items()):
            c = row.get(p)
            if c:
                self.rows[q] = _combine(v[p], row, c, v)
        self.rows[p] = v
        return True

    def sorted_rows(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]


def rank(rows: Iterable[Mapping]) -> int:
    return Echelon(rows).rank


def nullspace(rows: Iterable[Mapping], ncols: int) -> list:
    """Integer basis of ``{x : row . x = 0 for every row}``, one vector per free column."""
    ech = Echelon(rows)
    pivots = ech.rows
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        hits = [(p, row) for p, row in pivots.items() if row.get(f)]
        scale = 1
        for p, row in hits:
            scale = lcm(scale, row[p])
        x = {f: scale}
        for p, row in hits:
            x[p] = -row[f] * scale // row[p]
        basis.append(primitive(x))
    return basis
