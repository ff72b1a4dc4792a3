"""Young bitableaux, bideterminants, and the framed-quiver generator sets.

Conventions: a tableau is *normal* when every row strictly increases and
*standard* when it is normal and every column weakly increases downward.
A bitableau row ``(j1 .. jk | i1 .. ik)@[phi1, .., 0]`` is the k x k minor on
rows J and columns I of the product ``A_phi1 ... A_0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .errors import PreconditionError, ResourceGuardError
from .filtrep import GeneralRep, path_matrix
from .linalg import Echelon
from .polyring import (
    PolyMatrix,
    Polynomial,
    aux,
    coord,
    det_of_minor,
    matrix_product,
    monomials_up_to_degree,
)
from .quiver import AT_MOST_TWO, FramedQuiver, PathWord, classify, pathways_from

__all__ = [
    "Partition",
    "Tableau",
    "BitableauRow",
    "Bitableau",
    "tableau_class",
    "seq_leq",
    "seq_key",
    "is_block_standard",
    "eval_bideterminant",
    "enumerate_row_generators",
    "block_standard_terms",
    "enumerate_block_standard",
    "lemma48_check",
    "grosshans_basis_check",
    "standard_tableaux",
]


class Partition(tuple):
    def __new__(cls, parts: Sequence[int]):
        parts = tuple(parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition {parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)


@dataclass(frozen=True)
class Tableau:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(len(r) for r in rows)
        if any(x < 1 for r in rows for x in r):
            raise ValueError("tableau entries must be positive integers")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)


def tableau_class(T: Tableau) -> tuple:
    """Return ``(normal, standard)``."""
    normal = all(a < b for r in T.rows for a, b in zip(r, r[1:]))
    columns_ok = all(
        upper[c] <= lower[c] for upper, lower in zip(T.rows, T.rows[1:]) for c in range(len(lower))
    )
    return normal, normal and columns_ok


def seq_leq(phi: Sequence[int], psi: Sequence[int]) -> bool:
    """Path-sequence order: shorter first; equal lengths compare by the
    rightmost nonzero entry of ``psi - phi``."""
    if len(phi) != len(psi):
        return len(phi) < len(psi)
    for a, b in zip(reversed(phi), reversed(psi)):
        if a != b:
            return b - a > 0
    return True


def seq_key(phi: Sequence[int]) -> tuple:
    """Sort key realising :func:`seq_leq`."""
    return (len(phi), tuple(reversed(phi)))


@dataclass(frozen=True)
class BitableauRow:
    j: tuple
    i: tuple
    label: tuple = (0,)

    def __post_init__(self):
        object.__setattr__(self, "j", tuple(self.j))
        object.__setattr__(self, "i", tuple(self.i))
        object.__setattr__(self, "label", tuple(self.label))
        if len(self.j) != len(self.i):
            raise ValueError("row and column parts differ in length")
        if not self.label or self.label[-1] != 0:
            raise ValueError(f"path sequence {list(self.label)} must end in 0")

    def __str__(self) -> str:
        label = ",".join(map(str, self.label))
        return f"({' '.join(map(str, self.j))} | {' '.join(map(str, self.i))})@[{label}]"

    @classmethod
    def parse(cls, text: str) -> "BitableauRow":
        body, _, label = text.strip().partition("@")
        js, _, is_ = body.strip().strip("()").partition("|")
        return cls(
            tuple(int(x) for x in js.split()),
            tuple(int(x) for x in is_.split()),
            tuple(int(x) for x in label.strip().strip("[]").split(",")),
        )

    @property
    def degree(self) -> int:
        return len(self.j) * len(self.label)

    @property
    def key(self) -> tuple:
        return (seq_key(self.label), self.j, self.i)


@dataclass(frozen=True)
class Bitableau:
    rows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))

    @property
    def J(self) -> tuple:
        return tuple(r.j for r in self.rows)

    @property
    def I(self) -> tuple:
        return tuple(r.i for r in self.rows)

    @property
    def labels(self) -> tuple:
        return tuple(r.label for r in self.rows)

    @property
    def degree(self) -> int:
        return sum(r.degree for r in self.rows)

    def blocks(self) -> list:
        """Maximal runs of rows sharing a label."""
        out = []
        for r in self.rows:
            if out and out[-1][0].label == r.label:
                out[-1].append(r)
            else:
                out.append([r])
        return out

    def to_text(self) -> str:
        return "\n".join(str(r) for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "Bitableau":
        return cls(tuple(BitableauRow.parse(line) for line in text.splitlines() if line.strip()))


def _block_standard(rows: Sequence[BitableauRow]) -> bool:
    try:
        J = Tableau(tuple(r.j for r in rows))
        I = Tableau(tuple(r.i for r in rows))
    except ValueError:
        return False
    return tableau_class(J)[1] and tableau_class(I)[1]


def is_block_standard(bt: Bitableau) -> bool:
    labels = bt.labels
    if not all(seq_leq(a, b) for a, b in zip(labels, labels[1:])):
        return False
    return all(_block_standard(block) for block in bt.blocks())


def _framed(rep: GeneralRep) -> FramedQuiver:
    fq = rep.config.quiver
    if not isinstance(fq, FramedQuiver):
        raise ValueError("bideterminants need a framed representation")
    return fq


def label_path(fq: FramedQuiver, label: Sequence[int]) -> PathWord:
    try:
        arrows = tuple(fq.arrow_by_index(k).id for k in label)
    except KeyError as exc:
        raise ValueError(f"path sequence {list(label)} names an unknown arrow {exc}") from None
    p = PathWord(arrows)
    p.check(fq.quiver)
    return p


def eval_bideterminant(bt: Bitableau, rep: GeneralRep, _cache: dict | None = None) -> Polynomial:
    """Product over rows of the labelled minors."""
    if not bt.rows:
        return Polynomial.one
    fq = _framed(rep)
    cache = {} if _cache is None else _cache
    result = Polynomial.one
    for r in bt.rows:
        if r.label not in cache:
            cache[r.label] = path_matrix(rep, label_path(fq, r.label))
        result = result * det_of_minor(cache[r.label], r.j, r.i)
    return result


def enumerate_row_generators(fq: FramedQuiver, rep: GeneralRep, n: int, m: int) -> list:
    """Rows ``(p .. n | i_1 < .. < i_{n-p+1})`` on every pathway from the framed vertex."""
    if (n, m) != (rep.n, rep.m):
        raise ValueError(f"rep has n={rep.n}, m={rep.m}; asked for n={n}, m={m}")
    if classify(fq.base).outcome != AT_MOST_TWO:
        raise PreconditionError("base quiver has more than two pathways between some vertices")
    rows = []
    for p in pathways_from(fq):
        label = tuple(fq.arrow_index(a) for a in p.arrows)
        for start in range(1, n + 1):
            size = n - start + 1
            if size > m:
                continue
            J = tuple(range(start, n + 1))
            for I in combinations(range(1, m + 1), size):
                rows.append(BitableauRow(J, I, label))
    rows.sort(key=lambda r: r.key)
    return rows


@dataclass(frozen=True)
class GeneratorTerm:
    """A diagonal monomial times a block-standard bideterminant."""

    diagonal: tuple
    bitableau: Bitableau
    poly: Polynomial

    @property
    def key(self) -> tuple:
        return (self.bitableau.rows, self.diagonal)


def _arrange(rows: Sequence[BitableauRow]) -> Bitableau | None:
    """The block-standard arrangement of a multiset of rows, if any."""
    ordered = sorted(rows, key=lambda r: (seq_key(r.label), -len(r.j), r.j, r.i))
    bt = Bitableau(tuple(ordered))
    return bt if is_block_standard(bt) else None


def block_standard_terms(fq: FramedQuiver, rep: GeneralRep, d: int) -> list:
    gens = enumerate_row_generators(fq, rep, rep.n, rep.m)
    gens = [g for g in gens if g.degree <= d]
    matrices: dict = {}
    row_poly = {g: eval_bideterminant(Bitableau((g,)), rep, matrices) for g in gens}

    bitableaux = [Bitableau()]

    def extend(start: int, chosen: list, degree: int):
        for k in range(start, len(gens)):
            g = gens[k]
            if degree + g.degree > d:
                continue
            chosen.append(g)
            bt = _arrange(chosen)
            if bt is not None:
                bitableaux.append(bt)
            # block-standardness is not closed under adding rows, so keep
            # extending even when this multiset is rejected
            extend(k, chosen, degree + g.degree)
            chosen.pop()

    extend(0, [], 0)

    diagonal = monomials_up_to_degree(rep.diagonal_variables, d)
    terms = []
    for bt in bitableaux:
        base = Polynomial.one
        for r in bt.rows:
            base = base * row_poly[r]
        budget = d - bt.degree
        for mono in diagonal:
            if sum(e for _, e in mono) <= budget:
                terms.append(GeneratorTerm(mono, bt, base * Polynomial.monomial(mono)))
    return terms


def enumerate_block_standard(fq: FramedQuiver, rep: GeneralRep, d: int) -> list:
    """Polynomials (diagonal monomial) x (block-standard bideterminant) of degree <= d."""
    return [t.poly for t in block_standard_terms(fq, rep, d)]


def _generic_upper(owner: str, n: int, unipotent: bool = False) -> PolyMatrix:
    return PolyMatrix(
        [
            [
                (Polynomial.one if unipotent else Polynomial.var(aux(owner, i, j)))
                if i == j
                else (Polynomial.var(aux(owner, i, j)) if i < j else Polynomial.zero)
                for j in range(1, n + 1)
            ]
            for i in range(1, n + 1)
        ]
    )


def lemma48_check(n: int, m: int, p: int, unipotent: bool = False) -> bool:
    """Check ``f(bX) = (b_pp ... b_nn) f(X)`` for every ``f = (p..n | I)`` on a generic n x m X.

    ``b`` is a generic upper-triangular matrix of fresh variables; with
    ``unipotent=True`` its diagonal is set to 1 and the claim becomes ``f(bX) = f(X)``.
    """
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got p={p}, n={n}")
    if n - p + 1 > m:
        raise ValueError(f"row length {n - p + 1} exceeds m={m}")
    X = PolyMatrix(
        [[Polynomial.var(coord("x", i, j)) for j in range(1, m + 1)] for i in range(1, n + 1)]
    )
    B = _generic_upper("b", n, unipotent)
    BX = matrix_product(B, X)
    chi = Polynomial.one
    for i in range(p, n + 1):
        chi = chi * B.entry(i, i)
    J = list(range(p, n + 1))
    for I in combinations(range(1, m + 1), n - p + 1):
        if det_of_minor(BX, J, I) != chi * det_of_minor(X, J, I):
            return False
    return True


def _partitions(total: int, largest: int) -> list:
    if total == 0:
        return [()]
    out = []
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            out.append((first,) + rest)
    return out


def standard_tableaux(shape: Sequence[int], bound: int) -> list:
    """Standard tableaux of ``shape`` with entries in 1..bound."""
    shape = tuple(shape)
    out = []

    def fill(rows: list):
        k = len(rows)
        if k == len(shape):
            out.append(Tableau(tuple(rows)))
            return
        above = rows[-1] if rows else None
        for row in combinations(range(1, bound + 1), shape[k]):
            if above is None or all(above[c] <= row[c] for c in range(len(row))):
                rows.append(row)
                fill(rows)
                rows.pop()

    fill([])
    return out


@dataclass
class GrosshansReport:
    n: int
    m: int
    d: int
    count: int
    rank: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.count == self.rank == self.expected

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "count": self.count,
            "rank": self.rank,
            "expected": self.expected,
            "passed": self.passed,
        }


def grosshans_basis_check(n: int, m: int, d: int, max_dim: int = 5000) -> GrosshansReport:
    """Standard bideterminants of degree <= d on a generic n x m matrix: count and rank
    against the dimension of the polynomial space."""
    expected = comb(n * m + d, d)
    if expected > max_dim:
        raise ResourceGuardError(f"polynomial space of dimension {expected} exceeds guard {max_dim}")
    X = PolyMatrix(
        [[Polynomial.var(coord("x", i, j)) for j in range(1, m + 1)] for i in range(1, n + 1)]
    )
    minors: dict = {}

    def minor(J, I):
        if (J, I) not in minors:
            minors[(J, I)] = det_of_minor(X, J, I)
        return minors[(J, I)]

    index: dict = {}
    ech = Echelon()
    count = 0
    for e in range(d + 1):
        for shape in _partitions(e, min(n, m)):
            Js = standard_tableaux(shape, n)
            Is = standard_tableaux(shape, m)
            for J in Js:
                for I in Is:
                    f = Polynomial.one
                    for jr, ir in zip(J.rows, I.rows):
                        f = f * minor(jr, ir)
                    vec = {}
                    for mono, c in f.items():
                        vec[index.setdefault(mono, len(index))] = c
                    ech.add(vec)
                    count += 1
    return GrosshansReport(n, m, d, count, ech.rank, expected)
