"""Exact sparse multivariate polynomials over the rationals.

Variables are :class:`VarId` tuples. A monomial is a tuple of ``(VarId, exponent)``
pairs sorted by variable, with no zero exponents. A :class:`Polynomial` maps
monomials to nonzero rational coefficients, so equal polynomials always have
identical stored form.

Monomial order is lexicographic on the variable order: the smallest ``VarId``
is the most significant variable. Terms print in decreasing order.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

__all__ = [
    "COORD",
    "PARAM",
    "AUX",
    "VarId",
    "Monomial",
    "Polynomial",
    "Derivation",
    "PolyMatrix",
    "coord",
    "param",
    "aux",
    "poly_arith",
    "substitute",
    "apply_derivation",
    "matrix_product",
    "det_of_minor",
    "monomials_of_degree",
    "monomials_up_to_degree",
    "monomial_degree",
    "monomial_key",
]

COORD, PARAM, AUX = 0, 1, 2

Coeff = Union[int, Fraction]


class VarId(NamedTuple):
    """A ring variable.

    ``kind`` is COORD (matrix entry of an arrow), PARAM (one-parameter group
    coordinate at a vertex) or AUX (anything else, e.g. a generic Borel element).
    Ordering is plain tuple ordering: kind, owner, row, col.
    """

    kind: int
    owner: str
    row: int
    col: int

    @property
    def name(self) -> str:
        prefix = ("", "u.", "$")[self.kind]
        return f"{prefix}{self.owner}[{self.row},{self.col}]"

    def __str__(self) -> str:
        return self.name


def coord(arrow: str, row: int, col: int) -> VarId:
    return VarId(COORD, arrow, row, col)


def param(vertex: str, row: int, col: int) -> VarId:
    return VarId(PARAM, vertex, row, col)


def aux(owner: str, row: int, col: int) -> VarId:
    return VarId(AUX, owner, row, col)


Monomial = tuple  # tuple[tuple[VarId, int], ...], sorted by VarId

ONE: Monomial = ()

_SENTINEL = (VarId(99, "", 0, 0), 0)


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def monomial_key(m: Monomial) -> tuple:
    """Sort key putting lex-larger monomials first."""
    return tuple((v, -e) for v, e in m) + (_SENTINEL,)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _format_coeff(c: Coeff) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _norm(c) if isinstance(c, Fraction) else c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coeff) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def var(cls, v: VarId) -> "Polynomial":
        return cls._raw({((v, 1),): 1})

    @classmethod
    def monomial(cls, m: Monomial, c: Coeff = 1) -> "Polynomial":
        return cls({m: c})

    zero: "Polynomial"
    one: "Polynomial"

    @property
    def terms(self) -> Mapping[Monomial, Coeff]:
        return self._terms

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, m: Monomial) -> Coeff:
        return self._terms.get(m, 0)

    def constant_term(self) -> Coeff:
        return self._terms.get(ONE, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((monomial_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({monomial_degree(m) for m in self._terms}) <= 1

    def variables(self) -> frozenset:
        return frozenset(v for m in self._terms for v, _ in m)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: monomial_key(t[0]))

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw({m: _norm(c) for m, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Coeff) -> "Polynomial":
        if not c:
            return Polynomial.zero
        return Polynomial._raw({m: _norm(x * c) for m, x in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # structure

    def coefficient_of(self, v: VarId, k: int) -> "Polynomial":
        """Coefficient of ``v**k`` when the polynomial is viewed in ``v``."""
        out = {}
        for m, c in self._terms.items():
            e = 0
            rest = []
            for w, f in m:
                if w == v:
                    e = f
                else:
                    rest.append((w, f))
            if e == k:
                out[tuple(rest)] = c
        return Polynomial._raw(out)

    def homogeneous_part(self, e: int) -> "Polynomial":
        return Polynomial._raw(
            {m: c for m, c in self._terms.items() if monomial_degree(m) == e}
        )

    def primitive(self) -> "Polynomial":
        """Integer multiple with content 1 and positive leading coefficient."""
        if not self._terms:
            return self
        from math import gcd, lcm

        coeffs = [Fraction(c) for c in self._terms.values()]
        den = lcm(*(c.denominator for c in coeffs))
        nums = [int(c * den) for c in coeffs]
        g = gcd(*nums)
        lead = self.sorted_terms()[0][1]
        sign = 1 if lead > 0 else -1
        return self.scale(Fraction(sign * den, g))

    # text form

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            factors = [v.name if e == 1 else f"{v.name}^{e}" for v, e in m]
            if a != 1 or not factors:
                factors.insert(0, _format_coeff(a))
            body = "*".join(factors)
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        """Parse the output of :meth:`to_text`."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls.zero
        if s[0] not in "+-":
            s = "+" + s
        total: dict = {}
        for sign, body in _TERM_RE.findall(s):
            c: Coeff = 1
            mono: dict = {}
            for factor in body.split("*"):
                mv = _VAR_RE.fullmatch(factor)
                if mv is None:
                    c = c * Fraction(factor)
                    continue
                prefix, owner, r, col, e = mv.groups()
                kind = {"": COORD, "u.": PARAM, "$": AUX}[prefix or ""]
                v = VarId(kind, owner, int(r), int(col))
                mono[v] = mono.get(v, 0) + int(e or 1)
            if sign == "-":
                c = -c
            m = tuple(sorted(mono.items()))
            total[m] = total.get(m, 0) + c
        return cls(total)


_VAR_RE = re.compile(r"(u\.|\$)?([^\[\]*^+\-]+)\[(\d+),(\d+)\](?:\^(\d+))?")
_TERM_RE = re.compile(r"([+-])((?:[^+\-\[]|\[[^\]]*\])+)")

Polynomial.zero = Polynomial._raw({})
Polynomial.one = Polynomial._raw({ONE: 1})


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def substitute(f: Polynomial, sigma: Mapping[VarId, Polynomial]) -> Polynomial:
    """Ring homomorphism sending each variable ``v`` to ``sigma[v]`` (identity if unmapped)."""
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            base = sigma.get(v)
            if base is None:
                powers[key] = Polynomial.monomial(((v, e),))
            else:
                powers[key] = base**e
        return powers[key]

    acc: dict = {}
    for m, c in f.items():
        term = Polynomial.const(c)
        for v, e in m:
            term = term * power(v, e)
        for mm, cc in term.items():
            s = acc.get(mm, 0) + cc
            if s:
                acc[mm] = s
            else:
                del acc[mm]
    return Polynomial(acc)


class Derivation:
    """A derivation given by its values on variables; unmapped variables go to zero."""

    def __init__(self, images: Mapping[VarId, Polynomial]):
        self.images = {v: p for v, p in images.items() if p}

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply_derivation(self, f)

    def __repr__(self) -> str:
        body = ", ".join(f"{v.name} -> {p}" for v, p in sorted(self.images.items()))
        return f"Derivation({body})"


def apply_derivation(D: Derivation, f: Polynomial) -> Polynomial:
    images = D.images
    acc: dict = {}
    for m, c in f.items():
        for idx, (v, e) in enumerate(m):
            image = images.get(v)
            if image is None:
                continue
            if e == 1:
                rest = m[:idx] + m[idx + 1 :]
            else:
                rest = m[:idx] + ((v, e - 1),) + m[idx + 1 :]
            k = c * e
            for mm, cc in image.items():
                prod = _mono_mul(rest, mm)
                s = acc.get(prod, 0) + k * cc
                if s:
                    acc[prod] = s
                else:
                    del acc[prod]
    return Polynomial(acc)


class PolyMatrix:
    """Immutable matrix of polynomials. Entries are 0-based internally."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        rows = tuple(tuple(r) for r in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows = len(rows)
        self.cols = width
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(
            [[Polynomial.one if i == j else Polynomial.zero for j in range(n)] for i in range(n)]
        )

    def entry(self, i: int, j: int) -> Polynomial:
        """Entry at 1-based position (i, j)."""
        return self.entries[i - 1][j - 1]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return matrix_product(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(p) for p in row] for row in self.entries])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(p) for p in row) for row in self.entries)
        return f"PolyMatrix([{body}])"


def matrix_product(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.cols != B.rows:
        raise ValueError(f"dimension mismatch: {A.rows}x{A.cols} times {B.rows}x{B.cols}")
    out = []
    for i in range(A.rows):
        row = []
        for k in range(B.cols):
            acc = Polynomial.zero
            for j in range(A.cols):
                a = A.entries[i][j]
                if a:
                    b = B.entries[j][k]
                    if b:
                        acc = acc + a * b
            row.append(acc)
        out.append(row)
    return PolyMatrix(out)


def det_of_minor(A: PolyMatrix, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """Determinant of the submatrix on 1-based ``rows`` x ``cols``, by cofactor expansion."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column selections differ in length")
    for idx, bound, what in ((rows, A.rows, "row"), (cols, A.cols, "column")):
        if len(set(idx)) != len(idx):
            raise ValueError(f"repeated {what} index in {idx}")
        bad = [k for k in idx if not 1 <= k <= bound]
        if bad:
            raise ValueError(f"{what} index {bad[0]} out of range 1..{bound}")
    memo: dict = {}

    def expand(depth: int, avail: tuple) -> Polynomial:
        if depth == len(rows):
            return Polynomial.one
        key = (depth, avail)
        if key in memo:
            return memo[key]
        acc = Polynomial.zero
        r = rows[depth] - 1
        for pos, c in enumerate(avail):
            a = A.entries[r][c - 1]
            if not a:
                continue
            minor = expand(depth + 1, avail[:pos] + avail[pos + 1 :])
            if not minor:
                continue
            term = a * minor
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return expand(0, tuple(cols))


def monomials_of_degree(variables: Iterable[VarId], e: int) -> list:
    """All monomials of total degree exactly ``e``, lex-decreasing."""
    vs = sorted(set(variables))
    out = []
    for combo in combinations_with_replacement(vs, e):
        m: dict = {}
        for v in combo:
            m[v] = m.get(v, 0) + 1
        out.append(tuple(sorted(m.items())))
    out.sort(key=monomial_key)
    return out


def monomials_up_to_degree(variables: Iterable[VarId], d: int) -> list:
    """Monomials of degree <= d, grouped by increasing degree, lex-decreasing within a degree."""
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    vs = sorted(set(variables))
    out = []
    for e in range(d + 1):
        out.extend(monomials_of_degree(vs, e))
    return out
