"""Degree-truncated invariant subspaces by exact nullspace computation.

The unipotent action maps coordinates to linear forms in coordinates, so
each derivation preserves degree and the kernel can be solved one
homogeneous degree at a time. Every result is valid only up to the stated
degree bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import PreconditionError, ResourceGuardError
from .filtrep import GeneralRep, RepConfig, build_general_rep, generator_derivations, is_invariant
from .linalg import Echelon, nullspace
from .polyring import Polynomial, monomial_degree, monomial_key, monomials_of_degree
from .quiver import AT_MOST_TWO, FramedQuiver, PathwayReport, Quiver, classify
from .tableaux import block_standard_terms

__all__ = [
    "GradedBasis",
    "KernelReport",
    "SpanVerdict",
    "Theorem1Report",
    "Theorem2Report",
    "invariant_basis",
    "span_compare",
    "diagonal_monomials",
    "verify_theorem1",
    "verify_theorem2",
    "DEFAULT_MAX_MONOMIALS",
]

DEFAULT_MAX_MONOMIALS = 200_000


class GradedBasis:
    """Monomials of degree <= d in a fixed variable list, in graded-lex order."""

    def __init__(self, variables: Sequence, d: int, max_monomials: int = DEFAULT_MAX_MONOMIALS):
        self.variables = tuple(sorted(set(variables)))
        self.d = d
        size = comb(len(self.variables) + d, d)
        if size > max_monomials:
            raise ResourceGuardError(
                f"{size} monomials of degree <= {d} in {len(self.variables)} variables "
                f"exceed the guard of {max_monomials}"
            )
        self.by_degree = [monomials_of_degree(self.variables, e) for e in range(d + 1)]
        self.monomials = [m for block in self.by_degree for m in block]
        self.index = {m: k for k, m in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)

    def to_vector(self, f: Polynomial) -> dict:
        try:
            return {self.index[m]: c for m, c in f.items()}
        except KeyError as exc:
            raise ValueError(f"monomial {exc} is outside the basis") from None

    def from_vector(self, vec: dict) -> Polynomial:
        return Polynomial({self.monomials[k]: c for k, c in vec.items()})


@dataclass
class KernelReport:
    d: int
    dims: list
    basis: list
    variables: tuple = ()
    verdicts: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "degree_bound": self.d,
            "dim": self.dim,
            "dims_by_degree": list(self.dims),
            "basis": [f.to_text() for f in self.basis],
            "verdicts": dict(self.verdicts),
        }


def invariant_basis(rep: GeneralRep, d: int, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> KernelReport:
    """Basis of ``{f : deg f <= d, D_{v,i,i+1} f = 0 for all v, i}``."""
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    gb = GradedBasis(rep.variables, d, max_monomials)
    derivs = [D for _, D in generator_derivations(rep)]
    dims = []
    basis = []
    for block in gb.by_degree:
        local = {m: k for k, m in enumerate(block)}
        rows: dict = {}
        for col, mono in enumerate(block):
            f = Polynomial.monomial(mono)
            for t, D in enumerate(derivs):
                for target, c in D(f).items():
                    rows.setdefault((t, local[target]), {})[col] = c
        ordered = [rows[k] for k in sorted(rows)]
        kernel = nullspace(ordered, len(block))
        dims.append(len(kernel))
        for vec in kernel:
            basis.append(Polynomial({block[k]: c for k, c in vec.items()}))
    return KernelReport(d, dims, basis, rep.variables)


@dataclass
class SpanVerdict:
    verdict: str
    witness: Polynomial | None
    rank_a: int
    rank_b: int
    rank_union: int

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_text(),
            "rank_a": self.rank_a,
            "rank_b": self.rank_b,
            "rank_union": self.rank_union,
        }


def span_compare(A: Sequence[Polynomial], B: Sequence[Polynomial], d: int) -> SpanVerdict:
    """Compare rational spans. Verdict is "equal", "A<B", "B<A" or "incomparable".

    The witness, when the spans differ, is an element of the larger (or, if
    incomparable, of B) span reduced modulo the other span, made primitive.
    """
    index: dict = {}
    monos = sorted(
        {m for f in list(A) + list(B) for m in f.terms},
        key=lambda m: (monomial_degree(m), monomial_key(m)),
    )
    for m in monos:
        if monomial_degree(m) > d:
            raise ValueError(f"polynomial of degree {monomial_degree(m)} exceeds bound {d}")
        index[m] = len(index)

    def vec(f):
        return {index[m]: c for m, c in f.items()}

    ea = Echelon(vec(f) for f in A)
    eb = Echelon(vec(f) for f in B)
    a_in_b = None
    for f in A:
        r = eb.reduce(vec(f))
        if r:
            a_in_b = r
            break
    b_in_a = None
    for f in B:
        r = ea.reduce(vec(f))
        if r:
            b_in_a = r
            break
    union = Echelon(ea.sorted_rows())
    for row in eb.sorted_rows():
        union.add(row)

    def poly(v):
        return Polynomial({monos[k]: c for k, c in v.items()})

    if a_in_b is None and b_in_a is None:
        verdict, witness = "equal", None
    elif a_in_b is None:
        verdict, witness = "A<B", poly(b_in_a)
    elif b_in_a is None:
        verdict, witness = "B<A", poly(a_in_b)
    else:
        verdict, witness = "incomparable", poly(b_in_a)
    if witness is not None:
        witness = witness.primitive()
    return SpanVerdict(verdict, witness, ea.rank, eb.rank, union.rank)


def diagonal_monomials(rep: GeneralRep, d: int) -> list:
    out = []
    for e in range(d + 1):
        out.extend(Polynomial.monomial(m) for m in monomials_of_degree(rep.diagonal_variables, e))
    return out


@dataclass
class Theorem1Report:
    quiver: str
    n: int
    d: int
    pathways: PathwayReport
    kernel: KernelReport
    diagonal_dim: int
    comparison: SpanVerdict

    @property
    def outcome(self) -> str:
        return self.pathways.outcome

    @property
    def spans_equal(self) -> bool:
        return self.comparison.verdict == "equal"

    @property
    def diagonal_contained(self) -> bool:
        return self.comparison.verdict in ("equal", "A<B")

    @property
    def verdict(self) -> str:
        ok = self.diagonal_contained and ((self.outcome == AT_MOST_TWO) == self.spans_equal)
        return "CONSISTENT" if ok else "INCONSISTENT"

    @property
    def witness(self) -> Polynomial | None:
        return self.comparison.witness

    def to_json(self) -> dict:
        return {
            "pathways": self.pathways.to_json(),
            "kernel": self.kernel.to_json(),
            "diagonal_dim": self.diagonal_dim,
            "comparison": self.comparison.to_json(),
            "verdict": self.verdict,
        }


def verify_theorem1(q: Quiver, n: int, d: int, max_monomials: int = DEFAULT_MAX_MONOMIALS) -> Theorem1Report:
    """Pathway classification against the degree-<=d invariant subspace.

    Consistent when the diagonal span sits inside the kernel and equals it
    exactly when every vertex pair has at most two pathways.
    """
    report = classify(q)
    rep = build_general_rep(RepConfig(q, n))
    kernel = invariant_basis(rep, d, max_monomials)
    diag = diagonal_monomials(rep, d)
    cmp = span_compare(diag, kernel.basis, d)
    kernel.verdicts["diagonal"] = cmp.verdict
    return Theorem1Report(q.name, n, d, report, kernel, len(diag), cmp)


@dataclass
class Theorem2Report:
    quiver: str
    n: int
    m: int
    d: int
    kernel: KernelReport
    terms: list
    comparison: SpanVerdict

    @property
    def verdict(self) -> str:
        return "PASS" if self.comparison.verdict == "equal" else "FAIL"

    def to_json(self) -> dict:
        return {
            "kernel": self.kernel.to_json(),
            "generator_count": len(self.terms),
            "generators": [
                {
                    "diagonal": Polynomial.monomial(t.diagonal).to_text(),
                    "bitableau": [str(r) for r in t.bitableau.rows],
                }
                for t in self.terms
            ],
            "comparison": self.comparison.to_json(),
            "verdict": self.verdict,
        }


def verify_theorem2(
    fq: FramedQuiver, n: int, m: int, d: int, max_monomials: int = DEFAULT_MAX_MONOMIALS
) -> Theorem2Report:
    """Span of diagonal monomials times block-standard bideterminants against the kernel."""
    base = classify(fq.base)
    if base.outcome != AT_MOST_TWO:
        raise PreconditionError(
            f"base quiver has three pathways between {base.pair}; the generator set is not defined"
        )
    rep = build_general_rep(RepConfig(fq, n, m))
    kernel = invariant_basis(rep, d, max_monomials)
    terms = block_standard_terms(fq, rep, d)
    cmp = span_compare(kernel.basis, [t.poly for t in terms], d)
    kernel.verdicts["generators"] = cmp.verdict
    return Theorem2Report(fq.name, n, m, d, kernel, terms, cmp)


def check_kernel_invariance(rep: GeneralRep, report: KernelReport) -> bool:
    """Cross-check every kernel element with the substitution-based invariance test."""
    return all(is_invariant(rep, f) for f in report.basis)
