"""Generic filtered representations and the unipotent change-of-basis action.

Every nonframed vertex carries C^n with the complete standard flag, so each
nonframed arrow is a generic upper-triangular n x n matrix. The framing arrow
(if any) is a generic n x m matrix. The group at vertex v is the upper
unitriangular group; its one-parameter subgroup ``I + u E_ij`` acts by
``A -> g_head A g_tail^{-1}``, and a polynomial f transforms as
``f -> f(u . A)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .polyring import (
    COORD,
    Derivation,
    PolyMatrix,
    Polynomial,
    VarId,
    coord,
    matrix_product,
    param,
    substitute,
)
from .quiver import FramedQuiver, PathWord, Quiver

__all__ = [
    "RepConfig",
    "GeneralRep",
    "OneParamAction",
    "build_general_rep",
    "one_param_substitution",
    "action_derivation",
    "path_matrix",
    "is_invariant",
    "generator_derivations",
]


@dataclass(frozen=True)
class RepConfig:
    quiver: Quiver | FramedQuiver
    n: int
    m: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if isinstance(self.quiver, FramedQuiver) and self.m < 1:
            raise ValueError("framed quivers need m >= 1")

    @property
    def framed(self) -> bool:
        return isinstance(self.quiver, FramedQuiver)


@dataclass(frozen=True)
class GeneralRep:
    config: RepConfig
    matrices: dict
    arrows: tuple
    group_vertices: tuple
    variables: tuple
    diagonal_variables: tuple
    framing_arrow: str | None = None
    _var_set: frozenset = field(default=frozenset(), repr=False)

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def m(self) -> int:
        return self.config.m

    @property
    def quiver(self) -> Quiver:
        q = self.config.quiver
        return q.quiver if isinstance(q, FramedQuiver) else q

    def dim(self, vertex: str) -> int:
        q = self.config.quiver
        if isinstance(q, FramedQuiver) and vertex == q.framed_vertex:
            return self.config.m
        return self.config.n

    def matrix(self, arrow_id: str) -> PolyMatrix:
        return self.matrices[arrow_id]


def _generic(arrow_id: str, rows: int, cols: int, upper: bool) -> PolyMatrix:
    return PolyMatrix(
        [
            [
                Polynomial.var(coord(arrow_id, i, j)) if (not upper or i <= j) else Polynomial.zero
                for j in range(1, cols + 1)
            ]
            for i in range(1, rows + 1)
        ]
    )


def build_general_rep(cfg: RepConfig) -> GeneralRep:
    q = cfg.quiver
    framing = None
    arrows = []
    if isinstance(q, FramedQuiver):
        framing = q.framing_arrow
        arrows.append(q.arrow0)
        group_vertices = q.base.vertices
        base = q.base
    else:
        group_vertices = q.vertices
        base = q
    arrows.extend(base.arrows)
    matrices = {}
    variables = []
    diagonal = []
    n = cfg.n
    for a in arrows:
        if a.id == framing:
            M = _generic(a.id, n, cfg.m, upper=False)
            variables.extend(coord(a.id, i, j) for i in range(1, n + 1) for j in range(1, cfg.m + 1))
        else:
            M = _generic(a.id, n, n, upper=True)
            variables.extend(coord(a.id, i, j) for i in range(1, n + 1) for j in range(i, n + 1))
            diagonal.extend(coord(a.id, i, i) for i in range(1, n + 1))
        matrices[a.id] = M
    return GeneralRep(
        cfg,
        matrices,
        tuple(arrows),
        tuple(group_vertices),
        tuple(sorted(variables)),
        tuple(sorted(diagonal)),
        framing,
        frozenset(variables),
    )


@dataclass(frozen=True)
class OneParamAction:
    vertex: str
    i: int
    j: int
    parameter: VarId
    sigma: dict

    def __call__(self, f: Polynomial) -> Polynomial:
        return substitute(f, self.sigma)


def _check_indices(rep: GeneralRep, v: str, i: int, j: int) -> None:
    if v not in rep.group_vertices:
        raise ValueError(f"vertex {v} carries no unipotent group")
    if not (1 <= i < j <= rep.n):
        raise ValueError(f"need 1 <= i < j <= {rep.n}, got ({i}, {j})")


def _elementary(n: int, i: int, j: int, entry: Polynomial) -> PolyMatrix:
    rows = [[Polynomial.one if r == c else Polynomial.zero for c in range(n)] for r in range(n)]
    rows[i - 1][j - 1] = entry
    return PolyMatrix(rows)


def one_param_substitution(rep: GeneralRep, v: str, i: int, j: int) -> OneParamAction:
    """Coordinate substitution for ``g = I + u E_ij`` at vertex ``v``.

    Arrows with head v get ``g A`` (row i gains u times row j), arrows with
    tail v get ``A g^{-1}`` (column j loses u times column i); loops get both.
    """
    _check_indices(rep, v, i, j)
    u = param(v, i, j)
    U = Polynomial.var(u)
    g = _elementary(rep.n, i, j, U)
    g_inv = _elementary(rep.n, i, j, -U)
    sigma = {}
    for a in rep.arrows:
        if a.head != v and a.tail != v:
            continue
        M = rep.matrices[a.id]
        if a.head == v:
            M = matrix_product(g, M)
        if a.tail == v:
            M = matrix_product(M, g_inv)
        original = rep.matrices[a.id]
        for r in range(M.rows):
            for c in range(M.cols):
                old = original.entries[r][c]
                new = M.entries[r][c]
                if old:
                    (var,) = old.variables()
                    if new != old:
                        sigma[var] = new
                elif new:
                    raise AssertionError(f"action leaves the filtered space at {a.id}[{r + 1},{c + 1}]")
    return OneParamAction(v, i, j, u, sigma)


def action_derivation(rep: GeneralRep, v: str, i: int, j: int) -> Derivation:
    """The u-linear part of :func:`one_param_substitution`."""
    act = one_param_substitution(rep, v, i, j)
    return Derivation({x: img.coefficient_of(act.parameter, 1) for x, img in act.sigma.items()})


def generator_derivations(rep: GeneralRep, all_pairs: bool = False) -> list:
    """Derivations ``D_{v,i,i+1}`` for every group vertex (or all ``i < j``)."""
    out = []
    n = rep.n
    for v in rep.group_vertices:
        pairs = (
            [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            if all_pairs
            else [(i, i + 1) for i in range(1, n)]
        )
        for i, j in pairs:
            out.append(((v, i, j), action_derivation(rep, v, i, j)))
    return out


def path_matrix(rep: GeneralRep, p: PathWord) -> PolyMatrix:
    """Product of arrow matrices along ``p``; identity for a trivial path."""
    q = rep.quiver
    p.check(q)
    if not p.arrows:
        return PolyMatrix.identity(rep.dim(p.vertex))
    M = rep.matrices[p.arrows[0]]
    for a in p.arrows[1:]:
        M = matrix_product(M, rep.matrices[a])
    return M


def is_invariant(rep: GeneralRep, f: Polynomial) -> bool:
    """Invariance under the unipotent group, checked two ways.

    The derivation check uses the simple generators ``D_{v,i,i+1}``; the
    substitution check tests ``f(u . A) == f`` identically in u for the same
    one-parameter subgroups. The two must agree.
    """
    foreign = [x for x in f.variables() if x.kind != COORD or x not in rep._var_set]
    if foreign:
        raise ValueError(f"polynomial uses variables outside the representation: {foreign[0].name}")
    by_derivation = True
    by_substitution = True
    for v in rep.group_vertices:
        for i in range(1, rep.n):
            act = one_param_substitution(rep, v, i, i + 1)
            D = Derivation({x: img.coefficient_of(act.parameter, 1) for x, img in act.sigma.items()})
            if D(f):
                by_derivation = False
            if act(f) != f:
                by_substitution = False
    if by_derivation != by_substitution:
        raise AssertionError("derivation and substitution invariance checks disagree")
    return by_derivation
