"""Quivers, pathways (square-free paths) and the at-most-two-pathways test."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "Arrow",
    "Quiver",
    "FramedQuiver",
    "PathWord",
    "PathwayReport",
    "AT_MOST_TWO",
    "MORE_THAN_TWO",
    "PathwayLimitError",
    "is_square_free",
    "enumerate_pathways",
    "classify",
    "pathways_from",
    "make_family",
]

AT_MOST_TWO = "AtMostTwo"
MORE_THAN_TWO = "MoreThanTwo"


class PathwayLimitError(RuntimeError):
    """The defensive path-length cap was reached before the search decided."""


@dataclass(frozen=True)
class Arrow:
    id: str
    tail: str
    head: str

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(
            self,
            "arrows",
            tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in self.arrows),
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow id")
        vs = set(self.vertices)
        for a in self.arrows:
            for end in (a.tail, a.head):
                if end not in vs:
                    raise ValueError(f"arrow {a.id}: undeclared vertex {end}")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], name: str = "", vertices: Sequence = ()) -> "Quiver":
        """Build from ``(tail, head)`` pairs; arrows are named a1, a2, ..."""
        edges = [(str(t), str(h)) for t, h in edges]
        vs = [str(v) for v in vertices]
        for t, h in edges:
            for v in (t, h):
                if v not in vs:
                    vs.append(v)
        arrows = [Arrow(f"a{k}", t, h) for k, (t, h) in enumerate(edges, 1)]
        return cls(tuple(vs), tuple(arrows), name)

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise KeyError(arrow_id)

    def arrows_from(self, v: str) -> list:
        return [a for a in self.arrows if a.tail == v]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.tail].add(a.head)
            adj[a.head].add(a.tail)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class FramedQuiver:
    """A quiver plus one framed vertex whose single arrow points into the base."""

    base: Quiver
    framed_vertex: str = "1'"
    framing_arrow: str = "a0"
    target: str = ""

    def __post_init__(self):
        target = self.target or (self.base.vertices[0] if self.base.vertices else "")
        object.__setattr__(self, "target", str(target))
        if self.target not in self.base.vertices:
            raise ValueError(f"framing target {self.target} is not a base vertex")
        if self.framed_vertex in self.base.vertices:
            raise ValueError("framed vertex must be new")
        if any(a.id == self.framing_arrow for a in self.base.arrows):
            raise ValueError("framing arrow id clashes with a base arrow")

    @property
    def arrow0(self) -> Arrow:
        return Arrow(self.framing_arrow, self.framed_vertex, self.target)

    @property
    def quiver(self) -> Quiver:
        """The framed quiver as a plain quiver (framing arrow first)."""
        return Quiver(
            (self.framed_vertex,) + self.base.vertices,
            (self.arrow0,) + self.base.arrows,
            self.base.name + "+frame" if self.base.name else "framed",
        )

    @property
    def name(self) -> str:
        return self.quiver.name

    def arrow_index(self, arrow_id: str) -> int:
        """0 for the framing arrow, 1.. for base arrows in declaration order."""
        if arrow_id == self.framing_arrow:
            return 0
        for k, a in enumerate(self.base.arrows, 1):
            if a.id == arrow_id:
                return k
        raise KeyError(arrow_id)

    def arrow_by_index(self, k: int) -> Arrow:
        if k == 0:
            return self.arrow0
        if not 1 <= k <= len(self.base.arrows):
            raise KeyError(k)
        return self.base.arrows[k - 1]


@dataclass(frozen=True)
class PathWord:
    """A path written right to left: ``arrows = (a_k, ..., a_1)`` means a_1 first.

    The trivial path at a vertex has no arrows and records the vertex.
    """

    arrows: tuple = ()
    vertex: str | None = None

    def __len__(self) -> int:
        return len(self.arrows)

    def source(self, q: Quiver) -> str:
        return q.arrow(self.arrows[-1]).tail if self.arrows else self.vertex

    def target(self, q: Quiver) -> str:
        return q.arrow(self.arrows[0]).head if self.arrows else self.vertex

    def check(self, q: Quiver) -> None:
        if not self.arrows:
            if self.vertex not in q.vertices:
                raise ValueError(f"trivial path at unknown vertex {self.vertex}")
            return
        arrows = [q.arrow(a) for a in reversed(self.arrows)]
        for first, second in zip(arrows, arrows[1:]):
            if first.head != second.tail:
                raise ValueError(f"path not composable at {first.id} -> {second.id}")

    def __str__(self) -> str:
        return "".join(self.arrows) if self.arrows else f"e{self.vertex}"


def _has_square_suffix(word: Sequence) -> bool:
    n = len(word)
    for k in range(1, n // 2 + 1):
        if word[n - k :] == word[n - 2 * k : n - k]:
            return True
    return False


def is_square_free(p: PathWord, q: Quiver | None = None) -> bool:
    """True iff no nonempty factor of ``p`` is immediately repeated."""
    if q is not None:
        p.check(q)
    w = p.arrows
    n = len(w)
    for k in range(1, n // 2 + 1):
        for start in range(n - 2 * k + 1):
            if w[start : start + k] == w[start + k : start + 2 * k]:
                return False
    return True


@dataclass
class PathwayReport:
    outcome: str
    pathways: dict = field(default_factory=dict)
    pair: tuple | None = None
    witnesses: tuple = ()
    max_length: int = 0

    def count(self, i: str, j: str) -> int:
        return len(self.pathways.get((i, j), ()))

    def to_json(self) -> dict:
        out = {"outcome": self.outcome}
        if self.outcome == MORE_THAN_TWO:
            out["pair"] = list(self.pair)
            out["witnesses"] = [str(w) for w in self.witnesses]
        else:
            out["pathways"] = [
                {"from": i, "to": j, "paths": [str(w) for w in ws]}
                for (i, j), ws in self.pathways.items()
            ]
        return out


def enumerate_pathways(q: Quiver, max_length: int | None = None) -> PathwayReport:
    """Breadth-first search over square-free composable words.

    Stops with MoreThanTwo as soon as some ordered vertex pair has three
    pathways; the lists then hold only what was found up to that point.
    Otherwise runs until no word extends and reports all pathways.
    """
    if max_length is None:
        max_length = 4 * max(len(q.arrows), 1) * max(len(q.vertices), 1)
    found = {(v, w): [] for v in q.vertices for w in q.vertices}
    for v in q.vertices:
        found[(v, v)].append(PathWord((), v))
    out_arrows = {v: q.arrows_from(v) for v in q.vertices}
    head = {a.id: a.head for a in q.arrows}

    # words are kept in application order (first arrow first)
    frontier = [((), v) for v in q.vertices]
    length = 0
    while frontier:
        if length >= max_length:
            raise PathwayLimitError(
                f"{q.name or 'quiver'}: square-free words of length {length} remain "
                f"after the cap {max_length}; no decision reached"
            )
        nxt = []
        for word, src in frontier:
            end = head[word[-1]] if word else src
            for a in out_arrows[end]:
                w = word + (a.id,)
                if _has_square_suffix(w):
                    continue
                pair = (src, a.head)
                found[pair].append(PathWord(tuple(reversed(w))))
                if len(found[pair]) == 3:
                    return PathwayReport(
                        MORE_THAN_TWO,
                        pathways=found,
                        pair=pair,
                        witnesses=tuple(found[pair]),
                        max_length=length + 1,
                    )
                nxt.append((w, src))
        frontier = nxt
        length += 1
    return PathwayReport(AT_MOST_TWO, pathways=found, max_length=length - 1 if length else 0)


def classify(q: Quiver) -> PathwayReport:
    """Decide whether every ordered vertex pair has at most two pathways."""
    return enumerate_pathways(q)


def pathways_from(fq: FramedQuiver) -> list:
    """Pathways of the framed quiver starting at the framed vertex, shortest first.

    A word ``p a0`` is square-free iff ``p`` is, since a0 occurs once.
    """
    report = enumerate_pathways(fq.base)
    if report.outcome != AT_MOST_TWO:
        raise ValueError(
            f"base quiver has more than two pathways between {report.pair}; "
            "the pathway set from the framed vertex is not finite"
        )
    out = []
    for v in fq.base.vertices:
        for p in report.pathways[(fq.target, v)]:
            out.append(PathWord(p.arrows + (fq.framing_arrow,)))
    out.sort(key=lambda p: (len(p), tuple(fq.arrow_index(a) for a in reversed(p.arrows))))
    return out


# families

_ORIENTATIONS = ("up", "down", "alternating", "cyclic", "in", "out")


def _orient(edges: list, orientation) -> list:
    """Orient undirected edges ``(u, v)`` with u < v.

    ``orientation`` is "up" (toward higher vertex), "down", "alternating",
    or a sequence of booleans (True flips that edge).
    """
    if isinstance(orientation, str):
        if orientation == "up":
            flips = [False] * len(edges)
        elif orientation == "down":
            flips = [True] * len(edges)
        elif orientation == "alternating":
            flips = [k % 2 == 1 for k in range(len(edges))]
        else:
            raise ValueError(f"unsupported orientation {orientation!r}")
    else:
        flips = [bool(x) for x in orientation]
        if len(flips) != len(edges):
            raise ValueError(f"orientation needs {len(edges)} flags, got {len(flips)}")
    return [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]


def _ade_edges(kind: str, rank: int) -> list:
    if kind == "A":
        if rank < 1:
            raise ValueError("A_r needs r >= 1")
        return [(k, k + 1) for k in range(1, rank)]
    if kind == "D":
        if rank < 4:
            raise ValueError("D_r needs r >= 4")
        return [(k, k + 1) for k in range(1, rank - 1)] + [(rank - 2, rank)]
    if kind == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E_r needs r in 6..8")
        # branch at vertex 3: chain 1-2-3-...-(r-1), extra vertex r attached to 3
        return [(k, k + 1) for k in range(1, rank - 1)] + [(3, rank)]
    raise ValueError(f"unknown Dynkin type {kind!r}")


def _affine_edges(kind: str, rank: int) -> list:
    if kind == "A":
        if rank < 0:
            raise ValueError("affine A_r needs r >= 0")
        if rank == 0:
            return [(1, 1)]
        return [(k, k + 1) for k in range(1, rank + 1)] + [(1, rank + 1)]
    if kind == "D":
        if rank < 4:
            raise ValueError("affine D_r needs r >= 4")
        # chain 1..r-1 with extra leaves r attached to 2 and r+1 attached to r-2
        return [(k, k + 1) for k in range(1, rank - 1)] + [(2, rank), (rank - 2, rank + 1)]
    if kind == "E":
        legs = {6: [2, 2, 2], 7: [1, 3, 3], 8: [1, 2, 5]}.get(rank)
        if legs is None:
            raise ValueError("affine E_r needs r in 6..8")
        return _star_edges(legs)
    raise ValueError(f"unknown affine type {kind!r}")


def _star_edges(legs: Sequence[int]) -> list:
    edges = []
    nxt = 2
    for length in legs:
        if length < 1:
            raise ValueError("leg lengths must be >= 1")
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return edges


def _legs_oriented(legs, orientation) -> list:
    edges = _star_edges(legs)
    if orientation in ("out", "up"):
        return edges
    if orientation in ("in", "down"):
        return [(h, t) for t, h in edges]
    raise ValueError(f"star/comet orientation must be 'in' or 'out', got {orientation!r}")


def make_family(family: str, *args, orientation=None) -> Quiver:
    """Construct a named quiver.

    Families: ``("ADE", kind, rank)``, ``("AffineADE", kind, rank)``,
    ``("Star", legs)``, ``("Comet", legs)``, ``("Jordan", loops)``,
    ``("EquiorientedA", r)``. Vertices are "1", "2", ...; the centre of a star
    or comet is vertex 1. Default orientation points arrows at the
    higher-numbered vertex (outward for stars and comets). The affine A
    family also accepts ``orientation="cyclic"``.
    """
    fam = family.lower()
    if fam == "ade":
        kind, rank = args
        orientation = orientation or "up"
        edges = _orient(_ade_edges(kind.upper(), rank), orientation)
        name = f"{kind.upper()}{rank}[{_oname(orientation)}]"
        return Quiver.from_edges(edges, name, vertices=range(1, rank + 1))
    if fam == "affineade":
        kind, rank = args
        orientation = orientation or "up"
        raw = _affine_edges(kind.upper(), rank)
        nverts = 1 if rank == 0 else rank + 1
        if rank == 0:
            edges = raw
        elif orientation == "cyclic":
            if kind.upper() != "A":
                raise ValueError("cyclic orientation only exists for affine A")
            edges = raw[:-1] + [(rank + 1, 1)]
        else:
            edges = _orient(raw, orientation)
        name = f"~{kind.upper()}{rank}[{_oname(orientation)}]"
        return Quiver.from_edges(edges, name, vertices=range(1, nverts + 1))
    if fam == "star":
        (legs,) = args
        orientation = orientation or "out"
        edges = _legs_oriented(legs, orientation)
        return Quiver.from_edges(
            edges, f"Star{list(legs)}[{orientation}]", vertices=range(1, sum(legs) + 2)
        )
    if fam == "comet":
        (legs,) = args
        orientation = orientation or "out"
        edges = [(1, 1)] + _legs_oriented(legs, orientation)
        return Quiver.from_edges(
            edges, f"Comet{list(legs)}[{orientation}]", vertices=range(1, sum(legs) + 2)
        )
    if fam == "jordan":
        (loops,) = args
        if loops < 0:
            raise ValueError("loop count must be >= 0")
        return Quiver.from_edges([(1, 1)] * loops, f"Jordan{loops}", vertices=[1])
    if fam == "equiorienteda":
        (r,) = args
        if r < 0:
            raise ValueError("r must be >= 0")
        return Quiver.from_edges(
            [(k, k + 1) for k in range(1, r + 1)], f"EqA{r}", vertices=range(1, r + 2)
        )
    raise ValueError(f"unknown family {family!r}")


def _oname(orientation) -> str:
    if isinstance(orientation, str):
        return orientation
    return "".join("1" if f else "0" for f in orientation)
