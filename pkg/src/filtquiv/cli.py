"""Quiver description files and the ``filtquiv`` command line.

File format, one declaration per line::

    quiver J2
    vertex 1
    arrow a1 : 1 -> 1      # comments run to end of line
    frame a0 : * -> 1

Exit codes: 0 on PASS / CONSISTENT (and for informational commands),
1 on FAIL / INCONSISTENT, 2 on usage or parse errors, 3 when a size guard aborts.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .errors import PreconditionError, ResourceGuardError
from .filtrep import RepConfig, build_general_rep
from .invariants import DEFAULT_MAX_MONOMIALS, invariant_basis, verify_theorem1, verify_theorem2
from .polyring import Polynomial, coord
from .quiver import FramedQuiver, PathwayLimitError, Quiver, classify
from .tableaux import Bitableau, block_standard_terms, enumerate_row_generators, eval_bideterminant

__all__ = ["DslError", "QuiverDoc", "parse_quiver_dsl", "run_command", "Report", "main"]

SCHEMA = 1

_ID = r"[A-Za-z0-9_']+"
_LINE_RES = {
    "quiver": re.compile(r"quiver\s+(?P<name>\S+)"),
    "vertex": re.compile(rf"vertex\s+(?P<id>{_ID})"),
    "arrow": re.compile(rf"arrow\s+(?P<id>{_ID})\s*:\s*(?P<tail>{_ID})\s*->\s*(?P<head>{_ID})"),
    "frame": re.compile(rf"frame\s+(?P<id>{_ID})\s*:\s*\*\s*->\s*(?P<head>{_ID})"),
}


class DslError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class QuiverDoc:
    name: str
    vertices: list = field(default_factory=list)  # (id, (line, col))
    arrows: list = field(default_factory=list)  # (id, tail, head, (line, col))
    frame: tuple | None = None  # (id, head, (line, col))

    def _key(self):
        return (
            self.name,
            [v for v, _ in self.vertices],
            [(a, t, h) for a, t, h, _ in self.arrows],
            None if self.frame is None else self.frame[:2],
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, QuiverDoc) and self._key() == other._key()

    def to_quiver(self) -> Quiver | FramedQuiver:
        q = Quiver(
            tuple(v for v, _ in self.vertices),
            tuple((a, t, h) for a, t, h, _ in self.arrows),
            self.name,
        )
        if self.frame is None:
            return q
        fid, head, _ = self.frame
        framed_vertex = head + "'"
        while framed_vertex in q.vertices:
            framed_vertex += "'"
        return FramedQuiver(q, framed_vertex, fid, head)

    def serialize(self) -> str:
        lines = [f"quiver {self.name}"]
        lines += [f"vertex {v}" for v, _ in self.vertices]
        lines += [f"arrow {a} : {t} -> {h}" for a, t, h, _ in self.arrows]
        if self.frame is not None:
            lines.append(f"frame {self.frame[0]} : * -> {self.frame[1]}")
        return "\n".join(lines) + "\n"


def parse_quiver_dsl(text: str) -> QuiverDoc:
    doc = None
    vertex_ids: dict = {}
    arrow_ids: dict = {}
    pending = []  # endpoint references checked after all vertices are known
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        col = len(body) - len(body.lstrip()) + 1
        keyword = stripped.split()[0]
        pattern = _LINE_RES.get(keyword)
        match = pattern.fullmatch(stripped) if pattern else None
        if match is None:
            if pattern is None:
                raise DslError(f"unknown declaration {keyword!r}", lineno, col)
            raise DslError(f"malformed {keyword} declaration", lineno, col)

        def at(group):
            return (lineno, col + match.start(group))

        if keyword == "quiver":
            if doc is not None:
                raise DslError("second quiver header", lineno, col)
            doc = QuiverDoc(match["name"])
            continue
        if doc is None:
            raise DslError("expected 'quiver <name>' header first", lineno, col)
        if keyword == "vertex":
            vid = match["id"]
            if vid in vertex_ids:
                raise DslError(f"duplicate vertex {vid}", *at("id"))
            vertex_ids[vid] = at("id")
            doc.vertices.append((vid, at("id")))
        elif keyword == "arrow":
            aid = match["id"]
            if aid in arrow_ids:
                raise DslError(f"duplicate arrow {aid}", *at("id"))
            arrow_ids[aid] = at("id")
            doc.arrows.append((aid, match["tail"], match["head"], at("id")))
            pending += [(match["tail"], at("tail")), (match["head"], at("head"))]
        else:
            if doc.frame is not None:
                raise DslError("multiple framings", lineno, col)
            fid = match["id"]
            if fid in arrow_ids:
                raise DslError(f"duplicate arrow {fid}", *at("id"))
            arrow_ids[fid] = at("id")
            doc.frame = (fid, match["head"], at("id"))
            pending.append((match["head"], at("head")))
    if doc is None:
        raise DslError("empty document: missing 'quiver <name>' header", 1, 1)
    for vid, loc in pending:
        if vid not in vertex_ids:
            raise DslError(f"undeclared vertex {vid}", *loc)
    return doc


@dataclass
class Report:
    command: str
    quiver: str | None
    n: int | None
    m: int | None
    d: int | None
    verdict: str
    data: dict
    millis: int | None = None

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "quiver": self.quiver,
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "verdict": self.verdict,
            "data": self.data,
            "version": __version__,
            "millis": self.millis,
        }

    def to_text(self) -> str:
        head = [f"{k}: {v}" for k, v in self.to_json().items() if k != "data"]
        return "\n".join(head + ["data:", _text_block(self.data, 1)])

    @property
    def exit_code(self) -> int:
        return 1 if self.verdict in ("FAIL", "INCONSISTENT") else 0


def _text_block(value, depth: int) -> str:
    pad = "  " * depth
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text_block(v, depth + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(value, list):
        lines = []
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_text_block(v, depth + 1))
            else:
                lines.append(f"{pad}- {v}")
        return "\n".join(lines)
    return f"{pad}{value}"


REFERENCE_ROWS = "(2 | 1)@[0]\n(2 | 2)@[0]\n(1 2 | 1 2)@[1,0]\n(2 | 1)@[1,0]"


def _reference_bideterminant() -> Report:
    from .quiver import make_family
    from .tableaux import is_block_standard

    fq = FramedQuiver(make_family("EquiorientedA", 1), framing_arrow="a0")
    rep = build_general_rep(RepConfig(fq, 2, 2))
    bt = Bitableau.from_text(REFERENCE_ROWS)
    value = eval_bideterminant(bt, rep)
    x = {(i, j): Polynomial.var(coord("a0", i, j)) for i in (1, 2) for j in (1, 2)}
    a11 = Polynomial.var(coord("a1", 1, 1))
    a22 = Polynomial.var(coord("a1", 2, 2))
    expected = x[2, 1] ** 2 * x[2, 2] * a11 * a22**2 * (x[1, 1] * x[2, 2] - x[1, 2] * x[2, 1])
    ok = value == expected and is_block_standard(bt)
    return Report(
        "verify-example",
        fq.name,
        2,
        2,
        None,
        "PASS" if ok else "FAIL",
        {
            "example": "4.6",
            "bitableau": bt.to_text().splitlines(),
            "block_standard": is_block_standard(bt),
            "polynomial": value.to_text(),
            "expected": expected.to_text(),
        },
    )


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for {args.command}")


class UsageError(ValueError):
    pass


def run_command(cmd: str, args) -> Report:
    """Dispatch one command. ``args`` carries quiver (parsed), n, m, d."""
    if cmd == "verify-example":
        if args.example != "4.6":
            raise UsageError(f"unknown example {args.example!r}; available: 4.6")
        return _reference_bideterminant()
    q = args.quiver
    if cmd in ("classify", "pathways"):
        base = q.quiver if isinstance(q, FramedQuiver) else q
        rep = classify(base)
        data = rep.to_json()
        if cmd == "classify":
            data.pop("pathways", None)
        return Report(cmd, base.name, None, None, None, rep.outcome, data)
    if cmd == "invariants":
        _need(args, "n", "d")
        if isinstance(q, FramedQuiver):
            _need(args, "m")
        cfg = RepConfig(q, args.n, args.m or 0)
        kernel = invariant_basis(build_general_rep(cfg), args.d, args.max_monomials)
        return Report(cmd, q.name, args.n, args.m, args.d, "OK", kernel.to_json())
    if cmd == "generators":
        if not isinstance(q, FramedQuiver):
            raise UsageError("generators needs a framed quiver (add a 'frame' line)")
        _need(args, "n", "m", "d")
        rep = build_general_rep(RepConfig(q, args.n, args.m))
        rows = enumerate_row_generators(q, rep, args.n, args.m)
        terms = block_standard_terms(q, rep, args.d)
        data = {
            "row_generators": [str(r) for r in rows],
            "block_standard": [
                {"diagonal": Polynomial.monomial(t.diagonal).to_text(), "bitableau": [str(r) for r in t.bitableau.rows], "polynomial": t.poly.to_text()}
                for t in terms
            ],
        }
        return Report(cmd, q.name, args.n, args.m, args.d, "OK", data)
    if cmd == "verify-thm1":
        _need(args, "n", "d")
        base = q.quiver if isinstance(q, FramedQuiver) else q
        r = verify_theorem1(base, args.n, args.d, args.max_monomials)
        return Report(cmd, base.name, args.n, None, args.d, r.verdict, r.to_json())
    if cmd == "verify-thm2":
        if not isinstance(q, FramedQuiver):
            raise UsageError("verify-thm2 needs a framed quiver (add a 'frame' line)")
        _need(args, "n", "m", "d")
        r = verify_theorem2(q, args.n, args.m, args.d, args.max_monomials)
        return Report(cmd, q.name, args.n, args.m, args.d, r.verdict, r.to_json())
    raise UsageError(f"unknown command {cmd!r}")


COMMANDS = ("classify", "pathways", "invariants", "generators", "verify-thm1", "verify-thm2")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="filtquiv", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"filtquiv {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("file", help="quiver description file ('-' for stdin)")
        s.add_argument("--n", type=int)
        s.add_argument("--m", type=int)
        s.add_argument("--d", type=int)
        _common(s)
    s = sub.add_parser("verify-example")
    s.add_argument("example", help="example id, e.g. 4.6")
    _common(s)
    return p


def _common(s):
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.add_argument("--max-monomials", type=int, default=DEFAULT_MAX_MONOMIALS)
    s.add_argument("--timing", action="store_true", help="record wall time in 'millis'")


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    start = time.perf_counter()
    try:
        if args.command != "verify-example":
            text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
            args.quiver = parse_quiver_dsl(text).to_quiver()
            for name in ("n", "m", "d"):
                value = getattr(args, name)
                if value is not None and value < (0 if name == "d" else 1):
                    raise UsageError(f"--{name} out of range: {value}")
        report = run_command(args.command, args)
    except (DslError, UsageError, PreconditionError, OSError, ValueError) as exc:
        print(f"filtquiv: error: {exc}", file=sys.stderr)
        return 2
    except (ResourceGuardError, PathwayLimitError) as exc:
        print(f"filtquiv: aborted: {exc}", file=sys.stderr)
        return 3
    if args.timing:
        report.millis = int((time.perf_counter() - start) * 1000)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
