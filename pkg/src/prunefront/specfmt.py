"""Text formats and plot emission.

Grammars::

    seq    := WORD "[" WORD+ "]"              right-infinite, e.g. 1[0]
    left   := "[" WORD+ "]" WORD "."          left-infinite, e.g. [0]11.
    point  := "[" WORD+ "]" WORD "." seq      e.g. [0]1100010.0[1]
            | "[" WORD+ "]"                   bi-infinite periodic, e.g. [110]
    disks  := lines  "disk NAME = (POINT, POINT)"
    rects  := lines  "rect NAME xL=SEQ xR=SEQ yL=LEFT yU=LEFT"

``#`` starts a comment in disk and rectangle files.
"""
from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from xml.sax.saxutils import escape

from .markov import Rectangle
from .plane import Point, disk_from_vertices, VertexError
from .prune import PruningCollection
from .shiftspace import CylinderWord, ResourceError, _budget, cylinder_meets_pruned
from .symseq import EPSeq, invariant_coordinate, max_completion, min_completion

__all__ = [
    "ParseError",
    "parse_seq",
    "parse_left",
    "parse_point",
    "parse_disks",
    "parse_rects",
    "parse_seq_list",
    "format_seq",
    "format_left",
    "format_point",
    "format_disks",
    "format_rects",
    "bundled",
    "load_bundled_disks",
    "load_table1",
    "RegionBox",
    "region_boxes",
    "emit_regions",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class _Cursor:
    def __init__(self, text: str, line: int = 1, col: int = 1):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.col0 + self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def word(self) -> str:
        start = self.pos
        while self.peek() in ("0", "1") and self.peek():
            self.pos += 1
        return self.text[start:self.pos]

    def period(self) -> str:
        self.expect("[")
        at = self.pos
        w = self.word()
        if not w:
            self.pos = at
            raise self.error("empty period")
        self.expect("]")
        return w

    def end(self) -> None:
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.peek()!r}")


def _seq(cur: _Cursor) -> EPSeq:
    pre = cur.word()
    per = cur.period()
    return EPSeq(pre, per)


def _left(cur: _Cursor) -> EPSeq:
    per = cur.period()
    pre = cur.word()
    return EPSeq(pre[::-1], per[::-1])


def parse_seq(text: str, *, line: int = 1, col: int = 1) -> EPSeq:
    cur = _Cursor(text.strip(), line, col)
    s = _seq(cur)
    cur.end()
    return s


def parse_left(text: str, *, line: int = 1, col: int = 1) -> EPSeq:
    """Left-infinite literal ``[W]U.`` as a vertical reading (reverse of ``U``, then ``W`` reversed)."""
    cur = _Cursor(text.strip(), line, col)
    v = _left(cur)
    cur.expect(".")
    cur.end()
    return v


def parse_point(text: str, *, line: int = 1, col: int = 1) -> Point:
    cur = _Cursor(text.strip(), line, col)
    per = cur.period()
    if cur.pos == len(cur.text):
        return Point(EPSeq("", per[::-1]), EPSeq("", per))
    cur.pos = 0
    v = _left(cur)
    cur.expect(".")
    h = _seq(cur)
    cur.end()
    return Point(v, h)


def parse_seq_list(text: str) -> list[EPSeq]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            out.append(parse_seq(body, line=lineno, col=1 + len(body) - len(body.lstrip())))
    return out


_DISK = re.compile(r"\s*disk\s+(?P<name>\S+)\s*=\s*\(\s*(?P<p0>[^,\s]+)\s*,\s*(?P<p1>[^)\s]+)\s*\)\s*$")
_RECT_HEAD = re.compile(r"\s*rect\s+(?P<name>\S+)\s+(?P<rest>.*)$")
_FIELD = re.compile(r"(?P<key>xL|xR|yL|yU)=(?P<val>\S+)")


def parse_disks(text: str) -> PruningCollection:
    disks: list[tuple[str, object]] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = _DISK.match(body)
        if not m:
            raise ParseError("expected 'disk NAME = (POINT, POINT)'", lineno, 1 + len(body) - len(body.lstrip()))
        name = m["name"]
        if name in seen:
            raise ParseError(f"duplicate disk name {name!r} (first on line {seen[name]})", lineno, m.start("name") + 1)
        seen[name] = lineno
        p0 = parse_point(m["p0"], line=lineno, col=m.start("p0") + 1)
        p1 = parse_point(m["p1"], line=lineno, col=m.start("p1") + 1)
        try:
            disks.append((name, disk_from_vertices(p0, p1)))
        except VertexError as exc:
            raise ParseError(str(exc), lineno, m.start("p0") + 1) from exc
    return PruningCollection(tuple(disks))


def parse_rects(text: str) -> list[Rectangle]:
    rects = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = _RECT_HEAD.match(body)
        if not m:
            raise ParseError("expected 'rect NAME xL=.. xR=.. yL=.. yU=..'", lineno, 1)
        name = m["name"]
        if name in seen:
            raise ParseError(f"duplicate rectangle name {name!r} (first on line {seen[name]})", lineno, m.start("name") + 1)
        seen[name] = lineno
        vals = {}
        base = m.start("rest")
        rest = m["rest"]
        pos = 0
        for f in _FIELD.finditer(rest):
            gap = rest[pos:f.start()]
            if gap.strip():
                raise ParseError(f"unexpected {gap.strip()!r}", lineno, base + pos + 1)
            key = f["key"]
            if key in vals:
                raise ParseError(f"field {key} given twice", lineno, base + f.start() + 1)
            col = base + f.start("val") + 1
            parser = parse_seq if key.startswith("x") else parse_left
            vals[key] = parser(f["val"], line=lineno, col=col)
            pos = f.end()
        if rest[pos:].strip():
            raise ParseError(f"unexpected {rest[pos:].strip()!r}", lineno, base + pos + 1)
        missing = [k for k in ("xL", "xR", "yL", "yU") if k not in vals]
        if missing:
            raise ParseError(f"missing fields {missing}", lineno, 1)
        try:
            rects.append(Rectangle(name, vals["xL"], vals["xR"], vals["yL"], vals["yU"]))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, 1) from exc
    return rects


def format_seq(s: EPSeq) -> str:
    return str(s)


def format_left(v: EPSeq) -> str:
    return f"[{v.per[::-1]}]{v.pre[::-1]}."


def format_point(q: Point) -> str:
    return str(q)


def format_disks(c: PruningCollection) -> str:
    lines = []
    for name, d in c:
        p0, p1 = d.vertices()
        lines.append(f"disk {name} = ({p0}, {p1})")
    return "\n".join(lines) + "\n"


def format_rects(rects: list[Rectangle]) -> str:
    return "".join(
        f"rect {r.name} xL={r.x_lo} xR={r.x_hi} yL={format_left(r.y_lo)} yU={format_left(r.y_hi)}\n"
        for r in rects
    )


def bundled(name: str) -> str:
    """Text of a data file shipped with the package."""
    return resources.files("prunefront").joinpath("data", name).read_text(encoding="utf-8")


def load_bundled_disks(name: str) -> PruningCollection:
    return parse_disks(bundled(name))


def load_table1() -> list[Rectangle]:
    return parse_rects(bundled("table1.rects"))


# -- plot emission -----------------------------------------------------------


@dataclass(frozen=True, order=True)
class RegionBox:
    """Image of a centered cylinder in the unit square, ``x = theta(h)``, ``y = theta(v)``."""

    iterate: int
    disk: str
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    def __post_init__(self) -> None:
        if not (0 <= self.x0 < self.x1 <= 1 and 0 <= self.y0 < self.y1 <= 1):
            raise ValueError(f"degenerate box {self}")


def _span(word: str) -> tuple[Fraction, Fraction]:
    return invariant_coordinate(min_completion(word)), invariant_coordinate(max_completion(word))


def region_boxes(c: PruningCollection, n_range: range, depth: int, *, budget: int | None = None) -> list[RegionBox]:
    """Depth-``depth`` cylinders meeting ``f^n`` of each disk interior, sorted.

    Cylinders are refined one symbol per side at a time and only children of
    meeting cylinders are examined, so the boxes at depth ``d + 1`` always lie
    inside the boxes at depth ``d``.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    limit = _budget(budget)
    boxes: list[RegionBox] = []
    for n in n_range:
        for name, d in c:
            single = PruningCollection(((name, d),))
            live = [("", "")]
            for _ in range(depth):
                nxt = []
                for left, right in live:
                    for a in "01":
                        for b in "01":
                            if cylinder_meets_pruned(CylinderWord(left + a, right + b), single, n):
                                nxt.append((left + a, right + b))
                if len(boxes) + len(nxt) > limit:
                    raise ResourceError(f"more than {limit} boxes")
                live = nxt
            for left, right in live:
                x0, x1 = _span(right)
                y0, y1 = _span(left)
                boxes.append(RegionBox(n, name, x0, x1, y0, y1))
    return sorted(boxes)


_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]


def _svg(boxes: list[RegionBox], n_range: range, size: int = 512) -> str:
    pad, legend = 16, 120
    o = io.StringIO()
    o.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    o.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size + 2 * pad + legend}" height="{size + 2 * pad}">\n'
    )
    o.write(f'<rect x="{pad}" y="{pad}" width="{size}" height="{size}" fill="white" stroke="black"/>\n')
    colors = {n: _PALETTE[i % len(_PALETTE)] for i, n in enumerate(n_range)}
    for b in boxes:
        # y grows upward in the symbol square
        x = pad + float(b.x0) * size
        y = pad + (1 - float(b.y1)) * size
        w = float(b.x1 - b.x0) * size
        h = float(b.y1 - b.y0) * size
        o.write(
            f'<rect x="{x:.4f}" y="{y:.4f}" width="{w:.4f}" height="{h:.4f}" '
            f'fill="{colors[b.iterate]}" fill-opacity="0.5" stroke="none">'
            f"<title>n={b.iterate} {escape(b.disk)}</title></rect>\n"
        )
    for i, n in enumerate(n_range):
        ly = pad + 10 + 20 * i
        o.write(f'<rect x="{size + 2 * pad}" y="{ly}" width="12" height="12" fill="{colors[n]}" fill-opacity="0.5"/>\n')
        o.write(f'<text x="{size + 2 * pad + 18}" y="{ly + 11}" font-size="12">n = {n}</text>\n')
    o.write("</svg>\n")
    return o.getvalue()


def _csv(boxes: list[RegionBox]) -> str:
    o = io.StringIO()
    w = csv.writer(o, lineterminator="\n")
    w.writerow(["n", "disk", "x0", "x1", "y0", "y1"])
    for b in boxes:
        w.writerow([b.iterate, b.disk, b.x0, b.x1, b.y0, b.y1])
    return o.getvalue()


def emit_regions(
    c: PruningCollection, n_range: range, depth: int, fmt: str = "svg", *, budget: int | None = None
) -> str:
    """SVG or CSV picture of the pruned region's images for ``n`` in ``n_range``."""
    if fmt not in ("svg", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    boxes = region_boxes(c, n_range, depth, budget=budget)
    return _svg(boxes, n_range) if fmt == "svg" else _csv(boxes)
