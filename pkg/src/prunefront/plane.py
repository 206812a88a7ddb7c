"""The symbol square: bi-infinite points, order intervals and symbolic (c,e)-disks.

A point ``... q_-2 q_-1 . q_0 q_1 ...`` is stored as two one-sided
sequences: the vertical reading ``v = q_-1 q_-2 ...`` and the horizontal
coordinate ``h = q_0 q_1 ...``. Both are ordered by the unimodal order,
which is the left-right (resp. bottom-top) order of the horseshoe's
Cantor set.

A normal-form disk with base height ``w`` and tail ``s`` has vertices
``w.0s`` and ``w.1s``. Its C-side is a U-shaped stable arc whose legs are
the vertical lines ``x = 0s`` and ``x = 1s`` above height ``w`` (joined
outside the square, over the top); its E-side is the horizontal segment
at height ``w`` between them. So inside the square the disk is the strip
``0s <= h <= 1s`` capped below at ``v >= w``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .symseq import BOTTOM, TOP, EPSeq, Ordering, invariant_coordinate, unimodal_cmp

__all__ = [
    "Point",
    "OrderInterval",
    "CEDisk",
    "StableSegment",
    "UnstableSegment",
    "VertexError",
    "shift_fwd",
    "shift_back",
    "shift_by",
    "differing_entries",
    "disk_from_vertices",
    "kneading_disk",
    "image_disk",
    "c_image",
    "e_preimage",
    "interior_contains",
    "closed_contains",
    "seg_meets_interior",
]


@dataclass(frozen=True, slots=True)
class Point:
    v: EPSeq
    h: EPSeq

    def __str__(self) -> str:
        left = f"[{self.v.per[::-1]}]{self.v.pre[::-1]}"
        return f"{left}.{self.h}"

    def entry(self, i: int) -> int:
        """Symbol ``q_i`` (negative indices read the vertical coordinate)."""
        return self.h.at(i) if i >= 0 else self.v.at(-i - 1)


def shift_fwd(q: Point) -> Point:
    return Point(q.v.prepend(q.h.head), q.h.shift())


def shift_back(q: Point) -> Point:
    return Point(q.v.shift(), q.h.prepend(q.v.head))


def shift_by(q: Point, n: int) -> Point:
    """``sigma^n(q)``; negative ``n`` shifts backwards."""
    if n >= 0:
        return Point(q.v.prepend(q.h.prefix(n)[::-1]), q.h.shift(n))
    n = -n
    return Point(q.v.shift(n), q.h.prepend(q.v.prefix(n)[::-1]))


@dataclass(frozen=True, slots=True)
class OrderInterval:
    """An interval of one-sided sequences in the unimodal order."""

    lo: EPSeq
    hi: EPSeq
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self) -> None:
        c = unimodal_cmp(self.lo, self.hi)
        if c is Ordering.GREATER:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")
        if c is Ordering.EQUAL and (self.lo_open or self.hi_open):
            raise ValueError("degenerate interval cannot have an open end")

    @classmethod
    def spanning(cls, a: EPSeq, b: EPSeq, *, open_: bool = False) -> "OrderInterval":
        """Interval with endpoints ``a`` and ``b`` in whichever order they fall."""
        if a > b:
            a, b = b, a
        return cls(a, b, open_, open_)

    def __str__(self) -> str:
        return f"{'(' if self.lo_open else '['}{self.lo}, {self.hi}{')' if self.hi_open else ']'}"

    def contains(self, x: EPSeq) -> bool:
        c_lo = unimodal_cmp(self.lo, x)
        c_hi = unimodal_cmp(x, self.hi)
        ok_lo = c_lo is Ordering.LESS or (c_lo is Ordering.EQUAL and not self.lo_open)
        ok_hi = c_hi is Ordering.LESS or (c_hi is Ordering.EQUAL and not self.hi_open)
        return ok_lo and ok_hi

    def meets(self, other: "OrderInterval", *, dense: bool = True) -> bool:
        """Whether the two intervals intersect.

        ``dense=True`` asks about the real segments in the plane, where any
        ``lo < hi`` leaves room in between. ``dense=False`` asks for a common
        sequence; then an open interval between the two sides of a Cantor
        gap is empty.
        """
        c = unimodal_cmp(self.lo, other.lo)
        lo, lo_open = (other.lo, other.lo_open) if c is Ordering.LESS else (self.lo, self.lo_open)
        if c is Ordering.EQUAL:
            lo_open = self.lo_open or other.lo_open
        c = unimodal_cmp(self.hi, other.hi)
        hi, hi_open = (self.hi, self.hi_open) if c is Ordering.LESS else (other.hi, other.hi_open)
        if c is Ordering.EQUAL:
            hi_open = self.hi_open or other.hi_open
        order = unimodal_cmp(lo, hi)
        if order is Ordering.GREATER:
            return False
        if order is Ordering.EQUAL:
            return not (lo_open or hi_open)
        if dense or not (lo_open and hi_open):
            return True
        return invariant_coordinate(lo) < invariant_coordinate(hi)

    def is_empty(self) -> bool:
        """No sequence lies in the interval."""
        return not self.meets(self, dense=False)


@dataclass(frozen=True, slots=True)
class StableSegment:
    """Vertical segment at horizontal coordinate ``x``."""

    x: EPSeq
    heights: OrderInterval

    def __str__(self) -> str:
        return f"stable x={self.x} heights={self.heights}"


@dataclass(frozen=True, slots=True)
class UnstableSegment:
    """Horizontal segment at vertical reading ``y``."""

    y: EPSeq
    span: OrderInterval

    def __str__(self) -> str:
        return f"unstable y={self.y} span={self.span}"


@dataclass(frozen=True, slots=True)
class CEDisk:
    """``f^offset(D(w.0s, w.1s))``."""

    offset: int
    w: EPSeq
    s: EPSeq

    @property
    def normal(self) -> "CEDisk":
        return CEDisk(0, self.w, self.s) if self.offset else self

    @property
    def left(self) -> EPSeq:
        return self.s.prepend(0)

    @property
    def right(self) -> EPSeq:
        return self.s.prepend(1)

    @property
    def horizontal(self) -> OrderInterval:
        return OrderInterval(self.left, self.right, True, True)

    @property
    def vertical(self) -> OrderInterval | None:
        """Open-below heights of the interior, or ``None`` if the base is the top."""
        if self.w == TOP:
            return None
        return OrderInterval(self.w, TOP, True, False)

    def vertices(self) -> tuple[Point, Point]:
        p0 = Point(self.w, self.left)
        p1 = Point(self.w, self.right)
        return shift_by(p0, self.offset), shift_by(p1, self.offset)

    def c_legs(self) -> tuple[StableSegment, StableSegment]:
        up = OrderInterval(self.w, TOP)
        return StableSegment(self.left, up), StableSegment(self.right, up)

    def e_side(self) -> UnstableSegment:
        return UnstableSegment(self.w, OrderInterval(self.left, self.right))


class VertexError(ValueError):
    def __init__(self, message: str, indices: list[int]):
        super().__init__(message)
        self.indices = indices


def _differing(a: EPSeq, b: EPSeq) -> tuple[list[int], bool]:
    # indices where a, b differ, and whether they differ infinitely often
    bound = max(len(a.pre), len(b.pre)) + lcm(len(a.per), len(b.per))
    pa, pb = a.prefix(bound), b.prefix(bound)
    idx = [i for i in range(bound) if pa[i] != pb[i]]
    tail = max(len(a.pre), len(b.pre))
    return idx, any(i >= tail for i in idx)


def differing_entries(p: Point, q: Point) -> tuple[list[int], bool]:
    """Indices ``i`` with ``p_i != q_i`` (vertical entries negative).

    The flag is true when the points differ at infinitely many entries; the
    list then holds only the first period's worth.
    """
    hi, h_inf = _differing(p.h, q.h)
    vi, v_inf = _differing(p.v, q.v)
    return sorted([-(i + 1) for i in vi] + hi), h_inf or v_inf


def disk_from_vertices(p0: Point, p1: Point) -> CEDisk:
    idx, infinite = differing_entries(p0, p1)
    if infinite or len(idx) != 1:
        what = "infinitely many" if infinite else str(len(idx))
        raise VertexError(f"vertices must differ at exactly one entry, found {what}: {idx}", idx)
    d = idx[0]
    q = shift_by(p0, d)
    return CEDisk(-d, q.v, q.h.shift())


def kneading_disk(kappa: EPSeq) -> CEDisk:
    """The one-disk front ``D([0].0 kappa, [0].1 kappa)`` of the kneading family."""
    return CEDisk(0, BOTTOM, kappa)


def image_disk(D: CEDisk, n: int) -> CEDisk:
    return CEDisk(D.offset + n, D.w, D.s)


def c_image(D: CEDisk, n: int) -> StableSegment:
    """``f^n(C)`` for the normal form of ``D``, as a vertical segment (``n >= 1``).

    ``f(C)`` is the full-span segment at ``x = s`` between ``0w`` and ``1w``;
    each further iterate prepends the next symbol of ``s`` to both heights.
    """
    if n < 1:
        raise ValueError("c_image needs n >= 1")
    rev = D.s.prefix(n - 1)[::-1]
    ends = (D.w.prepend(rev + "0"), D.w.prepend(rev + "1"))
    return StableSegment(D.s.shift(n - 1), OrderInterval.spanning(*ends))


def e_preimage(D: CEDisk, n: int) -> UnstableSegment:
    """``f^-n(E)`` for the normal form of ``D``, as a horizontal segment (``n >= 1``)."""
    if n < 1:
        raise ValueError("e_preimage needs n >= 1")
    rev = D.w.prefix(n)[::-1]
    ends = (D.s.prepend(rev + "0"), D.s.prepend(rev + "1"))
    return UnstableSegment(D.w.shift(n), OrderInterval.spanning(*ends))


def interior_contains(D: CEDisk, q: Point) -> bool:
    q = shift_by(q, -D.offset)
    return (
        unimodal_cmp(D.left, q.h) is Ordering.LESS
        and unimodal_cmp(q.h, D.right) is Ordering.LESS
        and unimodal_cmp(q.v, D.w) is Ordering.GREATER
    )


def closed_contains(D: CEDisk, q: Point) -> bool:
    q = shift_by(q, -D.offset)
    return (
        unimodal_cmp(D.left, q.h) is not Ordering.GREATER
        and unimodal_cmp(q.h, D.right) is not Ordering.GREATER
        and unimodal_cmp(q.v, D.w) is not Ordering.LESS
    )


def seg_meets_interior(D: CEDisk, seg: StableSegment | UnstableSegment) -> bool:
    """Whether a segment in the square meets the interior of ``D``'s normal form."""
    vertical = D.vertical
    if vertical is None:
        return False
    if isinstance(seg, StableSegment):
        return D.horizontal.contains(seg.x) and seg.heights.meets(vertical)
    return vertical.contains(seg.y) and seg.span.meets(D.horizontal)

