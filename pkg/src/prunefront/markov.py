"""Order rectangles in the symbol square, their shift images and incidence matrices."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .plane import OrderInterval
from .prune import PruningCollection
from .symseq import EPSeq

__all__ = [
    "Rectangle",
    "TransitionMatrix",
    "PartitionReport",
    "shift_rectangle",
    "rectangles_overlap",
    "transitions",
    "check_partition",
]


@dataclass(frozen=True)
class Rectangle:
    """``[x_lo, x_hi] x [y_lo, y_hi]``; y values are vertical readings."""

    name: str
    x_lo: EPSeq
    x_hi: EPSeq
    y_lo: EPSeq
    y_hi: EPSeq

    def __post_init__(self) -> None:
        if not self.x_lo < self.x_hi:
            raise ValueError(f"{self.name}: need x_lo < x_hi, got {self.x_lo}, {self.x_hi}")
        if not self.y_lo < self.y_hi:
            raise ValueError(f"{self.name}: need y_lo < y_hi, got {self.y_lo}, {self.y_hi}")

    @property
    def single_branch(self) -> bool:
        return self.x_lo.head == self.x_hi.head

    @property
    def xs(self) -> OrderInterval:
        return OrderInterval(self.x_lo, self.x_hi, True, True)

    @property
    def ys(self) -> OrderInterval:
        return OrderInterval(self.y_lo, self.y_hi, True, True)

    def same_box(self, other: "Rectangle") -> bool:
        return (self.x_lo, self.x_hi, self.y_lo, self.y_hi) == (other.x_lo, other.x_hi, other.y_lo, other.y_hi)


def shift_rectangle(r: Rectangle, name: str | None = None) -> Rectangle:
    """Image of a single-branch rectangle under the shift.

    On the branch ``b`` the horizontal coordinate loses its head and the
    vertical reading gains ``b`` in front; both maps reverse order when
    ``b = 1``.
    """
    if not r.single_branch:
        raise ValueError(f"{r.name}: x endpoints lie on different branches ({r.x_lo}, {r.x_hi})")
    b = r.x_lo.head
    xs = (r.x_lo.shift(), r.x_hi.shift())
    ys = (r.y_lo.prepend(b), r.y_hi.prepend(b))
    if b == 1:
        xs, ys = xs[::-1], ys[::-1]
    return Rectangle(name or f"f({r.name})", xs[0], xs[1], ys[0], ys[1])


def rectangles_overlap(a: Rectangle, b: Rectangle) -> bool:
    """Open rectangles intersect (both coordinate intervals overlap)."""
    return a.xs.meets(b.xs) and a.ys.meets(b.ys)


@dataclass
class TransitionMatrix:
    names: list[str]
    entries: np.ndarray

    def __post_init__(self) -> None:
        self.entries = np.asarray(self.entries, dtype=np.int64).reshape(len(self.names), len(self.names))
        if not np.isin(self.entries, (0, 1)).all():
            raise ValueError("transition matrix entries must be 0 or 1")

    def __str__(self) -> str:
        return "\n".join(" ".join(str(int(x)) for x in row) for row in self.entries)

    def successors(self, name: str) -> list[str]:
        """Rectangles ``R_i`` with ``R_name -> R_i``."""
        j = self.names.index(name)
        return [self.names[i] for i in np.flatnonzero(self.entries[:, j])]


def transitions(rects: list[Rectangle]) -> TransitionMatrix:
    """``m_ij = 1`` iff the shifted ``R_j`` overlaps ``R_i`` with nonempty interior."""
    n = len(rects)
    images = [shift_rectangle(r) for r in rects]
    m = np.zeros((n, n), dtype=np.int64)
    for j, img in enumerate(images):
        for i, r in enumerate(rects):
            m[i, j] = rectangles_overlap(img, r)
    return TransitionMatrix([r.name for r in rects], m)


@dataclass
class PartitionReport:
    overlapping: list[tuple[str, str]] = field(default_factory=list)
    pruned: list[tuple[str, str]] = field(default_factory=list)
    multi_branch: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.overlapping or self.pruned or self.multi_branch)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "overlapping": [list(p) for p in self.overlapping],
            "pruned": [list(p) for p in self.pruned],
            "multi_branch": self.multi_branch,
        }


def check_partition(rects: list[Rectangle], c: PruningCollection | None = None) -> PartitionReport:
    """Sanity checks on a candidate Markov partition.

    Reports overlapping rectangle pairs, rectangles whose interior meets a
    pruned disk's interior (disks at offset 0 only), and rectangles whose
    horizontal side straddles both branches.
    """
    report = PartitionReport()
    for i, a in enumerate(rects):
        for b in rects[i + 1 :]:
            if rectangles_overlap(a, b):
                report.overlapping.append((a.name, b.name))
    for r in rects:
        if not r.single_branch:
            report.multi_branch.append(r.name)
        for name, d in c or ():
            if d.offset != 0:
                continue
            vertical = d.vertical
            if vertical is not None and r.xs.meets(d.horizontal) and r.ys.meets(vertical):
                report.pruned.append((r.name, name))
    return report
