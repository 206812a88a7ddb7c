"""The "longer than" relation between symbolic disks and the pruning-collection check.

For disks at a common iterate the C- and E-sides are the vertical legs and
the base segment described in :mod:`prunefront.plane`. The forward images
``f^n(C)`` and backward images ``f^-n(E)`` (``n >= 1``) stay inside the
square as vertical and horizontal segments, which is what makes the
iterate conditions decidable by order comparisons.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Iterator

from .plane import (
    CEDisk,
    StableSegment,
    UnstableSegment,
    c_image,
    e_preimage,
    seg_meets_interior,
)

__all__ = [
    "Relation",
    "UNRELATED",
    "SUCC",
    "PREC",
    "EQUAL",
    "PruningCollection",
    "Violation",
    "Certificate",
    "StabilizationError",
    "longer_than",
    "interiors_meet",
    "partial_order",
    "check_pruning",
    "sweep_outcome",
    "recheck",
    "DEFAULT_HARD_CAP",
]

DEFAULT_HARD_CAP = 100_000


@dataclass(frozen=True)
class Relation:
    kind: str
    reason: str = ""

    def __str__(self) -> str:
        return f"fail({self.reason})" if self.kind == "fail" else self.kind


UNRELATED = Relation("unrelated")
SUCC = Relation("succ")
PREC = Relation("prec")
EQUAL = Relation("equal")


def _fail(reason: str) -> Relation:
    return Relation("fail", reason)


@dataclass(frozen=True)
class PruningCollection:
    """Named disks, in the user's order."""

    disks: tuple[tuple[str, CEDisk], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "disks", tuple((str(n), d) for n, d in self.disks))
        names = [n for n, _ in self.disks]
        dup = {n for n in names if names.count(n) > 1}
        if dup:
            raise ValueError(f"duplicate disk names: {sorted(dup)}")

    @classmethod
    def of(cls, **disks: CEDisk) -> "PruningCollection":
        return cls(tuple(disks.items()))

    def __len__(self) -> int:
        return len(self.disks)

    def __iter__(self) -> Iterator[tuple[str, CEDisk]]:
        return iter(self.disks)

    def __getitem__(self, name: str) -> CEDisk:
        for n, d in self.disks:
            if n == name:
                return d
        raise KeyError(name)

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.disks]

    def normalized(self) -> "PruningCollection":
        """All disks moved to offset 0 (the pruned shift is unchanged)."""
        return PruningCollection(tuple((n, d.normal) for n, d in self.disks))


def _common_offset(a: CEDisk, b: CEDisk) -> None:
    if a.offset != b.offset:
        raise ValueError(
            f"disks must share an iterate offset to be compared (got {a.offset} and {b.offset})"
        )


def interiors_meet(a: CEDisk, b: CEDisk) -> bool:
    _common_offset(a, b)
    va, vb = a.vertical, b.vertical
    if va is None or vb is None:
        return False
    return a.horizontal.meets(b.horizontal) and va.meets(vb)


def _condition_i(a: CEDisk, b: CEDisk) -> list[str]:
    """Clauses of ``C_a cap I_b = {} and E_b cap I_a = {}`` that fail."""
    bad = []
    if any(seg_meets_interior(b, leg) for leg in a.c_legs()):
        bad.append("C-side of first meets interior of second")
    if seg_meets_interior(a, b.e_side()):
        bad.append("E-side of second meets interior of first")
    return bad


def longer_than(a: CEDisk, b: CEDisk) -> Relation:
    """Decide ``a > b``, ``b > a``, equality, or unrelatedness.

    Only condition (i) of the relation is tested; for one-entry symbolic
    disks the C- and E-sides are stable and unstable arcs, which cross
    transversally, so the arc conditions hold automatically.
    """
    _common_offset(a, b)
    if a == b:
        return EQUAL
    if not interiors_meet(a, b):
        return UNRELATED
    ab = _condition_i(a, b)
    ba = _condition_i(b, a)
    if not ab and not ba:
        return _fail("both directions hold for distinct disks")
    if not ab:
        return SUCC
    if not ba:
        return PREC
    return _fail("; ".join(ab))


def partial_order(c: PruningCollection) -> tuple[list[str], list[tuple[str, str]], list[str] | None]:
    """Names listed from minimal to maximal, the strict ``>`` edges, and a loop if any.

    The returned order follows the convention that ``i < j`` never has
    ``D_i >= D_j``; user order breaks ties.
    """
    names = c.names
    disks = dict(c.disks)
    succ: dict[str, set[str]] = {n: set() for n in names}
    edges = []
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            if disks[a].offset != disks[b].offset:
                continue
            rel = longer_than(disks[a], disks[b])
            if rel == SUCC:
                succ[a].add(b)
                edges.append((a, b))
            elif rel == PREC:
                succ[b].add(a)
                edges.append((b, a))
    # Kahn's algorithm on "a > b": emit b (the smaller) first
    remaining = list(names)
    order: list[str] = []
    while remaining:
        ready = [n for n in remaining if not (succ[n] & set(remaining))]
        if not ready:
            return order, edges, _find_loop(remaining, succ)
        order.append(ready[0])
        remaining.remove(ready[0])
    return order, edges, None


def _find_loop(nodes: list[str], succ: dict[str, set[str]]) -> list[str]:
    live = set(nodes)
    start = nodes[0]
    path = [start]
    seen = {start: 0}
    while True:
        nxt = min(m for m in succ[path[-1]] if m in live)
        if nxt in seen:
            return path[seen[nxt] :] + [nxt]
        seen[nxt] = len(path)
        path.append(nxt)


@dataclass(frozen=True)
class Violation:
    """One failed obligation.

    kind is ``forward-C`` (``f^n(C_i)`` meets ``I_j``), ``backward-E``
    (``f^-n(E_i)`` meets ``I_j``), ``order-loop`` or ``base-relation``.
    """

    kind: str
    n: int
    i: str
    j: str
    witness: StableSegment | UnstableSegment | str

    def as_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "i": self.i, "j": self.j, "witness": str(self.witness)}


@dataclass
class Certificate:
    verdict: str
    mode: str
    bound: int | None = None
    violations: list[Violation] = field(default_factory=list)
    stabilization_bound: int | None = None
    order: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "bound": self.bound,
            "stabilization_bound": self.stabilization_bound,
            "order": self.order,
            "violations": [v.as_dict() for v in self.violations],
        }


class StabilizationError(RuntimeError):
    pass


def sweep_outcome(kind: str, di: CEDisk, dj: CEDisk, n: int) -> tuple[bool, StableSegment | UnstableSegment]:
    """Whether the ``n``-th forward-C / backward-E image of ``di`` meets ``I_j``."""
    seg = c_image(di, n) if kind == "forward-C" else e_preimage(di, n)
    return seg_meets_interior(dj, seg), seg


def _pair_window(di: CEDisk, dj: CEDisk) -> tuple[int, int]:
    seqs = (di.s, di.w, dj.s, dj.w)
    period = 2 * lcm(*(len(x.per) for x in seqs))
    start = sum(len(x.pre) for x in seqs) + period + 2
    return start, period


def _sweep(
    kind: str, di: CEDisk, dj: CEDisk, limit: int | None, hard_cap: int
) -> tuple[int | None, StableSegment | UnstableSegment | None, int]:
    """First ``n`` with a hit (and its segment) plus the bound used.

    With ``limit=None`` the sweep runs until the outcome sequence is seen to
    repeat over a full period window, which decides all ``n >= 1``.
    """
    if limit is not None:
        for n in range(1, limit + 1):
            hit, seg = sweep_outcome(kind, di, dj, n)
            if hit:
                return n, seg, limit
        return None, None, limit
    start, period = _pair_window(di, dj)
    outcomes: list[bool] = []
    while True:
        top = start + 2 * period
        if top > hard_cap:
            raise StabilizationError(f"{kind} sweep did not stabilize within {hard_cap} iterates")
        for n in range(len(outcomes) + 1, top + 1):
            hit, seg = sweep_outcome(kind, di, dj, n)
            if hit:
                return n, seg, n
            outcomes.append(hit)
        window = outcomes[start - 1 : start - 1 + period]
        if window == outcomes[start - 1 + period : start - 1 + 2 * period]:
            return None, None, top
        start *= 2  # pragma: no cover - eventual periodicity sets in by ``start``


def check_pruning(
    c: PruningCollection, bound: int | None = None, *, hard_cap: int = DEFAULT_HARD_CAP
) -> Certificate:
    """Verify that ``c`` is a pruning collection.

    ``bound=None`` decides the conditions for every iterate by stabilization;
    an integer checks iterates ``1..bound`` only and says so in the
    certificate. Disks must share one iterate offset.
    """
    mode = "exhaustive" if bound is None else "bounded"
    disks = list(c.disks)
    offsets = {d.offset for _, d in disks}
    if len(offsets) > 1:
        raise ValueError("check_pruning needs all disks at one iterate offset")
    violations: list[Violation] = []

    for x, (a, da) in enumerate(disks):
        for b, db in disks[x + 1 :]:
            rel = longer_than(da, db)
            if rel.kind == "fail":
                violations.append(Violation("base-relation", 0, a, b, rel.reason))
            elif rel == EQUAL:
                violations.append(Violation("base-relation", 0, a, b, "duplicate disk"))
    order, _, loop = partial_order(c)
    if loop:
        violations.append(Violation("order-loop", 0, loop[0], loop[-2], " > ".join(loop)))

    stab = 0
    for a, da in disks:
        for b, db in disks:
            for kind in ("forward-C", "backward-E"):
                n, seg, used = _sweep(kind, da.normal, db.normal, bound, hard_cap)
                stab = max(stab, used)
                if n is not None:
                    violations.append(Violation(kind, n, a, b, seg))
    return Certificate(
        verdict="fail" if violations else "pass",
        mode=mode,
        bound=bound,
        violations=violations,
        stabilization_bound=stab if bound is None and not violations else None,
        order=order if not loop else c.names,
    )


def recheck(c: PruningCollection, v: Violation) -> bool:
    """Re-derive a sweep violation from the plane predicates."""
    if v.kind not in ("forward-C", "backward-E"):
        return False
    hit, seg = sweep_outcome(v.kind, c[v.i].normal, c[v.j].normal, v.n)
    return hit and seg == v.witness and seg_meets_interior(c[v.j].normal, v.witness)
