"""The pruned shift: orbit survival, periodic orbits, cylinders and entropy bounds.

A bi-infinite sequence survives when no shift of it lies in the open
interior of any pruning disk. Entropy is bracketed between two subshifts
of finite type built from centered windows of ``2k + 1`` symbols: the
inner one forbids every window whose cylinder meets the pruned set, the
outer one only windows whose cylinder lies inside a single disk.
"""
from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from math import lcm

import numpy as np
import scipy.sparse as sp

from .plane import CEDisk, OrderInterval, Point, interior_contains, shift_by
from .prune import PruningCollection
from .spectral import spectral_radius
from .symseq import EPSeq, max_completion, min_completion

__all__ = [
    "CylinderWord",
    "EntropyBounds",
    "ResourceError",
    "survives",
    "lyndon_words",
    "necklace_representative",
    "surviving_periodic_orbits",
    "periodic_point",
    "cylinder_subset_pruned",
    "cylinder_meets_pruned",
    "forbidden_words",
    "entropy_bounds",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 2**22
BUDGET_ENV = "PRUNEFRONT_NODE_BUDGET"


class ResourceError(RuntimeError):
    pass


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


# -- survival ---------------------------------------------------------------


def _hit(q: Point, disks: list[CEDisk]) -> bool:
    return any(interior_contains(d, q) for d in disks)


def survives(q: Point, c: PruningCollection) -> bool:
    """True iff no point of the orbit of ``q`` is interior to a disk of ``c``.

    Periodic points are decided on one period. Otherwise both ends of the
    orbit are swept until the hit pattern repeats over a full period window.
    """
    disks = [d for _, d in c.normalized()]
    if not disks:
        return True
    p = len(q.h.per)
    if not q.h.pre and shift_by(q, p) == q:
        return not any(_hit(shift_by(q, n), disks) for n in range(p))
    seqs = [q.h, q.v] + [x for d in disks for x in (d.w, d.s)]
    period = 2 * lcm(*(len(x.per) for x in seqs))
    start = sum(len(x.pre) for x in seqs) + period + 2
    seen: dict[int, bool] = {}
    while True:
        top = start + 2 * period
        for n in range(-top, top + 1):
            if n not in seen:
                seen[n] = _hit(shift_by(q, n), disks)
                if seen[n]:
                    return False
        fwd = all(seen[n] == seen[n + period] for n in range(start, start + period))
        bwd = all(seen[-n] == seen[-n - period] for n in range(start, start + period))
        if fwd and bwd:
            return True
        start *= 2  # pragma: no cover


# -- periodic orbits --------------------------------------------------------


def lyndon_words(n: int) -> list[str]:
    """Binary Lyndon words of length exactly ``n`` (Duval's generator), in lexicographic order."""
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            out.append("".join(map(str, w)))
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
    return out


def necklace_representative(word: str) -> EPSeq:
    """The rotation of ``word`` that is largest in the unimodal order, as ``[rot]``."""
    rots = [EPSeq("", word[i:] + word[:i]) for i in range(len(word))]
    return max(rots)


def periodic_point(word: str) -> Point:
    """The bi-infinite periodic point ``...www.www...``."""
    return Point(EPSeq("", word[::-1]), EPSeq("", word))


def surviving_periodic_orbits(c: PruningCollection, max_period: int) -> list[EPSeq]:
    """Surviving periodic orbits of period at most ``max_period``.

    Each orbit is named by its unimodally largest phase; the list is sorted
    by period, then by that word.
    """
    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    found = []
    for n in range(1, max_period + 1):
        for word in lyndon_words(n):
            if survives(periodic_point(word), c):
                found.append(necklace_representative(word))
    return sorted(found, key=lambda s: (len(s.per), s.per))


# -- cylinders --------------------------------------------------------------


@dataclass(frozen=True)
class CylinderWord:
    """Cylinder ``q_-m ... q_-1 . q_0 ... q_k``; ``left`` lists ``q_-1, q_-2, ...``."""

    left: str
    right: str

    def __post_init__(self) -> None:
        if not (self.left or self.right):
            raise ValueError("cylinder needs at least one symbol")
        if (self.left + self.right).strip("01"):
            raise ValueError("cylinder words must be binary")

    @classmethod
    def window(cls, word: str, k: int) -> "CylinderWord":
        """Window ``q_-k ... q_k`` given as a left-to-right word of length ``2k + 1``."""
        return cls(word[:k][::-1], word[k:])


def _pieces(left: str, right: str, k: int) -> list[tuple[str, str]]:
    """``sigma^-k`` of a cylinder as exact union of (vertical prefix, horizontal prefix)."""
    block = left[::-1] + right
    lo = -len(left) + k
    hi = lo + len(block) - 1
    if lo >= 0:
        return [("", "".join(f) + block) for f in itertools.product("01", repeat=lo)]
    if hi < 0:
        gap = -hi - 1
        return [("".join(f) + block[::-1], "") for f in itertools.product("01", repeat=gap)]
    return [(block[:-lo][::-1], block[-lo:])]


def _cyl(word: str) -> OrderInterval:
    return OrderInterval(min_completion(word), max_completion(word))


def _inside(cyl: OrderInterval, open_set: OrderInterval) -> bool:
    return open_set.contains(cyl.lo) and open_set.contains(cyl.hi)


def _piece_subset(d: CEDisk, vword: str, hword: str) -> bool:
    vertical = d.vertical
    return vertical is not None and _inside(_cyl(hword), d.horizontal) and _inside(_cyl(vword), vertical)


def _piece_meets(d: CEDisk, vword: str, hword: str) -> bool:
    vertical = d.vertical
    return (
        vertical is not None
        and _cyl(hword).meets(d.horizontal, dense=False)
        and _cyl(vword).meets(vertical, dense=False)
    )


def cylinder_subset_pruned(u: CylinderWord, c: PruningCollection, n: int = 0) -> bool:
    """Every point of ``u`` is interior to one disk of ``f^n`` of the collection."""
    return any(
        all(_piece_subset(d.normal, v, h) for v, h in _pieces(u.left, u.right, d.offset + n))
        for _, d in c
    )


def cylinder_meets_pruned(u: CylinderWord, c: PruningCollection, n: int = 0) -> bool:
    """Some point of ``u`` is interior to a disk of ``f^n`` of the collection."""
    return any(
        _piece_meets(d.normal, v, h)
        for _, d in c
        for v, h in _pieces(u.left, u.right, d.offset + n)
    )


# -- entropy ----------------------------------------------------------------


@dataclass(frozen=True)
class EntropyBounds:
    level: int
    lower: float
    upper: float
    lower_matrix_size: int
    upper_matrix_size: int
    converged: bool = True

    def as_dict(self) -> dict:
        return {
            "level": self.level,
            "lower": self.lower,
            "upper": self.upper,
            "lower_matrix_size": self.lower_matrix_size,
            "upper_matrix_size": self.upper_matrix_size,
            "converged": self.converged,
        }


def _classify(interval: OrderInterval | None, depth: int) -> tuple[list[str], list[str]]:
    """Minimal words of length <= depth whose cylinder lies in ``interval``,
    and the words of length ``depth`` whose cylinder meets it only partly."""
    if interval is None or not _cyl("").meets(interval, dense=False):
        return [], []
    inside: list[str] = []
    frontier = [""]
    for _ in range(depth):
        nxt = []
        for u in frontier:
            for b in "01":
                w = u + b
                cyl = _cyl(w)
                if not cyl.meets(interval, dense=False):
                    continue
                (inside if _inside(cyl, interval) else nxt).append(w)
        frontier = nxt
    return inside, frontier


def forbidden_words(c: PruningCollection, k: int, rule: str) -> set[str]:
    """Generators of the level-``k`` forbidden windows, as left-to-right words.

    A window ``q_-k ... q_k`` is forbidden exactly when it contains one of
    these words with the dot where the word's vertical and horizontal parts
    meet; since every position is constrained, that is the same as
    containing it anywhere.
    """
    if rule not in ("inner", "outer"):
        raise ValueError("rule must be 'inner' or 'outer'")
    words: set[str] = set()
    for _, d in c.normalized():
        v_in, v_edge = _classify(d.vertical, k)
        h_in, h_edge = _classify(d.horizontal, k + 1)
        if rule == "inner":
            v_in, h_in = v_in + v_edge, h_in + h_edge
        words.update(a[::-1] + b for a in v_in for b in h_in)
    return words


def _avoidance_graph(words: set[str], budget: int) -> sp.csr_matrix:
    # Aho-Corasick automaton; states whose reading ends in a forbidden word are dropped
    goto = [[-1, -1]]
    bad = [False]
    for w in sorted(words):
        node = 0
        for ch in w:
            b = int(ch)
            if goto[node][b] == -1:
                goto[node][b] = len(goto)
                goto.append([-1, -1])
                bad.append(False)
                if len(goto) > budget:
                    raise ResourceError(f"automaton exceeds node budget {budget}")
            node = goto[node][b]
        bad[node] = True
    fail = [0] * len(goto)
    queue = deque()
    for b in (0, 1):
        child = goto[0][b]
        if child == -1:
            goto[0][b] = 0
        else:
            queue.append(child)
    while queue:
        u = queue.popleft()
        for b in (0, 1):
            child = goto[u][b]
            if child == -1:
                goto[u][b] = goto[fail[u]][b]
            else:
                fail[child] = goto[fail[u]][b]
                bad[child] = bad[child] or bad[fail[child]]
                queue.append(child)
    keep = [i for i in range(len(goto)) if not bad[i]]
    index = {s: i for i, s in enumerate(keep)}
    rows, cols = [], []
    for s in keep:
        for b in (0, 1):
            t = goto[s][b]
            if not bad[t]:
                rows.append(index[s])
                cols.append(index[t])
    n = len(keep)
    return sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))


def _debruijn_graph(c: PruningCollection, k: int, rule: str, budget: int) -> sp.csr_matrix:
    edges = 2 ** (2 * k + 1)
    if edges > budget:
        raise ResourceError(f"de Bruijn graph at level {k} has {edges} edges, budget {budget}")
    test = cylinder_meets_pruned if rule == "inner" else cylinder_subset_pruned
    mask = 2 ** (2 * k) - 1
    rows, cols = [], []
    for code in range(edges):
        word = format(code, f"0{2 * k + 1}b")
        if not test(CylinderWord.window(word, k), c):
            rows.append(code >> 1)
            cols.append(code & mask)
    n = 2 ** (2 * k)
    return sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))


def _entropy(graph: sp.csr_matrix, tol: float) -> tuple[float, int, bool]:
    res = spectral_radius(graph, tol=tol)
    if res.empty:
        return 0.0, graph.shape[0], res.converged
    return res.log_lambda, graph.shape[0], res.converged


def entropy_bounds(
    c: PruningCollection,
    k: int,
    *,
    method: str = "automaton",
    budget: int | None = None,
    tol: float = 1e-10,
) -> EntropyBounds:
    """Bracket the entropy of the pruned shift (in nats) at window level ``k``.

    ``method="automaton"`` builds the level-``k`` subshifts from their
    forbidden-word generators; ``method="debruijn"`` enumerates all
    ``2^(2k+1)`` windows and is only practical for small ``k``. Both give
    the same subshifts.
    """
    if k < 1:
        raise ValueError("level k must be >= 1")
    budget = _budget(budget)
    sizes, values, ok = [], [], True
    for rule in ("inner", "outer"):
        if method == "automaton":
            graph = _avoidance_graph(forbidden_words(c, k, rule), budget)
        elif method == "debruijn":
            graph = _debruijn_graph(c, k, rule, budget)
        else:
            raise ValueError(f"unknown method {method!r}")
        h, size, conv = _entropy(graph, tol)
        values.append(h)
        sizes.append(size)
        ok &= conv
    return EntropyBounds(k, values[0], values[1], sizes[0], sizes[1], ok)

