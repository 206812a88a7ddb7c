"""Eventually periodic binary sequences and the unimodal order.

A one-sided sequence ``s_0 s_1 s_2 ...`` that is eventually periodic is
stored as a preperiod word followed by a period word repeated forever.
Construction always canonicalizes, so two values are equal exactly when
they denote the same infinite sequence.

Literal notation: ``PRE[PER]``, e.g. ``[0]``, ``1[0]``, ``00101[1000100]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import lcm

__all__ = [
    "Ordering",
    "EPSeq",
    "BOTTOM",
    "TOP",
    "canonical",
    "at",
    "shift",
    "prepend",
    "prepend_word",
    "unimodal_cmp",
    "invariant_coordinate",
    "cantor_coordinate",
    "is_kneading",
    "min_completion",
    "max_completion",
]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def reverse(self) -> "Ordering":
        return Ordering(-self.value)


def _check_word(word: str) -> None:
    if not isinstance(word, str) or word.strip("01"):
        raise ValueError(f"not a binary word: {word!r}")


def _primitive_root(word: str) -> str:
    # prefix function; the shortest period p divides len(word) iff word is a power
    n = len(word)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    return word[:p] if n % p == 0 else word


@dataclass(frozen=True, slots=True)
class EPSeq:
    """Eventually periodic sequence ``pre + per + per + ...`` in canonical form.

    The period is primitive and the preperiod is as short as possible, so
    dataclass equality coincides with equality of the infinite sequences.
    Rich comparisons use the unimodal order.
    """

    pre: str
    per: str

    def __post_init__(self) -> None:
        _check_word(self.pre)
        _check_word(self.per)
        if not self.per:
            raise ValueError("period must be nonempty")
        pre = self.pre
        per = _primitive_root(self.per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    def __str__(self) -> str:
        return f"{self.pre}[{self.per}]"

    def __repr__(self) -> str:
        return f"EPSeq('{self}')"

    def __getitem__(self, i: int) -> int:
        return self.at(i)

    def at(self, i: int) -> int:
        if i < 0:
            raise IndexError("sequence index must be nonnegative")
        if i < len(self.pre):
            return int(self.pre[i])
        return int(self.per[(i - len(self.pre)) % len(self.per)])

    @property
    def head(self) -> int:
        return self.at(0)

    def prefix(self, n: int) -> str:
        """First ``n`` symbols as a word."""
        if n <= len(self.pre):
            return self.pre[:n]
        m = n - len(self.pre)
        reps = -(-m // len(self.per))
        return self.pre + (self.per * reps)[:m]

    def shift(self, n: int = 1) -> "EPSeq":
        if n < 0:
            raise ValueError("one-sided shift cannot be inverted")
        if n <= len(self.pre):
            return EPSeq(self.pre[n:], self.per)
        r = (n - len(self.pre)) % len(self.per)
        return EPSeq("", self.per[r:] + self.per[:r])

    def prepend(self, word: str | int) -> "EPSeq":
        return EPSeq(str(word) + self.pre, self.per)

    def ones_before(self, k: int) -> int:
        return self.prefix(k).count("1")

    # unimodal order
    def __lt__(self, other: "EPSeq") -> bool:
        return unimodal_cmp(self, other) is Ordering.LESS

    def __le__(self, other: "EPSeq") -> bool:
        return unimodal_cmp(self, other) is not Ordering.GREATER

    def __gt__(self, other: "EPSeq") -> bool:
        return unimodal_cmp(self, other) is Ordering.GREATER

    def __ge__(self, other: "EPSeq") -> bool:
        return unimodal_cmp(self, other) is not Ordering.LESS


BOTTOM = EPSeq("", "0")
TOP = EPSeq("1", "0")


def canonical(preperiod: str, period: str) -> EPSeq:
    return EPSeq(preperiod, period)


def at(s: EPSeq, i: int) -> int:
    return s.at(i)


def shift(s: EPSeq, n: int = 1) -> EPSeq:
    return s.shift(n)


def prepend(b: int | str, s: EPSeq) -> EPSeq:
    return s.prepend(b)


def prepend_word(word: str, s: EPSeq) -> EPSeq:
    """``word`` followed by ``s``."""
    return s.prepend(word)


def disagreement(s: EPSeq, t: EPSeq) -> int | None:
    """Least index where ``s`` and ``t`` differ, or ``None`` if equal."""
    if s == t:
        return None
    bound = len(s.pre) + len(t.pre) + lcm(len(s.per), len(t.per))
    a, b = s.prefix(bound), t.prefix(bound)
    for k in range(bound):
        if a[k] != b[k]:
            return k
    return None  # pragma: no cover - canonical forms make this unreachable


def unimodal_cmp(s: EPSeq, t: EPSeq) -> Ordering:
    """Compare in the unimodal order.

    At the first disagreement ``k`` the symbols are compared directly when
    ``s_0 ... s_{k-1}`` holds an even number of 1s, and reversed otherwise.
    """
    k = disagreement(s, t)
    if k is None:
        return Ordering.EQUAL
    direct = Ordering.LESS if s.at(k) < t.at(k) else Ordering.GREATER
    return direct if s.ones_before(k) % 2 == 0 else direct.reverse()


def _parity_digits(s: EPSeq) -> tuple[str, str]:
    """The parity sequence ``t_i = (s_0 + ... + s_i) mod 2`` as (pre, per)."""
    digits = []
    p = 0
    for c in s.pre:
        p ^= int(c)
        digits.append(str(p))
    pre = "".join(digits)
    reps = 1 if s.per.count("1") % 2 == 0 else 2
    digits = []
    for c in s.per * reps:
        p ^= int(c)
        digits.append(str(p))
    return pre, "".join(digits)


def _expansion_value(pre: str, per: str, base: int, digit: int) -> Fraction:
    # value of 0.pre(per)... in the given base, each 1 read as ``digit``
    head = sum(Fraction(int(c) * digit, base ** (i + 1)) for i, c in enumerate(pre))
    block = sum(int(c) * digit * base ** (len(per) - 1 - i) for i, c in enumerate(per))
    return head + Fraction(block, base ** len(pre) * (base ** len(per) - 1))


def invariant_coordinate(s: EPSeq) -> Fraction:
    """Milnor-Thurston invariant coordinate: the binary number ``0.t_0 t_1 ...``.

    Monotone for the unimodal order. It is not injective: the two sides of
    each gap of the Cantor set (``u0 max`` vs ``u1 min``) share a dyadic value.
    """
    return _expansion_value(*_parity_digits(s), base=2, digit=1)


def cantor_coordinate(s: EPSeq) -> Fraction:
    """Ternary embedding ``0.(2 t_0)(2 t_1) ...``; strictly order preserving."""
    return _expansion_value(*_parity_digits(s), base=3, digit=2)


def is_kneading(kappa: EPSeq) -> bool:
    """True iff every shift of ``kappa`` is at most ``kappa`` in the unimodal order."""
    for n in range(1, len(kappa.pre) + len(kappa.per) + 1):
        if unimodal_cmp(kappa.shift(n), kappa) is Ordering.GREATER:
            return False
    return True


def min_completion(prefix: str) -> EPSeq:
    """Least sequence beginning with ``prefix``."""
    _check_word(prefix)
    if prefix.count("1") % 2 == 0:
        return EPSeq(prefix, "0")
    return EPSeq(prefix + "1", "0")


def max_completion(prefix: str) -> EPSeq:
    """Greatest sequence beginning with ``prefix``."""
    _check_word(prefix)
    if prefix.count("1") % 2 == 0:
        return EPSeq(prefix + "1", "0")
    return EPSeq(prefix, "0")
