import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from prunefront.symseq import (
    BOTTOM,
    TOP,
    EPSeq,
    Ordering,
    canonical,
    cantor_coordinate,
    invariant_coordinate,
    is_kneading,
    max_completion,
    min_completion,
    unimodal_cmp,
)
from prunefront.specfmt import parse_seq as P

from conftest import epseqs, words


def _sign(a, b):
    return Ordering.LESS if a < b else Ordering.GREATER if a > b else Ordering.EQUAL


@pytest.mark.parametrize(
    "pre, per, want",
    [("", "0", ("", "0")), ("1", "01", ("", "10")), ("", "1010", ("", "10")), ("0110", "10", ("01", "10"))],
)
def test_canonical(pre, per, want):
    s = canonical(pre, per)
    assert (s.pre, s.per) == want


def test_empty_period_rejected():
    with pytest.raises(ValueError):
        EPSeq("1", "")


def test_bad_symbol_rejected():
    with pytest.raises(ValueError):
        EPSeq("2", "0")


@given(words(0, 6), words(1, 6))
def test_canonical_is_structural(pre, per):
    s = EPSeq(pre, per)
    assert EPSeq(s.pre, s.per) == s
    # same infinite sequence
    n = 3 * (len(pre) + len(per)) + 4
    assert s.prefix(n) == (pre + per * n)[:n]
    # an equivalent spelling lands on the same fields
    assert EPSeq(pre + per, per + per) == s


def test_shift_prepend_at():
    assert P("01[10]").shift() == P("1[10]")
    assert P("[0]").prepend(1) == P("1[0]")
    assert P("[1000100]").at(4) == 1


@given(epseqs(), words(0, 5))
def test_shift_undoes_prepend(s, w):
    assert s.prepend(w).shift(len(w)) == s
    for i in range(6):
        assert s.shift().at(i) == s.at(i + 1)


@pytest.mark.parametrize(
    "a, b, want",
    [("[0]", "1[0]", Ordering.LESS), ("110[1]", "[1]", Ordering.LESS), ("[10]", "[10]", Ordering.EQUAL)],
)
def test_unimodal_cmp_examples(a, b, want):
    assert unimodal_cmp(P(a), P(b)) is want
    assert unimodal_cmp(P(b), P(a)) is want.reverse()


def test_extremes():
    assert BOTTOM == P("[0]") and TOP == P("1[0]")
    for w in map("".join, itertools.product("01", repeat=5)):
        s = EPSeq(w, "01")
        assert BOTTOM < s < TOP


@given(epseqs(), epseqs())
@settings(max_examples=400)
def test_prepend_law(s, t):
    c = unimodal_cmp(s, t)
    assert unimodal_cmp(s.prepend(0), t.prepend(0)) is c
    assert unimodal_cmp(s.prepend(1), t.prepend(1)) is c.reverse()
    assert s.prepend(0) < t.prepend(1)


@given(epseqs(), epseqs())
@settings(max_examples=500)
def test_order_matches_rational_oracle(s, t):
    assert unimodal_cmp(s, t) is _sign(cantor_coordinate(s), cantor_coordinate(t))
    # theta is monotone; ties only across a gap
    c = unimodal_cmp(s, t)
    if c is not Ordering.EQUAL:
        assert _sign(invariant_coordinate(s), invariant_coordinate(t)) in (c, Ordering.EQUAL)


def test_invariant_coordinate_values():
    assert invariant_coordinate(P("[0]")) == 0
    assert invariant_coordinate(P("1[0]")) == 1
    assert invariant_coordinate(P("[10]")) == Fraction(4, 5)
    # the two sides of the central gap collapse
    assert invariant_coordinate(P("01[0]")) == invariant_coordinate(P("11[0]")) == Fraction(1, 2)
    assert cantor_coordinate(P("01[0]")) < cantor_coordinate(P("11[0]"))


@pytest.mark.parametrize(
    "kappa, want",
    [("[1000100]", True), ("[0]", True), ("0[1]", False), ("1[0]", True), ("[10]", True), ("[011]", False)],
)
def test_is_kneading_examples(kappa, want):
    assert is_kneading(P(kappa)) is want


@given(epseqs(4, 7))
@settings(max_examples=300)
def test_is_kneading_against_long_scan(k):
    # independent scan over many more shifts, compared through the ternary oracle
    top = cantor_coordinate(k)
    brute = all(cantor_coordinate(k.shift(n)) <= top for n in range(1, 40))
    assert is_kneading(k) is brute


def test_completions():
    assert min_completion("") == P("[0]")
    assert max_completion("") == P("1[0]")
    assert min_completion("1") == P("11[0]")
    assert max_completion("1") == P("1[0]")


@pytest.mark.parametrize("prefix", ["", "0", "1", "01", "110", "1011"])
def test_completions_bound_every_completion(prefix):
    lo, hi = min_completion(prefix), max_completion(prefix)
    for tail in map("".join, itertools.product("01", repeat=6)):
        for per in ("0", "1", "01"):
            c = EPSeq(prefix + tail, per)
            assert lo <= c <= hi


@given(epseqs(3, 3), epseqs(3, 3), epseqs(3, 3))
@settings(max_examples=300)
def test_total_order(a, b, c):
    if a <= b and b <= c:
        assert a <= c
    assert sum([a < b, a == b, a > b]) == 1
