from __future__ import annotations

import pytest
from hypothesis import strategies as st

from prunefront.plane import CEDisk, Point, kneading_disk
from prunefront.prune import PruningCollection
from prunefront.specfmt import load_bundled_disks, load_table1
from prunefront.symseq import EPSeq


def words(min_size=0, max_size=6):
    return st.text(alphabet="01", min_size=min_size, max_size=max_size)


@st.composite
def epseqs(draw, max_pre=5, max_per=5):
    return EPSeq(draw(words(0, max_pre)), draw(words(1, max_per)))


@st.composite
def points(draw, max_pre=4, max_per=4):
    return Point(draw(epseqs(max_pre, max_per)), draw(epseqs(max_pre, max_per)))


@st.composite
def disks(draw, offsets=st.integers(-3, 3)):
    return CEDisk(draw(offsets), draw(epseqs(4, 4)), draw(epseqs(4, 4)))


def one_disk(kappa: str | EPSeq) -> PruningCollection:
    from prunefront.specfmt import parse_seq

    k = parse_seq(kappa) if isinstance(kappa, str) else kappa
    return PruningCollection((("D", kneading_disk(k)),))


@pytest.fixture(scope="session")
def ex2():
    return load_bundled_disks("example2.disks")


@pytest.fixture(scope="session")
def ex3():
    return load_bundled_disks("example3.disks")


@pytest.fixture(scope="session")
def empty():
    return load_bundled_disks("empty.disks")


@pytest.fixture(scope="session")
def table1():
    return load_table1()
