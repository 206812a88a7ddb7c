"""Pruning fronts for Smale's horseshoe, computed symbolically.

The modules build on each other in this order: :mod:`symseq` (sequences and
the unimodal order), :mod:`plane` (points and disks in the symbol square),
:mod:`prune` (the pruning-collection verifier), :mod:`shiftspace` (the
pruned shift and entropy bounds), :mod:`markov` and :mod:`spectral`
(rectangles, incidence matrices, Perron roots) and :mod:`specfmt` (files
and plots).
"""
from .symseq import EPSeq, Ordering, unimodal_cmp, invariant_coordinate, is_kneading
from .plane import Point, CEDisk, disk_from_vertices
from .prune import PruningCollection, check_pruning, longer_than
from .specfmt import parse_seq, parse_point, parse_disks, parse_rects
from .markov import Rectangle, transitions
from .spectral import spectral_radius

__version__ = "0.1.0"

__all__ = [
    "CEDisk",
    "EPSeq",
    "Ordering",
    "Point",
    "PruningCollection",
    "Rectangle",
    "check_pruning",
    "disk_from_vertices",
    "invariant_coordinate",
    "is_kneading",
    "longer_than",
    "parse_disks",
    "parse_point",
    "parse_rects",
    "parse_seq",
    "spectral_radius",
    "transitions",
    "unimodal_cmp",
]
