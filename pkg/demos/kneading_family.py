"""Single-disk fronts along the kneading family.

Each kneading sequence kappa gives the disk bounded by the top of the square
and the stable leaf at kappa.  The check passes exactly for kneading kappa and
the entropy bounds climb from 0 to log 2.
"""
import math

from prunefront.plane import kneading_disk
from prunefront.prune import PruningCollection, check_pruning
from prunefront.shiftspace import entropy_bounds
from prunefront.specfmt import bundled, parse_seq, parse_seq_list
from prunefront.symseq import is_kneading

LEVEL = 6

for kappa in parse_seq_list(bundled("kneading_family.txt")) + [parse_seq("0[1]"), parse_seq("[011]")]:
    c = PruningCollection((("D", kneading_disk(kappa)),))
    cert = check_pruning(c)
    line = f"{str(kappa):>10}  kneading={is_kneading(kappa)!s:5}  {cert.verdict:4}"
    if cert.passed:
        b = entropy_bounds(c, LEVEL)
        line += f"  {b.lower:.4f} <= h <= {b.upper:.4f}"
    else:
        v = cert.violations[0]
        line += f"  {v.kind} at n={v.n}: {v.witness}"
    print(line)

print(f"\nlog 2 = {math.log(2):.4f}")
