"""Two ways to the entropy of the two-disk front in example3.disks.

First the Markov rectangles: eight boxes, their incidence matrix and its
Perron root.  Then the symbolic bounds, which squeeze the same number from
both sides without knowing the partition.
"""
import time

from prunefront.markov import check_partition, transitions
from prunefront.shiftspace import entropy_bounds, surviving_periodic_orbits
from prunefront.spectral import spectral_radius
from prunefront.specfmt import load_bundled_disks, load_table1

front = load_bundled_disks("example3.disks")
rects = load_table1()

m = transitions(rects)
r = spectral_radius(m)
print(m)
print(f"lambda = {r.lambda_:.6f}, log lambda = {r.log_lambda:.6f}")
print("partition check:", "ok" if check_partition(rects, front).ok else "problems")

print("\nsurviving orbits up to period 7:")
print(" ".join(str(s) for s in surviving_periodic_orbits(front, 7)))

print("\n k   lower     upper     gap")
for k in range(2, 17, 2):
    t = time.perf_counter()
    b = entropy_bounds(front, k)
    print(f"{k:2d}  {b.lower:.6f}  {b.upper:.6f}  {b.upper - b.lower:.6f}  ({time.perf_counter() - t:.2f}s)")
