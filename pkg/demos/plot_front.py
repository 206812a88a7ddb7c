"""Draw where the iterates of a front sit in the unit square.

Writes example3_front.svg into the current directory; the same picture is
available as ``prunefront plot example3.disks --range=-1..3 --depth 6``.
"""
import sys
from pathlib import Path

from prunefront.specfmt import emit_regions, load_bundled_disks, region_boxes

front = load_bundled_disks("example3.disks")
n_range = range(-1, 4)
depth = int(sys.argv[1]) if len(sys.argv) > 1 else 6

boxes = region_boxes(front, n_range, depth)
for n in n_range:
    mine = [b for b in boxes if b.iterate == n]
    area = sum((b.x1 - b.x0) * (b.y1 - b.y0) for b in mine)
    print(f"n = {n:2d}: {len(mine):4d} boxes, area {float(area):.4f}")

out = Path("example3_front.svg")
out.write_text(emit_regions(front, n_range, depth, "svg"), encoding="utf-8")
print(f"wrote {out}")
