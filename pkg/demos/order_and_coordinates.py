"""Unimodal order on eventually periodic sequences, and the two coordinates.

The parity coordinate theta is monotone but collapses each gap of the Cantor
set to a point; the ternary coordinate separates every pair.
"""
from prunefront.specfmt import parse_seq
from prunefront.symseq import cantor_coordinate, invariant_coordinate, unimodal_cmp

seqs = [parse_seq(s) for s in ["[0]", "01[0]", "0[1]", "[10]", "[1000100]", "11[0]", "1[0]", "10[1]", "[1]"]]
seqs.sort()

print(f"{'sequence':>12}  {'theta':>10}  {'ternary':>14}")
for s in seqs:
    print(f"{str(s):>12}  {str(invariant_coordinate(s)):>10}  {str(cantor_coordinate(s)):>14}")

# 01[0] and 11[0] are the two ends of the central gap: theta gives both 1/2,
# the comparison and the ternary coordinate still separate them
a, b = parse_seq("01[0]"), parse_seq("11[0]")
print()
print(f"{a} vs {b}: {unimodal_cmp(a, b).name}, theta {invariant_coordinate(a)} and {invariant_coordinate(b)}")
