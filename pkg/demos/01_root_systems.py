#!/usr/bin/env python3
# Root data for every ADE type: positive root counts, Coxeter numbers,
# degrees and the diagram involution.

from mckaygit import build_root_system, involution_iota

for kind, rank in [("A", 1), ("A", 2), ("A", 5), ("D", 4), ("D", 5),
                   ("E", 6), ("E", 7), ("E", 8)]:
    data = build_root_system(kind, rank)
    print(f"{kind}{rank}:")
    print(f"  |Phi+| = {data.num_positive_roots}   h = {data.coxeter_number}")
    print(f"  degrees   = {list(data.degrees)}")
    print(f"  exponents = {list(data.exponents)}")
    print(f"  delta     = {list(data.delta)}   (affine vertex first)")
    print(f"  iota      = {list(involution_iota(data))}")
    print(f"  |W_Gamma| = {data.weyl_order}")

# the height histogram of the positive roots is dual to the exponents
data = build_root_system("D", 4)
hist = {}
for alpha in data.positive_roots:
    hist[sum(alpha)] = hist.get(sum(alpha), 0) + 1
print("\nD4 height histogram:", dict(sorted(hist.items())))
print("dual partition gives exponents", list(data.exponents))
