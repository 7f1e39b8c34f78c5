#!/usr/bin/env python3
# Chamber counts inside the fundamental cone F: exact enumeration on the
# theta(delta)=1 slice against the closed-form product, for a range of
# types and n.

import time

from mckaygit import (
    count_chambers_formula,
    count_chambers_total,
    enumerate_chambers_in_F,
    framed_lattice,
)

print(f"{'instance':>10} {'formula':>8} {'enumerated':>11} {'total':>7} {'secs':>6}")
for kind, rank, ns in [("A", 1, range(1, 7)), ("A", 2, range(1, 5)),
                       ("A", 3, range(1, 4)), ("D", 4, range(1, 3))]:
    for n in ns:
        lattice = framed_lattice(kind, rank, n)
        t0 = time.time()
        chambers = enumerate_chambers_in_F(lattice)
        dt = time.time() - t0
        formula = count_chambers_formula(lattice)
        total = count_chambers_total(lattice)
        tag = "" if formula == len(chambers) else "  <-- MISMATCH"
        print(f"{kind}{rank} n={n:>2} {formula:>8} {len(chambers):>11} {total:>7} {dt:>6.2f}{tag}")

# every chamber carries an exact interior witness
lattice = framed_lattice("A", 2, 3)
for chamber in enumerate_chambers_in_F(lattice)[:4]:
    print("witness", chamber.witness.values, "signs", "".join(
        "+" if s > 0 else "-" for s in chamber.signs))
