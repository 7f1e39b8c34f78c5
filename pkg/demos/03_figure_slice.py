#!/usr/bin/env python3
# The theta(delta)=1 slice of the fundamental cone for A2, n=4: all 22
# regions of the 3-extended Catalan arrangement of A2, with the Hilbert
# scheme chamber C- and the orbifold chamber C+ marked.  Writes
# figure_slice_a2_n4.png next to this script.

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from mckaygit import framed_lattice, slice_polygons

lattice = framed_lattice("A", 2, 4)
regions = slice_polygons(lattice)
print(f"{len(regions)} regions, "
      f"{sum(r['unbounded'] for r in regions)} unbounded")

fig, ax = plt.subplots(figsize=(6, 6))
for reg in regions:
    xs = [float(x) for x, _ in reg["vertices"]]
    ys = [float(y) for _, y in reg["vertices"]]
    colour = "#f2d0a4" if reg["unbounded"] else "#a4c8f0"
    ax.fill(xs, ys, colour, edgecolor="black", linewidth=0.8)
    if reg["label"]:
        cx = sum(xs) / len(xs)
        cy = sum(ys) / len(ys)
        ax.text(cx, cy, reg["label"], ha="center", va="center", fontsize=12)

ax.set_xlim(0, 4)
ax.set_ylim(0, 4)
ax.set_xlabel(r"$\theta(\rho_1)$")
ax.set_ylabel(r"$\theta(\rho_2)$")
ax.set_title("Slice of F for A2, n=4: 22 chambers (unbounded shaded orange)")
out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "figure_slice_a2_n4.png")
fig.savefig(out, dpi=150, bbox_inches="tight")
print("wrote", out)
