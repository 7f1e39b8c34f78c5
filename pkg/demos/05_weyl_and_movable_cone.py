#!/usr/bin/env python3
# The Namikawa Weyl group in action: reduce random stability parameters to
# the fundamental domain, verify the invariance of the glued linearisation
# map, and print the movable-cone report for A2 with n=2.

import random

from mckaygit import (
    apply,
    framed_lattice,
    linearisation_L,
    models_isomorphic,
    mori_chamber_report,
    reduce_to_F,
    stability_from_affine,
    weyl_group,
)

lattice = framed_lattice("A", 2, 2)
rng = random.Random(42)
W = weyl_group("A", 2)
print(f"|W| = {len(W)} (= 2 x |W_Gamma| = 2 x 6)")

theta = stability_from_affine(lattice, [rng.randint(-9, 9) for _ in range(3)])
w, theta_f = reduce_to_F(lattice, theta)
print("theta   =", theta.values)
print("reduced =", theta_f.values, "via word", list(w.word))
print("L(theta) =", linearisation_L(lattice, theta))
for u in list(W)[:4]:
    moved = apply(lattice, u, theta)
    print(f"  L({list(u.word) or 'id'} . theta) =", linearisation_L(lattice, moved))

res = models_isomorphic(lattice, theta, apply(lattice, W[3], theta))
print("same orbit =>", res.status, "witness", list(res.witness.word))

report = mori_chamber_report(lattice)
print("\nmovable cone facets (det basis):", [list(f) for f in report.movable_facets])
for model in report.models:
    walls = ", ".join(
        f"{w.hyperplane.label()}:{w.contraction}" for w in model.walls
    )
    print(f"  {model.ample_model_tag:<13} generators {[list(g) for g in model.generators]}")
    print(f"      walls: {walls}")
