#!/usr/bin/env python3
# Wall-crossing tour for A1 with n=4: classify every wall hyperplane, pick
# an exact generic point on it, list the strata with their local models,
# and run the semismallness bookkeeping.

from mckaygit import (
    adjacent_chamber_parameters,
    build_arrangement,
    classify_wall,
    ext_graph_model,
    framed_lattice,
    pick_generic_wall_point,
    representation_types,
    semismall_audit,
)

lattice = framed_lattice("A", 1, 4)
print("v =", lattice.v)

for h in build_arrangement(lattice):
    theta0 = pick_generic_wall_point(lattice, h)
    info = classify_wall(lattice, theta0)
    print(f"\nwall {h.label():<14} class {info.wall_class:<18} point {theta0.values}")
    theta, _ = adjacent_chamber_parameters(lattice, theta0)
    audit = semismall_audit(lattice, theta0)
    for stratum, tau in zip(audit.strata, representation_types(lattice, lattice.v, theta0)):
        model = ext_graph_model(lattice, tau, theta, theta0)
        parts = "; ".join(f"{m} x {list(g)}" for m, g in tau.parts)
        print(f"  stratum [{parts}]")
        print(f"    codim {stratum.codim}, fibre {stratum.fibre_dim}, "
              f"semismall equality: {stratum.equality}")
        print(f"    local model {model.model_label.kind}{model.model_label.params}, "
              f"m={list(model.m_vec)}, n={list(model.n_vec)}, ell={model.ell}")
    print("  audit passes:", audit.passes)
