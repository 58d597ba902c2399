"""Walk through h = (2,4,4,4): generators by degree, orientations, and the
involution that matches the two ways of counting invariant classes."""

from hessencomb import (
    Permutation, enumerate_orientations, generators_k, iota, make_hessenberg,
    nilpotent_cell, opposite_cell_dim, orient_from_perm, perm_from_orientation,
)
from hessencomb.core import all_permutations

h = make_hessenberg((2, 4, 4, 4))
print(f"h = ({h}), N_h = {h.N_h}, T = {sorted(h.T)}")
print("edges of G_h:", h.graph.edges)

for k in range(h.N_h + 1):
    print(f"G_h^{k}:", " ".join(str(w) for w in generators_k(h, k)))

# every acyclic orientation comes from exactly one generator
print(f"\n{len(enumerate_orientations(h))} acyclic orientations")
for o in enumerate_orientations(h):
    w = perm_from_orientation(o)
    assert orient_from_perm(w, h) == o
    print(f"  reversed {sorted(o.reversed_edges)!s:<34} <- {w}")

# a nilpotent cell of dimension k maps to a generator whose opposite cell has dimension k
print("\nnilpotent cells and their iota images")
for w in all_permutations(4):
    k = nilpotent_cell(w, h)
    if k is not None:
        assert opposite_cell_dim(iota(w), h) == k
        print(f"  dim {k}: {w} -> {iota(w)}")

print("\nlongest element:", Permutation.parse("4321"), "has degree", h.N_h)
