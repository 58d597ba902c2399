"""GKM membership and the dot action on a tiny example, then a random
stress test of the group-action law."""

import random

from hessencomb import (
    EquivariantClass, MultiPoly, Permutation, build_gkm, dot_action,
    is_equivariant_class, make_hessenberg,
)
from hessencomb.gkm import random_class

h = make_hessenberg((2, 2))
g = build_gkm(h)
e, s = Permutation.parse("12"), Permutation.parse("21")
t1, t2 = MultiPoly.var(1, 2), MultiPoly.var(2, 2)
print("label of e -> s:", g.label(e, s))

c = EquivariantClass(2, {e: MultiPoly(2), s: t1 - t2})
print("c =", {str(v): p for v, p in c.values.items()}, "class?", is_equivariant_class(g, c))
sc = dot_action(s, c)
print("s.c =", {str(v): p for v, p in sc.values.items()}, "class?", is_equivariant_class(g, sc))

bad = EquivariantClass(2, {e: t1, s: MultiPoly(2)})
print("t1 at e, 0 at s is a class?", is_equivariant_class(g, bad))

h = make_hessenberg((2, 4, 4, 4))
g = build_gkm(h)
rng = random.Random(2024)
ok = 0
for _ in range(50):
    c = random_class(4, rng)
    u, v = rng.choice(g.vertices), rng.choice(g.vertices)
    ok += dot_action(u * v, c) == dot_action(u, dot_action(v, c))
print(f"\ngroup law held for {ok}/50 random classes on h = ({h})")
