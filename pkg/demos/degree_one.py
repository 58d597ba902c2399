"""Degree-one data for h = (2,3,5,6,6,6): the correction sets A_i, the
graph-type classes P_i and the permutation-module decomposition of H^2."""

from hessencomb import (
    A_i, P_i, alpha_i, canonical_w, check_chow_h2, csf, d_i, dim_H2,
    make_hessenberg, multinomial_dim, stabilizer_composition,
)

h = make_hessenberg((2, 3, 5, 6, 6, 6))
print(f"h = ({h}), T = {sorted(h.T)}")

for i, w in enumerate(canonical_w(h), 1):
    print(f"\ni = {i}: w = {w}, alpha = {tuple(alpha_i(h, i))}, d = {d_i(h, i)}, "
          f"stabilizer {stabilizer_composition(h, i)}")
    print("  A:", " ".join(map(str, A_i(h, i))) or "-")
    print("  P:", " ".join(map(str, P_i(h, i))))

print(f"\ndim H^2 = {dim_H2(h)} = "
      + " + ".join(str(multinomial_dim(alpha_i(h, i))) for i in range(1, h.n)))

x = csf(h)
print("\nt^1 part of the chromatic quasisymmetric function in the e-basis:")
for lam, c in x.e_coeffs.t_coefficient(1).sorted_terms():
    print(f"  {c} e{tuple(lam)}")
print("matches sum of e_alpha:", check_chow_h2(h, x).passed)
