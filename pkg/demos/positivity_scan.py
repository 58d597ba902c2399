"""Scan every Hessenberg function up to n = 7 and report the smallest
coefficient seen in the e-expansion of X_G, plus the distribution of H^2
dimensions.  A negative value would be a counterexample worth a closer look."""

import sys
from collections import Counter

from hessencomb import csf, dim_H2
from hessencomb.suites import enumerate_hessenberg

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 7
for n in range(2, n_max + 1):
    smallest, dims = None, Counter()
    for h in enumerate_hessenberg(n):
        x = csf(h)
        low = min(c for poly in x.e_coeffs.coeffs.values() for c in poly.coeffs)
        smallest = low if smallest is None else min(smallest, low)
        dims[dim_H2(h)] += 1
    print(f"n={n}: {sum(dims.values())} functions, min e-coefficient {smallest}, "
          f"dim H^2 range {min(dims)}..{max(dims)}")
