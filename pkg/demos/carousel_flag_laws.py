"""
Carousel censuses and the per-arc flag laws
===========================================

The carousel on m = 2n+1 vertices (every vertex beats the next n around a
circle) is the extreme point for several order-3/4 statistics.  This script
walks through the exact numbers.
"""
from math import comb

import numpy as np

from tourney import (
    ReferenceDistribution,
    arc_flag_counts,
    arc_flag_distribution,
    carousel,
    ks_distance,
    quad_counts,
    triple_counts,
)

# ----------------------------------------------------------------------
# 1. exact order-3/4 censuses
#
# Every 3-subset is transitive or cyclic; the carousel maximizes the cyclic
# count at m(m^2-1)/24.  Among 4-subsets the carousel realizes only TR4 and
# R4: local transitivity forbids W4 and L4 entirely.

for m in (9, 101, 1001):
    tr3, c3 = triple_counts(carousel(m))
    tr4, w4, l4, r4 = quad_counts(carousel(m))
    print(f"carousel({m}):")
    print(f"  c3 = {c3}  (max possible {m * (m * m - 1) // 24})")
    print(f"  quads: tr4={tr4} w4={w4} l4={l4} r4={r4}")
    print(f"  p(R4) = {r4 / comb(m, 4):.7f}  -> 1/2 as m grows")
print()

# ----------------------------------------------------------------------
# 2. the arc-flag closed form
#
# Fix the arc x -> x+i (circular distance i <= n).  The other m-2 vertices
# split into four groups by how they attach to the arc, and the group sizes
# depend on i alone: (o, i, tr, c) = (n-i, n-i, i-1, i).

m = 11
n = (m - 1) // 2
print(f"arc flags in carousel({m}), arc 0 -> d at distance d:")
for d in range(1, n + 1):
    fc = arc_flag_counts(carousel(m), 0, d)
    print(f"  d={d}: o={fc.o} i={fc.i} tr={fc.tr} c={fc.c}   "
          f"predicted ({n - d}, {n - d}, {d - 1}, {d})")
print()

# ----------------------------------------------------------------------
# 3. the limiting distribution of the normalized c-flag
#
# Normalizing by m-2 = 2n-1, the c-flag takes each value i/(2n-1), i=1..n,
# on exactly m arcs: a staircase converging to the uniform law on (0, 1/2).
# The sup-distance from U(0,1/2) is (3n-2)/(n(2n-1)), about 3/(2n).

print("KS distance of the carousel c-flag staircase from U(0, 1/2):")
ref = ReferenceDistribution.uniform(0.5)
for n in (5, 50, 500):
    d = arc_flag_distribution(carousel(2 * n + 1), "c")
    uniq, mult = d.value_counts()
    assert np.allclose(uniq, np.arange(1, n + 1) / (2 * n - 1))
    got = ks_distance(d, ref)
    print(f"  n={n:4d}: ks = {got:.6f}   (3n-2)/(n(2n-1)) = {(3 * n - 2) / (n * (2 * n - 1)):.6f}")
print()

# ----------------------------------------------------------------------
# 4. combined flags spread over the whole unit interval
#
# o+i concentrates on even grid points 2t/(2n-1) and c+tr on odd ones
# (2i-1)/(2n-1); both converge to U(0,1).

n = 50
d_oi = arc_flag_distribution(carousel(2 * n + 1), "oi")
d_ctr = arc_flag_distribution(carousel(2 * n + 1), "ctr")
full = ReferenceDistribution.uniform(1.0)
print(f"combined flags at n={n}:")
print(f"  ks(o+i  vs U(0,1)) = {ks_distance(d_oi, full):.6f}")
print(f"  ks(c+tr vs U(0,1)) = {ks_distance(d_ctr, full):.6f}")
