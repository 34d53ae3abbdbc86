"""Walk through every invariant for a single branch with semigroup <3,4>.

Run:  python3 demos/demo_one_branch.py
"""

import curvelattice as cl

curve = cl.cusp34()
S = curve.semigroup
h, w = curve.tables()

print(f"curve: {curve.name} — {curve.description}")
print(f"semigroup generators <3,4>, conductor c = {S.conductor[0]}, "
      f"delta = {w.delta}")

print("\nHilbert function h and weight w = 2h - |l| on 0..8:")
print("  l:", *range(9))
print("  h:", *[h((l,)) for l in range(9)])
print("  w:", *[w((l,)) for l in range(9)])

lh = cl.lattice_homology(w, 4)
print("\nlattice homology (as a Z[U]-module):")
for b, m in enumerate(lh.modules):
    print(f"  H_{b} = {m}")
eu_cubes, eu_betti = cl.euler_characteristic(w, lh)
print(f"Euler characteristic both ways: {eu_cubes} = {eu_betti} = delta")

root = cl.graded_root(w, 3)
print("\ngraded root component counts by level n:")
for n in sorted(root.component_counts):
    print(f"  n = {n:>2}: {root.component_counts[n]} component(s)")

pe = cl.pe_series(w, 8, k=None).reduce()
print(f"\nstable page Poincare series PE = {pe}")

kt = cl.k_table(w, w.m_w, 4)
print(f"k-invariant per level: {kt}  (spectral sequence degenerates at E^1)")

print("\nY-operator chain decomposition of the semigroup line:")
print(" ", cl.y_chains_r1(S))
