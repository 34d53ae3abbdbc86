"""A wedge of two <3,4> cusps: the first example whose spectral sequence has a
nonzero differential past d^2, plus the Kunneth cross-check.

Run:  python3 demos/demo_wedge_higher_differentials.py
"""

import curvelattice as cl
from curvelattice.spectral import FilteredPages

curve = cl.double_cusp34()
h, w = curve.tables()
print(f"curve: {curve.name} — {curve.description}")
print(f"delta = {w.delta}, Gorenstein: {cl.is_gorenstein(curve.semigroup, h)}")

lh = cl.lattice_homology(w, 3)
print("\nlattice homology:")
for b, m in enumerate(lh.modules):
    print(f"  H_{b} = {m}")

rect = cl.working_rectangle(w, -1)
sn = cl.SnComplex(w, -2, rect)
print(f"\nS_-2 has {sn.n_components} components; the isolated vertex (6,6)")
print("carries trivial homology, so we follow the big component:")
fp = FilteredPages(w, -2, rect,
                   cubes=sn.component_cubes(sn.component_of[(3, 3)]))
for k in (1, 2, 3, 4):
    print(f"  E^{k} ranks {fp.page(k)}")
print(f"  d^3 kills {fp.differential_ranks(3)} -> k(-2) = "
      f"{fp.k_invariant()}  (degeneration only at the fourth page)")

fp1 = FilteredPages(w, -1, rect)
print(f"\nat n = -1 the fifth page still has two classes, "
      f"{fp1.page(5)}, and d^5 = {fp1.differential_ranks(5) or 0}: they "
      "sit in degrees that cannot interact, so k(-1) = "
      f"{fp1.k_invariant()}")

part = cl.part_reduced_module(cl.cusp34().tables()[1], 8)
pred = cl.kunneth_wedge(part, part, 2)
print("\nKunneth prediction from one <3,4> branch:")
for b, m in enumerate(pred):
    print(f"  H_{b} = {m}")
assert [str(m) for m in pred] == [str(m) for m in lh.modules]
print("matches the direct computation.")
