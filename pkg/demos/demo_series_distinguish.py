"""<4,5,7> versus <3,7,8>: identical lattice homology and one-variable series,
distinguished by the two-variable stable series and by Y-chain structure.

Run:  python3 demos/demo_series_distinguish.py
"""

import curvelattice as cl
from curvelattice.series import substitute_var

pair = (cl.sg457(), cl.sg378())
tables = {c.name: c.tables() for c in pair}

for curve in pair:
    _, w = tables[curve.name]
    lh = cl.lattice_homology(w, 4)
    print(f"{curve.name}: H_0 = {lh.modules[0]}, delta = {w.delta}")

print("\nsame module — but the T-graded series remember more:")
series = {}
for curve in pair:
    _, w = tables[curve.name]
    series[curve.name] = cl.pe_series(w, 8, k=None).reduce()
    print(f"  PE({curve.name}) = {series[curve.name]}")

keep = lambda e: e[1] <= 6
a = substitute_var(series["sg457"].expand(keep), "T", 1)
b = substitute_var(series["sg378"].expand(keep), "T", 1)
print(f"\nat T = 1 both collapse to the same Q-series through Q^6: "
      f"{a == b}")
print(f"as two-variable series they differ: "
      f"{not series['sg457'].equals(series['sg378'])}")

print("\nY-chains (branch structure of the decorated root):")
for curve in pair:
    print(f"  {curve.name}: {cl.y_chains_r1(curve.semigroup)}")
