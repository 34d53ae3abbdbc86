"""Ordinary double and triple points: multivariable series, spectral pages,
and Heegaard Floer style rank tables.

Run:  python3 demos/demo_plane_multibranch.py
"""

import curvelattice as cl
from curvelattice.spectral import FilteredPages


def show_pages(w, n, rect, kmax=3):
    fp = FilteredPages(w, n, rect)
    print(f"  level n = {n}:")
    for k in range(1, kmax + 1):
        print(f"    E^{k} ranks {fp.page(k)}")
    print(f"    E^inf ranks {fp.infinity()}   k(n) = {fp.k_invariant()}")


for curve in (cl.ordinary_double(), cl.ordinary_triple()):
    h, w = curve.tables()
    print(f"== {curve.name}: {curve.description} ==")
    print(f"delta = {w.delta}, conductor = {curve.semigroup.conductor}")

    bp = cl.bold_pe1(w, h)
    print(f"multivariable first-page series (two independent routes agree):")
    print(f"  PE1 = {bp}")

    pm = cl.motivic_pm(h)
    print(f"motivic Poincare series P^m = {pm}")

    rect = cl.working_rectangle(w, 2)
    n_hi = 2 if curve.r == 2 else 1
    for n in range(0, n_hi + 1):
        show_pages(w, n, rect)

    c = curve.semigroup.conductor
    t = cl.hfl_ranks(w, h, c)
    print(f"rank table at the conductor l = {c} ({t['label']}):")
    for maslov in sorted(t["ranks"], reverse=True):
        print(f"  Maslov {maslov}: rank {t['ranks'][maslov]}")
    print()
