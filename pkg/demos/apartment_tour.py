"""Tour of the model apartment: pairing, metric, hulls, sectors, galleries.

Run:  python demos/apartment_tour.py
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from lbk import Apartment, build_root_system
from lbk.apartment import format_point

print("== The A2 apartment over plain rationals ==")
ap = Apartment(build_root_system("A2"), lex_rank=1)
o = ap.origin()
a1 = ap.simple_point(1, 0)
a2 = ap.simple_point(0, 1)

print("pairing (a1, a1) =", ap.pairing((1, 0), a1))
print("pairing (a2, a1) =", ap.pairing((0, 1), a1))
print("metric  d(o, a1) =", ap.metric(o, a1), " (|2| + |-1| + |1| over the three positive roots)")
print("coordinate v^2 of a1 =", ap.coordinate(a1, 2))

print()
print("== Convex hulls are intersections of half-apartments ==")
hull = ap.convex_hull([o, ap.simple_point(2, 0)])
for h in hull.halves:
    sense = ">=" if h.sense == 1 else "<="
    print(f"  (root {h.root}, v) {sense} {h.bound}")

print()
print("== Sector germs and galleries ==")
w0 = ap.roots.longest_element()
fund = ap.sector(o, ap.roots.identity())
far = ap.sector(o, w0)
delta = ap.germ_distance(fund.germ(), far.germ())
print("germ distance to the opposite sector:", repr(delta), "length", delta.length)
print("a minimal gallery has types:", ap.gallery(fund.germ(), far.germ()))

print()
print("== Hull reconstruction: hull(subsector, base) gives back the sector ==")
base = ap.simple_point(-1, 2)
sector = ap.sector(base, ap.roots.simple(1))
gens = ap.sector_cone(sector.direction)
sub_base = list(base)
for gen in gens:
    for j in range(ap.rank):
        sub_base[j] = sub_base[j] + ap.scalar(3 * gen[j])
sub = ap.sector(tuple(sub_base), sector.direction)
hull = ap.convex_hull([base], [sub])
print("sector base:", format_point(base), " subsector base:", format_point(sub.base))
print("hull equals the original sector:", ap.region_equal(hull, ap.sector_region(sector)))

print()
print("== Lex rank 2: infinitesimal displacements ==")
ap2 = Apartment(build_root_system("A1"), lex_rank=2)
from lbk import LambdaScalar

eps = LambdaScalar([0, 1])  # positive but smaller than every rational
p = (eps,)
print("d(o, eps*a1) =", ap2.metric(ap2.origin(), p), " (nonzero, below every rational)")
print("eps < 1/1000000:", eps < ap2.scalar(1) / 1000000)
