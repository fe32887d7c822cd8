"""Chambers at infinity: parallel classes of sectors for trees and fans.

Run:  python demos/infinity_demo.py
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from lbk.fixtures import fan, lambda_tree, single_apartment
from lbk.infinity import infinity_complex

print("== One chart alone keeps the full set of directions ==")
for name in ("A1", "A2", "G2"):
    complex_ = infinity_complex(single_apartment(name, 1))
    print(f"  single {name}: {complex_.chamber_count} chambers, {complex_.apartment_count} apartment")

print()
print("== Trees: one chamber per end, one apartment per end pair ==")
for ends in (2, 3, 4, 5):
    complex_ = infinity_complex(lambda_tree(ends))
    print(
        f"  {ends} ends -> {complex_.chamber_count} chambers,"
        f" {complex_.apartment_count} apartments,"
        f" thin: {not complex_.issues}"
    )

print()
print("== The tripod in detail ==")
tripod = lambda_tree(3)
complex_ = infinity_complex(tripod)
for line in complex_.lines():
    print(" ", line)

print()
print("== Fans: half-apartment pages along one wall ==")
for leaves in (2, 3, 4):
    complex_ = infinity_complex(fan(leaves))
    print(
        f"  {leaves} leaves -> {complex_.chamber_count} chambers,"
        f" {complex_.apartment_count} apartments, thin per apartment: {not complex_.issues}"
    )
