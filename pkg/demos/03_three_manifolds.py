"""Circle actions with fixed points on 3-manifolds.

The orbit data {b; (eps, g, h, t), (a1, b1), ...} decides the manifold as a
connected sum.  A few standard cases:
"""

from orbitcalc import SeifertOrbitData, raymond_classify
from orbitcalc.classify3 import raymond_notes

cases = [
    ("annulus, both boundaries fixed", SeifertOrbitData(0, "o", 0, 2, 0)),
    ("disk, one Z2 boundary circle", SeifertOrbitData(0, "o", 0, 1, 1)),
    ("Moebius band with fixed boundary", SeifertOrbitData(0, "n", 1, 1, 0)),
    ("disk with two Z2 orbits", SeifertOrbitData(0, "o", 0, 1, 0, [(2, 1), (2, 1)])),
    ("disk with a (5,2) orbit", SeifertOrbitData(0, "o", 0, 1, 0, [(5, 2)])),
    ("plain disk", SeifertOrbitData(0, "o", 0, 1, 0)),
    ("genus one, three fixed circles", SeifertOrbitData(0, "o", 1, 3, 0)),
]
for label, data in cases:
    print(f"{label:<34} {str(data):<28} {raymond_classify(data)}")
    for note in raymond_notes(data):
        print("   note:", note)
