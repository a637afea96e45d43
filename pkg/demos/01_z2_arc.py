"""Walk one orbit space through the whole pipeline.

The fixed-point set is a 2-sphere plus two isolated points joined by an arc
of orbits with isotropy Z2.  We check the weights, build the chain of disk
bundles, read off the intersection form and name the 4-manifold.
"""

from orbitcalc import SpherePlusTwoPoints, WeightedArc, build_orbit_space, classify_config, euler_check
from orbitcalc.orbit_data import validate_legality
from orbitcalc.plumbing import assemble_chain, intersection_matrix

arc = WeightedArc(0, [(2, 1)], -1)
config = SpherePlusTwoPoints(arc=arc)

space = build_orbit_space(config)
print("arc:", arc, " sphere weight forced to", space.spheres[0].euler)
print("legal:", validate_legality(space).ok)

chain = assemble_chain(space)
for block in chain.blocks:
    print(f"  block {block}: action rows {block.action_matrix}")
print("t = 2m + l - 1:", chain.t, "=", 2 * chain.m + chain.l - 1)

print("B0 =")
print(intersection_matrix(chain))

result = classify_config(config)
print("Q_M =")
print(result.trace.qm)
print("reduction steps:", result.trace.steps, "->", result.trace.endpoint.rows)
print("manifold:", result.manifold)
print("Euler characteristic of the fixed set matches:", euler_check(config, result.manifold))
