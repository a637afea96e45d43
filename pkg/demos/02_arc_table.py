"""Every legal single-segment arc with alpha up to 8, classified.

Each arc appears with its partner: the reversed arc describes the same
action, except for the two arcs of order two whose ends differ, which are
mirror images of each other.
"""

from orbitcalc import enumerate_arc_cases

print(f"{'arc':<15}{'(e1,e2,w1,a,b,w2)':<24}{'manifold':<14}partner")
for case in enumerate_arc_cases(8):
    row = "(" + ",".join(map(str, case.row)) + ")"
    print(f"{str(case.arc):<15}{row:<24}{str(case.manifold):<14}{case.relation} {case.partner}")

# odd alpha gives an odd indefinite form, even alpha an even one
parity = {case.row[3] % 2: str(case.manifold) for case in enumerate_arc_cases(8) if case.ends == (0, 0)}
print("\nends (0,0): odd alpha ->", parity[1], "| even alpha ->", parity[0])
