"""A tour of the built-in group families and their summaries.

Each spec string names a construction recipe; `summarize` builds the
Cayley table, enumerates every subgroup, and reports the group totient
phi (elements of maximal achieved order), the Gauss sum S (totients
summed over all subgroups), and whether S equals the group order.
"""

from grouptotient import construct, summarize

TOUR = [
    "cyclic:12",
    "abelian:2,2",
    "abelian:2,4,8",
    "dihedral:6",
    "dihedral:9",
    "quaternion:8",
    "semidihedral:16",
    "modular:2,4",
    "heisenberg:3",
    "sdp:7,3,2",
    "product:(quaternion:8)x(cyclic:9)",
]

header = f"{'spec':35} {'|G|':>5} {'phi':>5} {'S':>6} {'subs':>6}  in-class"
print(header)
print("-" * len(header))
for spec in TOUR:
    s = summarize(construct(spec))
    print(
        f"{spec:35} {s.group_order:5d} {s.phi:5d} {s.s_value:6d} {s.subgroup_count:6d}  "
        + ("yes" if s.in_class_c else "no")
    )

print()
print("Landmarks: S(Z2xZ2) = 7, S(D12) = 23, S(Q8) = 14, S(SD16) = 34,")
print("and the order-21 group sdp:7,3,2 satisfies S = |G| despite not being cyclic.")
