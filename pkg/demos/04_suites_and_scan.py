"""Verification suites and the counterexample scan.

Suites package the library's cross-checks into data-driven case lists;
the scan summarizes whole families and collects the groups whose Gauss
sum equals their order.  No nilpotent non-cyclic group is expected to
appear (that would contradict the conjectured classification), and no
group at all may fall below its order (the partition identity forces
the lower bound); either list being non-empty would flag a bug.
"""

from grouptotient import run_scan, run_suite
from grouptotient.verify import family_specs

for suite_id, params in [
    ("thm3", {"max_order": 64}),
    ("thm7", {"n_max": 20}),
    ("example_pq", {}),
    ("prop1", {}),
]:
    result = run_suite(suite_id, params)
    status = "pass" if result.all_pass else "FAIL"
    print(f"suite {suite_id:12} {len(result.cases):4d} cases -> {status}")
    for note in result.discrepancy_notes:
        print(f"  note: {note}")

print()

corpus = family_specs("dihedral", 40)
scan = run_scan(corpus)
print(f"scanned {scan.scanned} dihedral groups up to order 40")
print("in class:", ", ".join(scan.gauss_class_members))
print("conjecture violations:", scan.nilpotent_noncyclic_members or "none")
print("lower-bound failures:", scan.inequality_failures or "none")

corpus = family_specs("nilpotent", 64)
scan = run_scan(corpus)
members = [r.id for r in scan.rows if r.in_class_c]
print(f"\nscanned {scan.scanned} nilpotent p-groups up to order 64;")
print(f"members of the class are exactly the cyclic ones: "
      f"{all(r.cyclic == r.in_class_c for r in scan.rows)}")
