# Groups defined by a normal subgroup and its cosets
#
# Given Q normal in P, the group G_Q^P uses labels from P, with all labels of
# one element in the same coset of Q. Its fixed-point proportion is the
# average over cosets A of the proportion for W_A. A coset in which every
# element fixes exactly one point contributes 1; transitive Q makes the other
# cosets average one fixed point and contribute 0.

from treefpp.branch import analyze_gqp, search_good_cosets

report = analyze_gqp(["(1,2)(3,4)", "(1,3)(2,4)"], ["(1,2)", "(1,2,3,4)"], d=4)
print(f"Klein four in Sym(4): index {report.index}, dimension {report.hausdorff.decimal}, FPP {report.fpp.exact}")
for rep, part in report.fpp.per_coset:
    print(f"  coset of {str(rep):>8}: {part.classification}")

# The two cosets of 3-cycles are the "good" ones. Searching every transitive
# Q inside its normalizer finds such cosets for d = 3, 4, 5 and none for d = 6.

print()
for d in range(2, 7):
    found = search_good_cosets(d)
    print(f"d = {d}: {len(found)} good coset(s)", [f"|Q|={len(f.q)} rep {f.representative}" for f in found])
