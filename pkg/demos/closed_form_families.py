# Families with closed-form fixed-point proportions
#
# Affine maps x -> a x + b on Z/dZ with a in a unit subgroup I: the coset of
# slope a is good exactly when a - 1 is a unit, so the proportion is the share
# of such slopes in I.

from fractions import Fraction

from treefpp.constructions import construction1, construction2, galois_unicritical, psi, totient
from treefpp.gf2 import glnf2_count, witness_matrix

for d in (5, 7, 9, 15):
    c = construction1(d)
    print(f"d = {d:>2}: coset sum {c.report.fpp.exact}, psi/phi = {Fraction(psi(d), totient(d))}")

# With every unit allowed the answer is prod over primes p | d of (p-2)/(p-1),
# which vanishes for even d.

print()
for d in (3, 12, 105, 1155):
    g = galois_unicritical(d, check_affine=False)
    print(f"d = {d:>4}: FPP {g.fpp}, dimension {g.hausdorff.decimal}")

# Holomorphs of C_2^n x C_r need matrices A with A and A - I both invertible
# over F_2. Counting them takes an exhaustive pass over all n x n bit matrices.

print()
for n in range(1, 6):
    c = glnf2_count(n)
    print(f"n = {n}: {c.good} of {c.total}  ({Fraction(c.good, c.total)})")
print("witness for n = 5:", witness_matrix(5).to_lists())

c = construction2(2, 3, explicit=True)
print(f"\nd = 12 holomorph of order {c.report.order_p}: FPP {c.fpp}, explicit {c.report.fpp.exact}")
