# Fixed-point proportions of iterated wreath products over small symmetric groups
#
# For a set S of permutations of {1..d}, W_S is the group of automorphisms of
# the d-regular rooted tree whose label at every vertex lies in S. Its
# fixed-point proportion is the largest fixed point of
#
#     f_S(x) = sum_k D[k]/#S * (1 - (1-x)^k)
#
# on [0, 1], where D[k] counts the elements of S fixing exactly k points.

from treefpp.branch import survey
from treefpp.permcore import generate_group, parse_permutation
from treefpp.spectrum import characteristic_polynomial, derangement_profile

# Sym(3) has four classes of subgroups. The two transitive ones average exactly
# one fixed point, so their proportion is 0; the other two contain no
# derangement at all, so every element of W_S fixes a leaf.

for row in survey(3):
    gens = " ".join(map(str, row.generators)) or "()"
    print(f"{gens:>14}  order {row.order}  FPP {row.fpp.decimal}")

# Sym(4) is more interesting: two classes land strictly between 0 and 1.

print()
for row in survey(4):
    if row.fpp.classification == "Algebraic":
        gens = " ".join(map(str, row.generators))
        print(f"{gens:>14}  FPP {row.fpp.decimal}  root of {row.fpp.defining_polynomial}")

# The characteristic polynomial itself is exact. For <(1,2)(3,4)> half the
# elements fix nothing and the identity fixes all four points.

H = generate_group([parse_permutation("(1,2)(3,4)", 4)])
f = characteristic_polynomial(derangement_profile(H))
print()
print("coefficients of f:", [str(c) for c in f.coefficients])
for x in (0, 0.25, 0.4563109873079236, 0.75, 1):
    print(f"f({x}) = {float(f(x)):.12f}")
