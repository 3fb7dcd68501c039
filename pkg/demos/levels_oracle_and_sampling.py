# Three ways to see the same number
#
# p_n is the proportion of the level-n quotient of W_S that fixes some leaf at
# depth n. It satisfies p_{n+1} = f_S(p_n) with p_0 = 1, so it decreases to the
# fixed-point proportion. Below it is computed from the recursion, counted by
# brute force over every labelling of the truncated tree, and estimated by
# simulating the branching process of fixed vertices.

from treefpp.oracle import brute_count, mc_estimate
from treefpp.permcore import generate_group, parse_permutation, symmetric_group
from treefpp.solver import fpp_iterate, iterate_p, solve_set
from treefpp.spectrum import derangement_profile

# On the binary tree with both labels allowed, p_n shrinks like 2/n.

trace = fpp_iterate(derangement_profile(symmetric_group(2)), 4)
print("p_n for Aut of the binary tree:", [str(p) for p in trace.p])
print("sigma_n:", trace.sigma, " f_n:", trace.f)

# Enumerating all 8 labellings of the depth-2 tree gives the same count.

report = brute_count(symmetric_group(2), 2)
print(f"brute force at level 2: {report.f_n_brute} of {report.sigma_n} fix a leaf")

# For S = <(1,2)(3,4)> the proportion stays positive. The fixed vertices form
# a Galton-Watson tree: each fixed vertex has 0 or 4 fixed children with equal
# probability, so survival to depth n has probability p_n.

H = generate_group([parse_permutation("(1,2)(3,4)", 4)])
limit = solve_set(H)
p10 = iterate_p(derangement_profile(H), 10)[-1]
sample = mc_estimate(H, depth=10, samples=200_000, seed=11)
print()
print(f"limit            {limit.decimal}")
print(f"p_10 exact       {float(p10):.10f}")
print(f"p_10 simulated   {float(sample.estimate):.10f} +/- {sample.stderr:.1e}")
