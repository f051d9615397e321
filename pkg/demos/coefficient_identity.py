"""
The coefficient identity, expanded by hand and in closed form
=============================================================

The engine behind the residue-class bound is one exact integer: the
coefficient of a target monomial in (x1^k + ... + xn^k)^N times the
Vandermonde product.  The library has two independent routes to it, a
factorial closed form and literal sparse-polynomial expansion.  This
script walks both on small cases and watches them agree.
"""

from math import factorial

from restrictedsums import (
    coefficient_formula,
    power_sum_pow,
    target_monomial,
    vandermonde,
)

# Start tiny: n = 2, k = 2, q = (1, 1), so N = q1 + q2 = 2 and the target
# monomial is x1^(2*1+0) * x2^(2*1+1) = x1^2 x2^3.
n, k, q = 2, 2, (1, 1)
N = sum(q)
target = target_monomial(q, k)
print(f"n = {n}, k = {k}, q = {q}: target exponents {target}")

closed = coefficient_formula(q, k)
print(f"closed form gives {closed}")

product = power_sum_pow(n, k, N).mul(vandermonde(n))
print(f"(x1^2 + x2^2)^2 * (x2 - x1) expands to {len(dict(product.terms()))} terms:")
print(f"  {product}")
oracle = product.coefficient_of(target)
print(f"expansion reads off {oracle}")
assert closed == oracle

# The Vandermonde factor alone is the q = 0 case: its leading diagonal
# coefficient is +1 for every n.
for m in range(1, 6):
    zero = (0,) * m
    assert coefficient_formula(zero, 1) == 1
    assert vandermonde(m).coefficient_of(target_monomial(zero, 1)) == 1
print("\nq = 0 recovers the Vandermonde diagonal (+1) for n = 1..5")

# When two residue classes collide the determinant has equal columns and
# the coefficient vanishes; the expansion sees the same cancellation.
collide = (1, 0)
print(f"\ncollision case q = {collide}, k = 1:")
c_closed = coefficient_formula(collide, 1)
c_oracle = (
    power_sum_pow(2, 1, 1).mul(vandermonde(2)).coefficient_of(target_monomial(collide, 1))
)
print(f"  closed {c_closed}, expansion {c_oracle}")
assert c_closed == c_oracle == 0

# A bigger sweep: every q with n = 3, k = 2 and q summing to at most 4.
# One shared expansion per total keeps this instant.
print("\nsweep n = 3, k = 2, sum(q) <= 4:")
checked = 0
for total in range(5):
    product = power_sum_pow(3, 2, total).mul(vandermonde(3))
    for a in range(total + 1):
        for b in range(total - a + 1):
            qq = (a, b, total - a - b)
            closed = coefficient_formula(qq, 2)
            oracle = product.coefficient_of(target_monomial(qq, 2))
            assert closed == oracle, (qq, closed, oracle)
            checked += 1
print(f"  {checked} coefficients, closed form == expansion every time")

# Vectors produced by the shrink construction come with a divisibility
# guarantee: their coefficient h divides (N - 1)!.  Sizes (5, 5, 5) with
# k = 2 shrink to q' = (1, 1, 1) and h = 3, which divides 3! = 6.
from restrictedsums import ExtendedNat, replay_shrink

plan = replay_shrink((5, 5, 5), 2, ExtendedNat(None))
print(f"\nshrink of sizes (5, 5, 5), k = 2: N = {plan.N}, q' = {plan.q_prime}")
print(f"  h = {plan.h}, (N - 1)! = {factorial(plan.N - 1)}")
assert plan.h == coefficient_formula(plan.q_prime, 2)
assert factorial(plan.N - 1) % plan.h == 0
print(f"  (N - 1)!/h = {factorial(plan.N - 1) // plan.h}, exactly as constructed")
