"""
A tour of the lower bounds, checked against brute-force enumeration
===================================================================

Every bound in the library is a guaranteed floor on the number of distinct
values of f = x1^k + ... + xn^k + g, where the xi are drawn from finite
sets A1, ..., An.  This script computes each bound on small instances over
GF(7) and the rationals, then enumerates the actual value sets to watch the
inequalities hold (and sometimes meet).
"""

from restrictedsums import (
    ExtendedNat,
    PowerSumForm,
    SetFamily,
    distinct_sum_bound,
    equal_size_bound,
    erdos_heilbronn_bound,
    prime_field,
    rational_field,
    residue_class_bound,
    restricted_floor_bound,
    restricted_value_set,
    single_set_conjecture_bound,
    unrestricted_floor_bound,
    unrestricted_value_set,
)

F = prime_field(7)
char = F.characteristic
print(f"working over {F}, characteristic {char}")

# Three sets of sizes 3, 4, 5 and squares (k = 2).  The xi must be
# pairwise distinct, which is what "restricted" means throughout.
family = SetFamily.from_elements(F, [[0, 1, 3], [0, 2, 4, 5], [1, 2, 3, 5, 6]])
k = 2
form = PowerSumForm.unit(family.n, k)

bound = residue_class_bound(family.sizes, k, char)
actual = restricted_value_set(family, form)
print(f"\nsizes {family.sizes}, k = {k}")
print(f"  residue-class bound : {bound.value}")
print(f"  actual cardinality  : {actual.cardinality}")
assert actual.cardinality >= bound.value

# The per-variable floor bound needs no size staircase and allows any
# nonzero leading coefficients; unrestricted tuples have their own variant.
print(f"  per-variable floor (restricted, k >= n needs k = 3):")
rbound = restricted_floor_bound(family.sizes, 3, char)
ractual = restricted_value_set(family, PowerSumForm.unit(family.n, 3))
print(f"    k = 3 bound {rbound.value}, actual {ractual.cardinality}")
assert ractual.cardinality >= rbound.value

ubound = unrestricted_floor_bound(family.sizes, k, char)
uactual = unrestricted_value_set(family, form)
print(f"  unrestricted floor  : bound {ubound.value}, actual {uactual.cardinality}")
assert uactual.cardinality >= ubound.value

# Equal sizes admit a cleaner closed form.  Take all three sets of size 4.
equal = SetFamily.from_elements(F, [[0, 1, 2, 4]] * 3)
ebound = equal_size_bound(4, equal.n, k, char)
eactual = restricted_value_set(equal, form)
print(f"\nequal sizes (4, 4, 4): bound {ebound.value}, actual {eactual.cardinality}")
assert eactual.cardinality >= ebound.value

# Over a field of characteristic zero nothing clamps: the same size data
# gives the same combinatorial floor, but now it can never hit the field
# size ceiling.  ExtendedNat("inf") is the characteristic object.
Q = rational_field()
qfam = SetFamily.from_elements(Q, [[0, 1, 2, 4]] * 3)
qbound = equal_size_bound(4, 3, k, Q.characteristic)
qactual = restricted_value_set(qfam, form)
print(f"over {Q}: bound {qbound.value}, actual {qactual.cardinality}")
assert ExtendedNat(qbound.value) <= ExtendedNat(qactual.cardinality)

# Distinct linear sums from a single set: choose n distinct elements of A
# and add them.  For n = 2 this is the classical pair-sum floor 2|A| - 3,
# and arithmetic progressions meet it exactly.
A = [0, 1, 2, 3, 4]  # an AP in GF(7)
pair_bound = erdos_heilbronn_bound(len(A), char)
pairs = {(a + b) % 7 for a in A for b in A if a != b}
print(f"\npair sums of the progression {A}:")
print(f"  floor {pair_bound.value}, actual {len(pairs)} (tight)")
assert len(pairs) == pair_bound.value

n = 3
triple_bound = distinct_sum_bound(len(A), n, char)
triples = {
    (a + b + c) % 7
    for a in A
    for b in A
    for c in A
    if a != b and a != c and b != c
}
print(f"  {n}-fold distinct sums: floor {triple_bound.value}, actual {len(triples)}")
assert len(triples) >= triple_bound.value

# The single-set conjecture sharpens the k-th power bound when all n
# variables range over one set; at n = 2 it adds a bracket correction.
conj = single_set_conjecture_bound(5, 2, k, char)
print(f"\nsingle-set conjecture, |A| = 5, n = 2, k = {k}: bound {conj.value}")
B = SetFamily.from_elements(F, [[0, 1, 2, 3, 4]] * 2)
bactual = restricted_value_set(B, PowerSumForm.unit(2, k))
print(f"  actual on A = {{0..4}}: {bactual.cardinality}")
assert bactual.cardinality >= conj.value

print("\nall inequalities held")
