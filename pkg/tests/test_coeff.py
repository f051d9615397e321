"""Permutation signs, the coefficient closed form, and the replayable
construction of the lower-bound argument."""

import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from restrictedsums import (
    INFINITY,
    CoefficientCertificate,
    ExtendedNat,
    HypothesisViolated,
    NotInvariant,
    Permutation,
    PowerSumForm,
    ResidueClasses,
    SetFamily,
    SparsePoly,
    coefficient_by_expansion,
    coefficient_formula,
    falling_factorial,
    floor_minima,
    prime_field,
    proof_replay,
    rational_field,
    replay_shrink,
    target_monomial,
    vandermonde,
)


def inversion_parity_sign(images):
    inv = sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )
    return -1 if inv % 2 else 1


def exact_determinant(matrix):
    """Permutation-expansion determinant over exact scalars."""
    n = len(matrix)
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = inversion_parity_sign(perm)
        for i, j in enumerate(perm):
            prod *= matrix[i][j]
        total += prod
    return total


# ---------- permutations ----------


def test_permutation_basic_signs():
    assert Permutation.identity(range(1, 5)).sign() == 1
    assert Permutation.from_one_line((2, 1, 3)).sign() == -1
    assert Permutation.from_one_line((2, 3, 1)).sign() == 1
    assert Permutation.from_one_line((2, 1, 4, 3)).sign() == 1


def test_permutation_cycles():
    s = Permutation.from_one_line((2, 1, 3))
    assert s.cycles() == ((1, 2), (3,))
    assert Permutation.from_one_line((2, 3, 1)).cycles() == ((1, 2, 3),)
    assert Permutation.identity([5, 1, 9]).cycles() == ((1,), (5,), (9,))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_sign_equals_inversion_parity(n):
    for images in itertools.permutations(range(1, n + 1)):
        assert Permutation.from_one_line(images).sign() == inversion_parity_sign(images)


def test_permutation_arbitrary_points():
    s = Permutation({"a": "b", "b": "a", "c": "c"})
    assert s.sign() == -1
    assert s("a") == "b"
    assert s.domain == frozenset({"a", "b", "c"})


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation({1: 2, 2: 2})


def test_permutation_restrict():
    s = Permutation.from_one_line((2, 1, 4, 3))  # (1 2)(3 4)
    r = s.restrict({1, 2})
    assert r == Permutation({1: 2, 2: 1})
    assert r.sign() == -1
    with pytest.raises(NotInvariant):
        s.restrict({1, 3})  # not closed
    with pytest.raises(NotInvariant):
        s.restrict({1, 2, 9})  # outside the domain


def test_sign_is_multiplicative_across_invariant_splits():
    # if A is a union of cycles, the sign factors through the restriction
    for n in range(1, 6):
        for images in itertools.permutations(range(1, n + 1)):
            s = Permutation.from_one_line(images)
            cycles = s.cycles()
            for take in range(1 << len(cycles)):
                part = {
                    x
                    for idx, cyc in enumerate(cycles)
                    if take >> idx & 1
                    for x in cyc
                }
                rest = set(range(1, n + 1)) - part
                left = s.restrict(part).sign() if part else 1
                right = s.restrict(rest).sign() if rest else 1
                assert s.sign() == left * right


def test_permutation_immutable_and_hashable():
    s = Permutation.from_one_line((2, 1))
    with pytest.raises(AttributeError):
        s._map = {}
    assert len({s, Permutation({1: 2, 2: 1})}) == 1


# ---------- falling factorials ----------


def test_falling_factorial():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 4) == 0
    assert falling_factorial(-1, 2) == 2
    assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)
    with pytest.raises(ValueError):
        falling_factorial(5, -1)


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
def test_falling_factorial_determinant_equals_power_determinant(t):
    # row operations turn the power matrix into the falling-factorial matrix,
    # so both determinants equal the pair-difference product
    import random

    rng = random.Random(t)
    for _ in range(20):
        c = [rng.randint(0, 8) for _ in range(t)]
        power = [[c[j] ** i for j in range(t)] for i in range(t)]
        falling = [[falling_factorial(c[j], i) for j in range(t)] for i in range(t)]
        pair_product = 1
        for j in range(t):
            for i in range(j):
                pair_product *= c[j] - c[i]
        assert exact_determinant(power) == pair_product
        assert exact_determinant(falling) == pair_product


# ---------- residue classes of positions ----------


def test_residue_classes():
    rc = ResidueClasses(5, 2)
    assert rc.positions(1) == (1, 3, 5)
    assert rc.positions(2) == (2, 4)
    assert rc.all_classes() == ((1, 3, 5), (2, 4))
    assert rc.class_size(1) == 3
    assert rc.class_size(2) == 2
    with pytest.raises(ValueError):
        rc.positions(3)
    with pytest.raises(HypothesisViolated):
        ResidueClasses(2, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_residue_classes_partition(n):
    for k in range(1, n + 1):
        rc = ResidueClasses(n, k)
        flat = [p for cls in rc.all_classes() for p in cls]
        assert sorted(flat) == list(range(1, n + 1))
        for s in range(1, k + 1):
            assert rc.class_size(s) == len(rc.positions(s))


# ---------- the coefficient identity ----------


def test_target_monomial():
    assert target_monomial((1, 1, 1), 2) == (2, 3, 4)
    assert target_monomial((0, 0), 1) == (0, 1)
    assert target_monomial((2, 0, 1), 3) == (6, 1, 5)


def test_coefficient_formula_frozen_values():
    assert coefficient_formula((0,), 1) == 1
    assert coefficient_formula((0, 0), 1) == 1
    assert coefficient_formula((1, 1), 2) == 2
    assert coefficient_formula((0, 1), 2) == 1
    assert coefficient_formula((1, 0, 0), 3) == 1
    assert coefficient_formula((0, 0, 0), 2) == vandermonde(3).coefficient_of((0, 1, 2))


def test_coefficient_formula_collision_gives_zero():
    # q = (1, 0) at k = 1 collides: shifted entries are (1, 1)
    assert coefficient_formula((1, 0), 1) == 0
    assert coefficient_by_expansion((1, 0), 1) == 0


def test_coefficient_formula_guards():
    with pytest.raises(HypothesisViolated):
        coefficient_formula((1, 1), 3)  # k > n
    with pytest.raises(HypothesisViolated):
        coefficient_formula((1, -1), 1)


def test_expansion_oracle_frozen_values():
    assert coefficient_by_expansion((1, 1), 2) == 2
    assert coefficient_by_expansion((0, 1), 2) == 1
    assert coefficient_by_expansion((1, 0, 0), 3) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_form_matches_expansion(n):
    for k in range(1, n + 1):
        for q in itertools.product(range(0, 4), repeat=n):
            if sum(q) > 5:
                continue
            assert coefficient_formula(q, k) == coefficient_by_expansion(q, k), (q, k)


def test_single_class_case_is_plain_multinomial_with_vandermonde():
    # k = 1 puts every position in one class; spot-check larger vectors
    for q in [(2, 1, 0), (0, 2, 2), (3, 0, 1, 0)]:
        n = len(q)
        assert coefficient_formula(q, 1) == coefficient_by_expansion(q, 1)


def test_certificate_serializes_big_integers_as_strings():
    cert = CoefficientCertificate(
        n=2, k=1, q=(20, 20), N=40, closed_form=factorial(40), oracle=None
    )
    d = cert.to_json_dict()
    assert d["closed_form"] == str(factorial(40))
    assert d["oracle"] is None
    assert d["q"] == [20, 20]


# ---------- replay_shrink: the arithmetic spine ----------


def test_replay_shrink_infinite_characteristic():
    plan = replay_shrink((5, 5, 5), 2, INFINITY)
    assert plan.q == (1, 1, 1)
    assert plan.N == 4
    assert plan.split_index == 0
    assert plan.shrunk_sizes == (3, 4, 5)
    assert plan.q_prime == (1, 1, 1)
    assert plan.h == 3
    assert plan.h_residue is None
    assert plan.certificate.closed_form == 3


def test_replay_shrink_large_prime():
    plan = replay_shrink((9, 9), 2, ExtendedNat(11))
    assert plan.q == (4, 3)
    assert plan.N == 8
    assert plan.split_index == 0
    assert plan.shrunk_sizes == (9, 8)
    assert plan.h == 35
    assert plan.h_residue == 35 % 11 == 2


def test_replay_shrink_small_characteristic_splits():
    # the characteristic truncates: only part of the family stays active
    plan = replay_shrink((9, 9), 2, ExtendedNat(3))
    assert plan.q == (4, 3)
    assert plan.N == 3
    assert plan.split_index == 2
    assert plan.shrunk_sizes == (1, 6)
    assert plan.q_prime == (0, 2)
    assert plan.h == 1
    assert plan.h_residue == 1
    assert plan.char_repr == "3"


def test_replay_shrink_staircase_is_trivial():
    for n in range(1, 6):
        for k in range(1, n + 1):
            plan = replay_shrink(tuple(range(1, n + 1)), k, ExtendedNat(7))
            assert plan.N == 1
            assert plan.h == 1
            assert plan.shrunk_sizes == tuple(range(1, n + 1))


def test_replay_shrink_json():
    d = replay_shrink((9, 9), 2, ExtendedNat(3)).to_json_dict()
    assert d["characteristic"] == "3"
    assert d["h"] == "1"
    assert d["shrunk_sizes"] == [1, 6]
    assert d["certificate"]["n"] == 2


@given(
    k=st.integers(min_value=1, max_value=4),
    raw=st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=6),
    p=st.sampled_from([2, 3, 5, 7, 11, 13, None]),
)
def test_replay_shrink_invariants(k, raw, p):
    n = len(raw)
    if k > n:
        return
    sizes = tuple(i + r for i, r in enumerate(raw, start=1))
    char = INFINITY if p is None else ExtendedNat(p)
    plan = replay_shrink(sizes, k, char)
    assert plan.N == char.clamp(sum(floor_minima(sizes, k)) + 1)
    assert sum(plan.q_prime) == plan.N - 1
    assert all(i <= w <= s for i, (w, s) in enumerate(zip(plan.shrunk_sizes, sizes), 1))
    assert plan.h >= 1
    assert factorial(plan.N - 1) % plan.h == 0
    if p is not None:
        assert plan.h_residue == plan.h % p != 0


# ---------- proof_replay: the full construction on a concrete family ----------


def interval_family(field, n, m):
    return SetFamily.from_elements(field, [range(m)] * n)


def test_proof_replay_gf11():
    F = prime_field(11)
    replay = proof_replay(interval_family(F, 3, 5), 2)
    assert replay.q == (1, 1, 1)
    assert replay.N == 4
    assert replay.shrunk_family.sizes == (3, 4, 5)
    assert replay.h == 3
    assert replay.h_element == F.element(3)
    assert replay.value_count is not None and replay.value_count >= 4
    w = replay.witness
    assert w is not None
    assert len(w["excluded_values"]) == 3
    assert w["value"] not in w["excluded_values"]
    point = [int(x) for x in w["point"]]
    assert len(set(point)) == 3
    shrunk_sets = [{e.value for e in s} for s in replay.shrunk_family.sets]
    for x, allowed in zip(point, shrunk_sets):
        assert x in allowed


def test_proof_replay_rational():
    replay = proof_replay(interval_family(rational_field(), 3, 5), 2)
    assert replay.N == 4
    assert replay.h == 3
    assert replay.h_element.value == Fraction(3)
    assert replay.value_count >= 4


def test_proof_replay_respects_guard():
    replay = proof_replay(interval_family(prime_field(11), 3, 5), 2, guard_tuples=10)
    assert replay.value_count is None
    assert replay.witness is None
    assert replay.h == 3  # arithmetic phase still runs


def test_proof_replay_rejects_bad_forms():
    F = prime_field(11)
    fam = interval_family(F, 3, 5)
    with pytest.raises(HypothesisViolated):
        proof_replay(fam, 2, f=PowerSumForm(2, (2, 1, 1), SparsePoly.zero(3)))
    with pytest.raises(HypothesisViolated):
        proof_replay(fam, 4)  # k > n


def test_proof_replay_with_expanded_certificate():
    F = prime_field(5)
    fam = SetFamily.from_elements(F, [[0, 1, 2], [0, 1, 2, 3]])
    replay = proof_replay(fam, 2, expand_certificate=True)
    assert replay.N == 3
    assert replay.h == 2
    cert = replay.cn_certificate
    assert cert is not None
    assert cert.coefficient == F.element(2)
    assert cert.nonzero
    assert cert.witness is not None
    assert not cert.witness_value.is_zero


def test_proof_replay_json_shape():
    fam = interval_family(prime_field(11), 3, 5)
    d = proof_replay(fam, 2).to_json_dict()
    assert d["field"] == "gf(11)"
    assert d["h"] == "3"
    assert d["q"] == [1, 1, 1]
    assert isinstance(d["witness"]["value"], str)
    assert d["certificate"]["field"] == "gf(11)"
    # a second replay of the same family serializes identically
    assert proof_replay(fam, 2).to_json_dict() == d


@given(
    p=st.sampled_from([5, 7, 11, 13]),
    n=st.integers(min_value=1, max_value=3),
    k=st.integers(min_value=1, max_value=3),
    extra=st.integers(min_value=0, max_value=3),
)
def test_proof_replay_bound_is_always_attained(p, n, k, extra):
    if k > n:
        return
    m = min(p, n + extra)
    replay = proof_replay(interval_family(prime_field(p), n, m), k)
    assert replay.value_count >= replay.N
