"""Exhaustive value-set enumeration over explicit set families.

This is the ground-truth side of every bound check: walk all (injective)
tuples of a family with exact field arithmetic and collect the attained
values.  Guards keep accidental combinatorial explosions from hanging a run;
they raise :class:`SearchSpaceTooLarge` with the offending product.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .errors import (
    ArityMismatch,
    ConfigError,
    FieldMismatch,
    HypothesisViolated,
    Infeasible,
    NotPrime,
    NotSymmetric,
    SearchSpaceTooLarge,
)
from .fields import FieldDescriptor, FieldElement, parse_field
from .poly import PowerSumForm, is_symmetric

DEFAULT_TUPLE_GUARD = 10_000_000


@dataclass(frozen=True)
class SetFamily:
    """A tuple of finite subsets of one field, each sorted and duplicate-free."""

    field: FieldDescriptor
    sets: tuple

    @classmethod
    def from_elements(cls, field: FieldDescriptor, sets) -> "SetFamily":
        normalized = []
        for i, raw in enumerate(sets, start=1):
            elems = [field.element(x) for x in raw]
            if len({e.value for e in elems}) != len(elems):
                raise ValueError(f"set {i} has duplicate elements: {list(raw)}")
            normalized.append(tuple(sorted(elems, key=lambda e: e.sort_key())))
        return cls(field, tuple(normalized))

    @property
    def n(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> tuple:
        return tuple(len(s) for s in self.sets)

    def subfamily(self, sizes) -> "SetFamily":
        """Keep the first ``sizes[i]`` elements of each set (canonical order)."""
        sizes = tuple(sizes)
        if len(sizes) != self.n:
            raise ArityMismatch(f"{len(sizes)} sizes for {self.n} sets")
        for have, want in zip(self.sizes, sizes):
            if want > have:
                raise HypothesisViolated(f"cannot shrink a set of size {have} to {want}")
        return SetFamily(self.field, tuple(s[:w] for s, w in zip(self.sets, sizes)))


def family_from_json(source) -> SetFamily:
    """Parse ``{"field": "gf(7)", "sets": [[0,1,2], [0,1,2]]}``.

    Rational elements may be written as ints or "a/b" strings.
    """
    if isinstance(source, str):
        source = json.loads(source)
    if not isinstance(source, dict):
        raise ConfigError(f"family JSON must be an object, got {type(source).__name__}")
    unknown = set(source) - {"field", "sets"}
    if unknown:
        raise ConfigError(f"unknown family keys: {sorted(unknown)}")
    if "field" not in source or "sets" not in source:
        raise ConfigError('family JSON needs "field" and "sets"')
    try:
        field = parse_field(source["field"])
    except (ValueError, NotPrime) as exc:
        raise ConfigError(str(exc)) from exc
    sets = source["sets"]
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise ConfigError('"sets" must be a list of lists')
    try:
        return SetFamily.from_elements(field, sets)
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from exc


def family_to_json(family: SetFamily) -> dict:
    def encode(e: FieldElement):
        if isinstance(e.value, Fraction):
            return str(e.value) if e.value.denominator != 1 else int(e.value)
        return e.value

    return {
        "field": str(family.field),
        "sets": [[encode(e) for e in s] for s in family.sets],
    }


@dataclass(frozen=True)
class ValueSetResult:
    cardinality: int
    values: tuple
    tuples_examined: int
    restricted: bool
    witnesses: dict | None = None

    def sorted_values(self):
        return self.values


def _check_form(family: SetFamily, f: PowerSumForm):
    if f.n != family.n:
        raise ArityMismatch(f"form has {f.n} variables, family has {family.n} sets")
    for a in f.leading:
        if isinstance(a, FieldElement) and a.field != family.field:
            raise FieldMismatch("leading coefficients live in a different field")


def _enumerate(family, f, restricted, guard_tuples, collect_witnesses):
    _check_form(family, f)
    n = family.n
    space = prod(family.sizes)
    if space > guard_tuples:
        raise SearchSpaceTooLarge(
            f"family spans {space} tuples, guard is {guard_tuples}"
        )
    field = family.field
    # a_i * x^k once per element, not once per tuple
    lead = []
    for a, s in zip(f.leading, family.sets):
        coeff = field.embed(a) if isinstance(a, int) else a
        lead.append({x: coeff * x**f.k for x in s})
    tail = f.tail
    tail_is_zero = tail.is_zero
    seen: dict = {}
    used: set = set()
    point: list = []
    examined = 0

    def rec(i, acc):
        nonlocal examined
        if i == n:
            value = acc if tail_is_zero else acc + tail.eval(point)
            examined += 1
            if value not in seen:
                seen[value] = tuple(point) if collect_witnesses else None
            return
        contrib = lead[i]
        for x in family.sets[i]:
            if restricted and x in used:
                continue
            point.append(x)
            if restricted:
                used.add(x)
            rec(i + 1, acc + contrib[x])
            if restricted:
                used.remove(x)
            point.pop()

    rec(0, field.zero)
    values = tuple(sorted(seen, key=lambda e: e.sort_key()))
    witnesses = {v: seen[v] for v in values} if collect_witnesses else None
    return ValueSetResult(len(values), values, examined, restricted, witnesses)


def restricted_value_set(
    family: SetFamily,
    f: PowerSumForm,
    guard_tuples: int = DEFAULT_TUPLE_GUARD,
    collect_witnesses: bool = False,
) -> ValueSetResult:
    """Values of f over tuples with pairwise distinct coordinates."""
    return _enumerate(family, f, True, guard_tuples, collect_witnesses)


def unrestricted_value_set(
    family: SetFamily,
    f: PowerSumForm,
    guard_tuples: int = DEFAULT_TUPLE_GUARD,
    collect_witnesses: bool = False,
) -> ValueSetResult:
    """Values of f over all tuples of the family."""
    return _enumerate(family, f, False, guard_tuples, collect_witnesses)


def symmetric_fast_path(
    elements,
    n: int,
    f: PowerSumForm,
    tail_symmetric: bool = False,
    guard_tuples: int = DEFAULT_TUPLE_GUARD,
) -> ValueSetResult:
    """Restricted value set of a symmetric f over one set, via n-subsets.

    When every a_i is equal and the tail is symmetric, the value of f on an
    injective tuple depends only on the underlying n-subset, so enumerating
    subsets instead of tuples saves a factor of n!.  The tail must be zero or
    declared symmetric via ``tail_symmetric`` (the declaration is verified).
    """
    first = f.leading[0]
    if any(a != first for a in f.leading[1:]):
        raise NotSymmetric(f"leading coefficients differ: {f.leading}")
    if not f.tail.is_zero:
        if not tail_symmetric:
            raise NotSymmetric("tail is nonzero and was not declared symmetric")
        if not is_symmetric(f.tail):
            raise NotSymmetric("tail was declared symmetric but is not")
    if f.n != n:
        raise ArityMismatch(f"form has {f.n} variables, expected {n}")
    elems = tuple(sorted(elements, key=lambda e: e.sort_key()))
    if len({e.value for e in elems}) != len(elems):
        raise ValueError("base set has duplicate elements")
    if not elems:
        raise HypothesisViolated("base set is empty")
    field = elems[0].field
    subsets = comb(len(elems), n) if n <= len(elems) else 0
    if subsets > guard_tuples:
        raise SearchSpaceTooLarge(f"{subsets} subsets, guard is {guard_tuples}")
    from itertools import combinations

    seen = set()
    examined = 0
    for combo in combinations(elems, n):
        seen.add(f.eval(combo))
        examined += 1
    values = tuple(sorted(seen, key=lambda e: e.sort_key()))
    return ValueSetResult(len(values), values, examined, True)


@dataclass(frozen=True)
class MultiplicityProfile:
    """Combinatorial model of choosing n distinct k-th roots.

    The available root targets are the integers 1..q (k distinct roots each)
    and q+1 (r distinct roots, 0 <= r < k).  A selection is a multiplicity
    vector within those caps summing to n; its value is the weighted sum.
    All arithmetic is over the integers, no complex roots are materialized.
    """

    k: int
    q: int
    r: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.q < 0 or not 0 <= self.r < self.k:
            raise HypothesisViolated(
                f"need k >= 1, q >= 0, 0 <= r < k; got k={self.k}, q={self.q}, r={self.r}"
            )
        if not 1 <= self.n <= self.k * self.q + self.r:
            raise Infeasible(
                f"cannot choose {self.n} distinct roots from {self.k * self.q + self.r}"
            )

    @property
    def size(self) -> int:
        return self.k * self.q + self.r


def multiplicity_value_set(profile: MultiplicityProfile) -> ValueSetResult:
    """All achievable weighted sums of the multiplicity model, exactly."""
    caps = [profile.k] * profile.q + [profile.r]
    values: set[int] = set()
    examined = 0

    def rec(idx, left, acc):
        nonlocal examined
        if idx == len(caps):
            if left == 0:
                values.add(acc)
                examined += 1
            return
        remaining_capacity = sum(caps[idx:])
        if left > remaining_capacity:
            return
        for take in range(min(caps[idx], left) + 1):
            rec(idx + 1, left - take, acc + take * (idx + 1))

    rec(0, profile.n, 0)
    return ValueSetResult(len(values), tuple(sorted(values)), examined, True)
