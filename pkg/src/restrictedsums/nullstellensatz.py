"""Certified coefficient extraction with exhaustive witness search.

The underlying principle: if deg P = k1 + ... + kn, the coefficient of
x1^k1 * ... * xn^kn in P is nonzero, and |Ai| > ki for finite sets Ai, then
P has a nonvanishing point on A1 x ... x An.  The principle itself is taken
as an axiom; :func:`certify` checks its hypotheses exactly, extracts the
coefficient over the field, and (optionally) finds the promised point by
exhaustive search.  A completed search that finds nothing is reported as a
broken invariant, never swallowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .errors import ArityMismatch, HypothesisViolated, InternalInvariantBroken, SearchSpaceTooLarge
from .enumeration import DEFAULT_TUPLE_GUARD, SetFamily
from .fields import FieldElement
from .poly import SparsePoly


@dataclass(frozen=True)
class NullstellensatzInstance:
    """A polynomial, a target monomial, and a family to search over."""

    poly: SparsePoly
    degrees: tuple
    family: SetFamily

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if self.poly.nvars != self.family.n or len(self.degrees) != self.family.n:
            raise ArityMismatch(
                f"poly has {self.poly.nvars} vars, {len(self.degrees)} degrees, "
                f"{self.family.n} sets"
            )
        for d in self.degrees:
            if not isinstance(d, int) or isinstance(d, bool) or d < 0:
                raise ArityMismatch(f"degrees must be nonnegative integers: {self.degrees}")


@dataclass(frozen=True)
class NullstellensatzCertificate:
    coefficient: FieldElement
    nonzero: bool
    witness: tuple | None
    witness_value: FieldElement | None
    searched: bool

    def to_json_dict(self) -> dict:
        return {
            "coefficient": str(self.coefficient.value),
            "nonzero": self.nonzero,
            "witness": None if self.witness is None else [str(x.value) for x in self.witness],
            "witness_value": None if self.witness_value is None else str(self.witness_value.value),
            "searched": self.searched,
        }


def certify(
    instance: NullstellensatzInstance,
    witness_search: bool = True,
    guard_tuples: int = DEFAULT_TUPLE_GUARD,
    point_fn=None,
) -> NullstellensatzCertificate:
    """Check hypotheses, extract the target coefficient, optionally search.

    ``point_fn`` may supply a cheaper equivalent evaluator (for example a
    factored form of the polynomial); by default the expanded polynomial is
    evaluated directly.
    """
    field = instance.family.field
    P = instance.poly.reduce(field)
    total = sum(instance.degrees)
    if P.degree != total:
        raise HypothesisViolated(
            f"deg P = {P.degree} over {field}, but degrees sum to {total}"
        )
    for i, (d, size) in enumerate(zip(instance.degrees, instance.family.sizes), start=1):
        if d >= size:
            raise HypothesisViolated(f"need degree {d} < |A{i}| = {size}")
    coefficient = P.coefficient_of(instance.degrees)
    if isinstance(coefficient, int):
        coefficient = field.embed(coefficient)
    if coefficient.is_zero:
        return NullstellensatzCertificate(coefficient, False, None, None, False)
    if not witness_search:
        return NullstellensatzCertificate(coefficient, True, None, None, False)
    space = prod(instance.family.sizes)
    if space > guard_tuples:
        raise SearchSpaceTooLarge(f"witness space has {space} tuples, guard is {guard_tuples}")
    evaluate = point_fn if point_fn is not None else P.eval
    for point in product(*instance.family.sets):
        value = evaluate(point)
        if not value.is_zero:
            return NullstellensatzCertificate(coefficient, True, point, value, True)
    raise InternalInvariantBroken(
        "nonzero coefficient but no witness on the whole grid; "
        f"degrees={instance.degrees}, sizes={instance.family.sizes}"
    )
