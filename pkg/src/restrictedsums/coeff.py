"""The product/factorial closed form for a distinguished coefficient, and a
replayable construction of the lower-bound argument built on it.

The identity at the core: for q1..qn >= 0 with N = q1 + ... + qn and
1 <= k <= n, the coefficient of

    x1^(k*q1 + 0) * x2^(k*q2 + 1) * ... * xn^(k*qn + n-1)

in (x1^k + ... + xn^k)^N * prod_{i<j} (xj - xi) equals

    N! * prod_{s=1}^{k} [ prod_{0<=i<j} (c_j - c_i)  /  prod_j c_j! ]

where, within the class of positions congruent to s mod k, the shifted
entries are c_j = q_{jk+s} + j (positions read 1-based).  Everything here is
exact integer arithmetic; the expansion oracle is the independent route the
closed form is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from .bounds import floor_minima
from .enumeration import (
    DEFAULT_TUPLE_GUARD,
    SetFamily,
    restricted_value_set,
)
from .errors import (
    HypothesisViolated,
    InternalInvariantBroken,
    NotInvariant,
)
from .fields import FieldElement
from .nullstellensatz import NullstellensatzCertificate, NullstellensatzInstance, certify
from .poly import (
    DEFAULT_TERM_GUARD,
    PowerSumForm,
    SparsePoly,
    power_sum_pow,
    vandermonde,
)


# ---------- permutations ----------


class Permutation:
    """A bijection on an arbitrary finite set of hashable points."""

    __slots__ = ("_map",)

    def __init__(self, mapping: dict):
        m = dict(mapping)
        if set(m.keys()) != set(m.values()):
            raise ValueError("mapping is not a bijection on its domain")
        object.__setattr__(self, "_map", m)

    def __setattr__(self, name, _value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, points: Iterable) -> "Permutation":
        return cls({x: x for x in points})

    @classmethod
    def from_one_line(cls, images: Iterable[int]) -> "Permutation":
        """Images of 1..n in order, e.g. (2, 1, 3)."""
        images = tuple(images)
        return cls({i: img for i, img in enumerate(images, start=1)})

    @property
    def domain(self) -> frozenset:
        return frozenset(self._map)

    def __call__(self, x):
        return self._map[x]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def cycles(self) -> tuple:
        """Cycle decomposition; each cycle starts at its smallest point."""
        seen = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self._map[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self._map[x]
            out.append(tuple(cycle))
        return tuple(out)

    def sign(self) -> int:
        """(-1) ** (number of points minus number of cycles)."""
        return -1 if (len(self._map) - len(self.cycles())) % 2 else 1

    def restrict(self, subset: Iterable) -> "Permutation":
        subset = set(subset)
        if not subset <= self.domain:
            raise NotInvariant(f"{sorted(subset, key=repr)} is not inside the domain")
        if {self._map[x] for x in subset} != subset:
            raise NotInvariant("subset is not closed under the permutation")
        return Permutation({x: self._map[x] for x in subset})

    def __repr__(self):
        return f"Permutation({self.cycles()})"


def falling_factorial(y, i: int):
    """y * (y-1) * ... * (y-i+1); the empty product 1 for i == 0."""
    if not isinstance(i, int) or isinstance(i, bool) or i < 0:
        raise ValueError(f"need a nonnegative integer, got {i!r}")
    out = 1
    for t in range(i):
        out *= y - t
    return out


# ---------- residue classes of positions ----------


@dataclass(frozen=True)
class ResidueClasses:
    """Positions 1..n grouped by their residue class s = 1..k (position mod k)."""

    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise HypothesisViolated(f"need 1 <= k <= n, got k={self.k}, n={self.n}")

    def positions(self, s: int) -> tuple:
        if not 1 <= s <= self.k:
            raise ValueError(f"class index must be in 1..{self.k}")
        return tuple(range(s, self.n + 1, self.k))

    def all_classes(self) -> tuple:
        return tuple(self.positions(s) for s in range(1, self.k + 1))

    def class_size(self, s: int) -> int:
        return (self.n - s) // self.k + 1


def _shifted_entries(q, positions) -> list:
    """c_j = q at the j-th position of the class, plus its offset j (0-based)."""
    return [q[pos - 1] + j for j, pos in enumerate(positions)]


def _validate_q(q, k: int) -> tuple:
    q = tuple(q)
    n = len(q)
    if not 1 <= k <= n:
        raise HypothesisViolated(f"need 1 <= k <= n = {n}, got k = {k}")
    for i, qi in enumerate(q, start=1):
        if not isinstance(qi, int) or isinstance(qi, bool) or qi < 0:
            raise HypothesisViolated(f"q{i} must be a nonnegative integer, got {qi!r}")
    return q


def target_monomial(q, k: int) -> tuple:
    """Exponent vector (k*q1 + 0, k*q2 + 1, ..., k*qn + n-1)."""
    q = _validate_q(q, k)
    return tuple(k * qj + j for j, qj in enumerate(q))


def coefficient_formula(q, k: int) -> int:
    """The closed form; may be zero or negative, always an exact integer."""
    q = _validate_q(q, k)
    n = len(q)
    classes = ResidueClasses(n, k)
    result = Fraction(factorial(sum(q)))
    for positions in classes.all_classes():
        shifted = _shifted_entries(q, positions)
        for j in range(len(shifted)):
            for i in range(j):
                result *= shifted[j] - shifted[i]
            result /= factorial(shifted[j])
    if result.denominator != 1:
        raise InternalInvariantBroken(f"closed form is not an integer: {result}")
    return int(result)


def coefficient_by_expansion(q, k: int, max_terms: int = DEFAULT_TERM_GUARD) -> int:
    """Independent oracle: expand the product and read the coefficient off."""
    q = _validate_q(q, k)
    n = len(q)
    product = power_sum_pow(n, k, sum(q), max_terms=max_terms).mul(
        vandermonde(n, max_terms=max_terms), max_terms=max_terms
    )
    return product.coefficient_of(target_monomial(q, k))


@dataclass(frozen=True)
class CoefficientCertificate:
    """Record of one coefficient computation; big integers serialize as
    decimal strings so JSON consumers never lose precision."""

    n: int
    k: int
    q: tuple
    N: int
    closed_form: int
    oracle: int | None = None
    h: int | None = None
    h_residue: int | None = None
    field: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "q": list(self.q),
            "N": self.N,
            "closed_form": str(self.closed_form),
            "oracle": None if self.oracle is None else str(self.oracle),
            "h": None if self.h is None else str(self.h),
            "h_residue": None if self.h_residue is None else str(self.h_residue),
            "field": self.field,
        }


# ---------- constructive replay of the lower-bound argument ----------


@dataclass(frozen=True)
class ShrinkPlan:
    """The arithmetic spine of the constructive argument.

    Depends only on the set sizes, k, and the characteristic, so it also
    covers abstract instances (e.g. sizes larger than p over a non-prime
    field of characteristic p) where no concrete subsets of GF(p) exist.
    """

    sizes: tuple
    k: int
    char_repr: str
    q: tuple
    N: int
    split_index: int
    shrunk_sizes: tuple
    q_prime: tuple
    h: int
    h_residue: int | None  # h mod p for finite characteristic
    certificate: CoefficientCertificate

    def to_json_dict(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "k": self.k,
            "characteristic": self.char_repr,
            "q": list(self.q),
            "N": self.N,
            "split_index": self.split_index,
            "shrunk_sizes": list(self.shrunk_sizes),
            "q_prime": list(self.q_prime),
            "h": str(self.h),
            "h_residue": self.h_residue,
            "certificate": self.certificate.to_json_dict(),
        }


@dataclass(frozen=True)
class ProofReplay:
    """Every intermediate object of the constructive argument, checkable."""

    family: SetFamily
    k: int
    q: tuple
    N: int
    split_index: int
    shrunk_family: SetFamily
    q_prime: tuple
    h: int
    h_element: FieldElement
    certificate: CoefficientCertificate
    value_count: int | None = None
    witness: dict | None = None
    cn_certificate: NullstellensatzCertificate | None = None

    def to_json_dict(self) -> dict:
        out = {
            "field": str(self.family.field),
            "k": self.k,
            "n": self.family.n,
            "sizes": list(self.family.sizes),
            "q": list(self.q),
            "N": self.N,
            "split_index": self.split_index,
            "shrunk_sizes": list(self.shrunk_family.sizes),
            "q_prime": list(self.q_prime),
            "h": str(self.h),
            "h_element": str(self.h_element.value),
            "certificate": self.certificate.to_json_dict(),
            "value_count": self.value_count,
            "witness": self.witness,
            "cn_certificate": None
            if self.cn_certificate is None
            else self.cn_certificate.to_json_dict(),
        }
        return out


def _split_index(q, char) -> int:
    """Least m in 0..n with sum(q[m:]) < p(F); always exists since the empty
    tail sum is 0 < p."""
    n = len(q)
    if char.is_infinite:
        return 0
    for m in range(n + 1):
        if sum(q[m:]) < char.value:
            return m
    raise InternalInvariantBroken("no split index found")  # unreachable


def _denominator_product(q_prime, k: int) -> int:
    """prod over classes, positions j, and r in [0, c_j) excluding earlier
    shifted entries, of (c_j - r)."""
    n = len(q_prime)
    D = 1
    for positions in ResidueClasses(n, k).all_classes():
        shifted = _shifted_entries(q_prime, positions)
        for j, cj in enumerate(shifted):
            earlier = set(shifted[:j])
            for r in range(cj):
                if r not in earlier:
                    D *= cj - r
    return D


def replay_shrink(sizes, k: int, char) -> ShrinkPlan:
    """The arithmetic phase of the constructive argument, for any sizes and
    characteristic: compute the q-vector and N = min(p(F), sum q + 1), shrink
    the sizes so the shrunk q-vector sums to exactly N - 1, check the strict
    chain, and compute h via the literal product form, checking that it
    divides (N-1)!, matches the closed form, and survives reduction mod p.
    """
    sizes = tuple(sizes)
    n = len(sizes)
    q = floor_minima(sizes, k)
    N = char.clamp(sum(q) + 1)
    m = _split_index(q, char)

    shrunk_sizes = list(sizes)
    for i in range(m + 1, n + 1):
        shrunk_sizes[i - 1] = k * q[i - 1] + i
    if m > 0:
        p = char.value
        shrunk_sizes[m - 1] = k * (p - 1 - sum(q[m:])) + m
        for i in range(1, m):
            shrunk_sizes[i - 1] = i
    for i, (want, have) in enumerate(zip(shrunk_sizes, sizes), start=1):
        if not i <= want <= have:
            raise InternalInvariantBroken(
                f"shrunk size {want} for set {i} out of range [{i}, {have}]"
            )
    shrunk_sizes = tuple(shrunk_sizes)

    q_prime = []
    for i, size in enumerate(shrunk_sizes, start=1):
        if (size - i) % k != 0:
            raise InternalInvariantBroken(f"shrunk size {size} - {i} not divisible by k")
        q_prime.append((size - i) // k)
    q_prime = tuple(q_prime)
    if sum(size - i for i, size in enumerate(shrunk_sizes, start=1)) != k * (N - 1):
        raise InternalInvariantBroken("shrunk degrees do not sum to k*(N-1)")

    # strict chain: within each residue class the shifted entries must rise
    for positions in ResidueClasses(n, k).all_classes():
        shifted = _shifted_entries(q_prime, positions)
        if shifted[0] < 0 or any(b <= a for a, b in zip(shifted, shifted[1:])):
            raise InternalInvariantBroken(f"shifted entries not strictly increasing: {shifted}")

    D = _denominator_product(q_prime, k)
    if factorial(N - 1) % D != 0:
        raise InternalInvariantBroken(f"(N-1)! = {factorial(N - 1)} not divisible by D = {D}")
    h = factorial(N - 1) // D
    closed = coefficient_formula(q_prime, k)
    if h != closed:
        raise InternalInvariantBroken(f"h = {h} but closed form gives {closed}")
    h_residue = None
    if not char.is_infinite:
        h_residue = h % char.value
        if h_residue == 0:
            raise InternalInvariantBroken(
                f"h = {h} vanishes mod {char}; this contradicts N - 1 < p(F)"
            )
    certificate = CoefficientCertificate(
        n=n,
        k=k,
        q=q_prime,
        N=N - 1,
        closed_form=closed,
        h=h,
        h_residue=h_residue,
        field=None,
    )
    return ShrinkPlan(
        sizes=sizes,
        k=k,
        char_repr=repr(char),
        q=q,
        N=N,
        split_index=m,
        shrunk_sizes=shrunk_sizes,
        q_prime=q_prime,
        h=h,
        h_residue=h_residue,
        certificate=certificate,
    )


def proof_replay(
    family: SetFamily,
    k: int,
    f: PowerSumForm | None = None,
    witness: bool = True,
    expand_certificate: bool = False,
    guard_tuples: int = DEFAULT_TUPLE_GUARD,
    guard_terms: int = DEFAULT_TERM_GUARD,
) -> ProofReplay:
    """Replay the constructive argument behind the residue-class bound.

    Runs the arithmetic phase (`replay_shrink`) on the family's sizes, embeds
    h in the field and checks it survives, then optionally enumerates the
    shrunk value set, exhibits an injective tuple whose value lies outside
    the first N - 1 values, and (if requested) expands the full
    contradiction polynomial and runs the Nullstellensatz certifier on it.
    """
    n = family.n
    sizes = family.sizes
    if f is None:
        f = PowerSumForm.unit(n, k)
    if f.n != n or f.k != k:
        raise HypothesisViolated(f"form is ({f.n} vars, k={f.k}), family needs ({n}, k={k})")
    if not f.has_unit_leading:
        raise HypothesisViolated("replay requires unit leading coefficients")
    char = family.field.characteristic
    plan = replay_shrink(sizes, k, char)
    N = plan.N
    q_prime = plan.q_prime
    h = plan.h
    shrunk = family.subfamily(plan.shrunk_sizes)
    h_element = family.field.embed(h)
    if h_element.is_zero:
        raise InternalInvariantBroken(
            f"h = {h} vanishes in {family.field}; this contradicts N - 1 < p(F)"
        )
    certificate = CoefficientCertificate(
        n=n,
        k=k,
        q=q_prime,
        N=N - 1,
        closed_form=plan.certificate.closed_form,
        h=h,
        h_residue=plan.h_residue,
        field=str(family.field),
    )

    value_count = None
    witness_record = None
    cn_certificate = None
    run_witness = witness or expand_certificate
    feasible = True
    space = 1
    for s in plan.shrunk_sizes:
        space *= s
    if run_witness and space > guard_tuples:
        feasible = False
    if run_witness and feasible:
        enum = restricted_value_set(shrunk, f, guard_tuples=guard_tuples, collect_witnesses=True)
        value_count = enum.cardinality
        if value_count < N:
            raise InternalInvariantBroken(
                f"shrunk family attains {value_count} values, bound says >= {N}"
            )
        excluded = enum.values[: N - 1]
        extra_value = enum.values[N - 1]
        point = enum.witnesses[extra_value]
        # the factored contradiction polynomial, evaluated directly
        field = family.field
        check = field.one
        for c in excluded:
            check = check * (f.eval(point) - c)
        for j in range(n):
            for i in range(j):
                check = check * (point[j] - point[i])
        if check.is_zero:
            raise InternalInvariantBroken("chosen witness evaluates to zero")
        witness_record = {
            "point": [str(x.value) for x in point],
            "value": str(extra_value.value),
            "excluded_values": [str(c.value) for c in excluded],
        }
        if expand_certificate:
            cn_certificate = _expanded_certificate(
                shrunk, f, excluded, h_element, guard_tuples, guard_terms
            )
    return ProofReplay(
        family=family,
        k=k,
        q=plan.q,
        N=N,
        split_index=plan.split_index,
        shrunk_family=shrunk,
        q_prime=q_prime,
        h=h,
        h_element=h_element,
        certificate=certificate,
        value_count=value_count,
        witness=witness_record,
        cn_certificate=cn_certificate,
    )


def _expanded_certificate(shrunk, f, excluded, h_element, guard_tuples, guard_terms):
    """Expand Q = prod_c (f - c) * vandermonde over the field and certify.

    The coefficient of the product of x_i^(|A'_i| - 1) in Q must be exactly
    the embedded h: the top-degree part of every factor (f - c) is the pure
    power sum, so Q's top homogeneous component is the closed-form product.
    """
    field = shrunk.field
    n = shrunk.n
    f_poly = f.expand().reduce(field)
    Q = vandermonde(n, max_terms=guard_terms).reduce(field)
    for c in excluded:
        Q = Q.mul(f_poly - SparsePoly.constant(n, c), max_terms=guard_terms)
    degrees = tuple(size - 1 for size in shrunk.sizes)
    expected_degree = f.k * len(excluded) + comb(n, 2)
    if Q.degree != expected_degree or expected_degree != sum(degrees):
        raise InternalInvariantBroken(
            f"contradiction polynomial has degree {Q.degree}, expected {expected_degree}"
        )
    instance = NullstellensatzInstance(Q, degrees, shrunk)

    def factored(point):
        value = field.one
        fx = f.eval(point)
        for c in excluded:
            value = value * (fx - c)
        for j in range(n):
            for i in range(j):
                value = value * (point[j] - point[i])
        return value

    cert = certify(instance, guard_tuples=guard_tuples, point_fn=factored)
    if cert.coefficient != h_element:
        raise InternalInvariantBroken(
            f"expanded coefficient {cert.coefficient} != embedded h {h_element}"
        )
    return cert
