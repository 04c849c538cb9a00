"""Restricted partition counts, their constituent polynomials and polynomial part.

``p_a(n)`` counts nonnegative integer solutions of ``a_1 x_1 + ... + a_r x_r = n``.
Three evaluators are provided:

* :func:`dp_count`: coin-change dynamic program (the reference oracle),
* :func:`box_count`: the finite box sum over ``J = prod_i [0, D/a_i)``,
* :func:`quasi_eval`: evaluation of the constituent polynomial for ``n mod D``.
"""

from __future__ import annotations

import itertools
import math
import os
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import DomainError, InternalConsistencyError, InvalidWeightsError, PreconditionError
from .exact import RationalPoly, binom_count, int_poly_mul, lcm_vec, poly_add, poly_eval, rat_str

__all__ = [
    "BoxGuardWarning",
    "QuasiPolynomial",
    "WeightSystem",
    "box_count",
    "constituent",
    "default_box_guard",
    "dp_count",
    "dp_table",
    "iter_box",
    "new_weight_system",
    "numerator_poly",
    "poly_part_closed_r2",
    "polynomial_part",
    "polynomial_part_via_average",
    "quasi_build",
    "quasi_eval",
]

DEFAULT_BOX_GUARD = 10**8
BOX_GUARD_ENV = "PARTIKIT_BOX_GUARD"


class BoxGuardWarning(UserWarning):
    pass


def default_box_guard() -> int:
    raw = os.environ.get(BOX_GUARD_ENV)
    if raw is None:
        return DEFAULT_BOX_GUARD
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BOX_GUARD_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BOX_GUARD_ENV} must be a positive integer, got {raw!r}")
    return value


@dataclass(frozen=True)
class WeightSystem:
    """A weight vector together with its period ``D`` and bucketed box values.

    ``residue_buckets[c]`` is the multiset of raw values ``a.j`` (not reduced
    mod ``D``) over box points with ``a.j = c (mod D)``, stored as
    ``((value, multiplicity), ...)`` sorted by value.
    """

    a: tuple[int, ...]
    D: int
    box_dims: tuple[int, ...]
    residue_buckets: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def box_size(self) -> int:
        return math.prod(self.box_dims)

    def bucket(self, c: int) -> tuple[tuple[int, int], ...]:
        return self.residue_buckets[c % self.D]

    def to_json(self) -> dict:
        return {"a": list(self.a), "D": self.D, "boxSize": str(self.box_size)}


def _box_value_counts(a: Sequence[int], D: int) -> list[int]:
    """Multiplicity of each value ``a.j`` over the box, indexed by value.

    Equivalent to expanding ``prod_i (1 + z^a_i + ... + z^{a_i (D/a_i - 1)})``;
    each factor is applied as a stride-``a_i`` sliding window in linear time.
    """
    counts = [1]
    for ai in a:
        m = D // ai
        span = ai * (m - 1)
        new = [0] * (len(counts) + span)
        n_old = len(counts)
        for v in range(len(new)):
            s = counts[v] if v < n_old else 0
            if v >= ai:
                s += new[v - ai]
                drop = v - ai * m
                if 0 <= drop < n_old:
                    s -= counts[drop]
            new[v] = s
        counts = new
    return counts


def new_weight_system(a: Sequence[int], box_guard: int | None = None) -> WeightSystem:
    a = tuple(a)
    D = lcm_vec(a)
    dims = tuple(D // ai for ai in a)
    size = math.prod(dims)
    guard = default_box_guard() if box_guard is None else box_guard
    if size > guard:
        warnings.warn(
            f"box for weights {a} has {size} points (guard {guard})",
            BoxGuardWarning,
            stacklevel=2,
        )
    counts = _box_value_counts(a, D)
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(D)]
    for v, mult in enumerate(counts):
        if mult:
            buckets[v % D].append((v, mult))
    return WeightSystem(a=a, D=D, box_dims=dims, residue_buckets=tuple(tuple(b) for b in buckets))


def iter_box(ws: WeightSystem) -> Iterator[tuple[int, ...]]:
    """Enumerate the box ``J`` in lexicographic order."""
    return itertools.product(*(range(m) for m in ws.box_dims))


# -- reference oracle ------------------------------------------------------


def dp_table(a: Sequence[int], nmax: int) -> list[int]:
    """``[p_a(0), ..., p_a(nmax)]`` by the coin-change recurrence."""
    if nmax < 0:
        return []
    if len(a) == 0 or any(x < 1 for x in a):
        raise InvalidWeightsError(f"weights must be a nonempty list of positive integers, got {list(a)}")
    table = [0] * (nmax + 1)
    table[0] = 1
    for w in a:
        for n in range(w, nmax + 1):
            table[n] += table[n - w]
    return table


def dp_count(a: Sequence[int], n: int) -> int:
    if n < 0:
        if len(a) == 0 or any(x < 1 for x in a):
            raise InvalidWeightsError(f"weights must be a nonempty list of positive integers, got {list(a)}")
        return 0
    return dp_table(a, n)[n]


# -- box sum and symbolic constituents -------------------------------------


def box_count(ws: WeightSystem, n: int) -> int:
    k = ws.r - 1
    total = 0
    for v, mult in ws.bucket(n):
        total += mult * binom_count((n - v) // ws.D + k, k)
    return total


def numerator_poly(ws: WeightSystem) -> tuple[int, ...]:
    """Integer coefficients of ``sum_{j in J} z^{a.j}``, ascending."""
    top = max((v for b in ws.residue_buckets for v, _ in b), default=-1)
    coeffs = [0] * (top + 1)
    for b in ws.residue_buckets:
        for v, mult in b:
            coeffs[v] += mult
    return tuple(coeffs)


def _shifted_numerator_sum(pairs, D: int, k: int) -> tuple[int, ...]:
    # sum of mult * prod_{i=1..k} (n - v + i D); dividing by D^k k! gives
    # sum of mult * C((n - v)/D + k, k) as a polynomial in n.
    acc: list[int] = []
    for v, mult in pairs:
        term: tuple[int, ...] = (mult,)
        for i in range(1, k + 1):
            term = int_poly_mul(term, (i * D - v, 1))
        if len(term) > len(acc):
            acc.extend([0] * (len(term) - len(acc)))
        for d, c in enumerate(term):
            acc[d] += c
    return tuple(acc)


def _scaled(numer: Sequence[int], denom: int) -> RationalPoly:
    return RationalPoly(Fraction(c, denom) for c in numer)


def constituent(ws: WeightSystem, k: int) -> RationalPoly:
    """The polynomial ``q_k`` with ``p_a(n) = q_k(n)`` for all ``n >= 0``, ``n = k (mod D)``."""
    if not 0 <= k < ws.D:
        raise PreconditionError(f"residue k={k} outside [0, {ws.D})")
    deg = ws.r - 1
    numer = _shifted_numerator_sum(ws.residue_buckets[k], ws.D, deg)
    return _scaled(numer, ws.D**deg * math.factorial(deg))


def polynomial_part(ws: WeightSystem) -> RationalPoly:
    """``(1/D) * sum over the whole box`` of the shifted binomial polynomials."""
    deg = ws.r - 1
    pairs = (p for b in ws.residue_buckets for p in b)
    numer = _shifted_numerator_sum(pairs, ws.D, deg)
    return _scaled(numer, ws.D ** (deg + 1) * math.factorial(deg))


def polynomial_part_via_average(ws: WeightSystem) -> RationalPoly:
    total = RationalPoly()
    for k in range(ws.D):
        total = poly_add(total, constituent(ws, k))
    return total * Fraction(1, ws.D)


def poly_part_closed_r2(a: int, b: int) -> RationalPoly:
    """``n/(ab) + 1/(2a) + 1/(2b)`` for a coprime pair."""
    if a < 1 or b < 1:
        raise InvalidWeightsError(f"weights must be positive, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise PreconditionError(f"closed form needs coprime weights, gcd({a}, {b}) = {math.gcd(a, b)}")
    return RationalPoly.linear(Fraction(1, 2 * a) + Fraction(1, 2 * b), Fraction(1, a * b))


# -- quasi-polynomial ------------------------------------------------------


@dataclass(frozen=True)
class QuasiPolynomial:
    D: int
    constituents: tuple[RationalPoly, ...]

    def __post_init__(self):
        if len(self.constituents) != self.D:
            raise ValueError(f"expected {self.D} constituents, got {len(self.constituents)}")

    def __getitem__(self, k: int) -> RationalPoly:
        return self.constituents[k]

    def to_json(self) -> dict:
        return {"D": self.D, "constituents": [q.to_json() for q in self.constituents]}

    @classmethod
    def from_json(cls, data: Mapping) -> QuasiPolynomial:
        return cls(int(data["D"]), tuple(RationalPoly.from_json(c) for c in data["constituents"]))


def quasi_build(ws: WeightSystem) -> QuasiPolynomial:
    return QuasiPolynomial(ws.D, tuple(constituent(ws, k) for k in range(ws.D)))


def quasi_eval(qp: QuasiPolynomial, n: int) -> int:
    if n < 0:
        raise DomainError(f"constituents only represent p_a(n) for n >= 0, got n={n}")
    val = poly_eval(qp.constituents[n % qp.D], n)
    if val.denominator != 1 or val < 0:
        raise InternalConsistencyError(
            f"constituent {n % qp.D} evaluated at n={n} gave {rat_str(val)}, not a count"
        )
    return val.numerator
