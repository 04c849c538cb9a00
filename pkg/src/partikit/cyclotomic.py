"""Exact arithmetic in the cyclotomic field Q(xi_b) = Q[z]/Phi_b(z).

Working modulo the b-th cyclotomic polynomial rather than z^b - 1 keeps the
quotient a field, so every ``1 - xi^e`` with ``b`` not dividing ``e`` is
invertible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import FieldMismatchError, NotRationalError
from .exact import RatLike, int_poly_divexact, rat_str

__all__ = [
    "CycField",
    "CycNum",
    "cyclotomic_poly",
    "cyc_field",
    "cyc_root_power",
    "cyc_add",
    "cyc_sub",
    "cyc_mul",
    "cyc_inv",
    "rational_part",
]


def _divisors(b: int) -> list[int]:
    small = [d for d in range(1, int(b**0.5) + 1) if b % d == 0]
    return sorted(set(small + [b // d for d in small]))


@lru_cache(maxsize=None)
def cyclotomic_poly(b: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_b, ascending degree.

    Obtained by dividing z^b - 1 exactly by Phi_d for each proper divisor d.
    """
    if b < 1:
        raise ValueError("b must be positive")
    poly: tuple[int, ...] = (-1,) + (0,) * (b - 1) + (1,)
    for d in _divisors(b)[:-1]:
        poly = int_poly_divexact(poly, cyclotomic_poly(d))
    return poly


class CycField:
    """The field Q(xi_b); instances are shared through :func:`cyc_field`."""

    __slots__ = ("b", "phi", "degree", "_powers")

    def __init__(self, b: int):
        self.b = b
        self.phi = cyclotomic_poly(b)
        self.degree = len(self.phi) - 1
        self._powers: list[CycNum] | None = None

    def __repr__(self) -> str:
        return f"CycField(b={self.b})"

    def reduce(self, coeffs: Sequence[RatLike]) -> tuple[Fraction, ...]:
        """Reduce a coefficient list modulo Phi_b into canonical length-degree form."""
        d = self.degree
        phi = self.phi
        c = [Fraction(x) for x in coeffs]
        for i in range(len(c) - 1, d - 1, -1):
            t = c[i]
            if t:
                # phi is monic: z^d = -(phi_0 + ... + phi_{d-1} z^{d-1})
                for j in range(d):
                    if phi[j]:
                        c[i - d + j] -= t * phi[j]
        c = c[:d]
        c.extend([Fraction(0)] * (d - len(c)))
        return tuple(c)

    def element(self, coeffs: Iterable[RatLike]) -> CycNum:
        return CycNum(self, self.reduce(list(coeffs)))

    def zero(self) -> CycNum:
        return CycNum(self, (Fraction(0),) * self.degree)

    def one(self) -> CycNum:
        return self.scalar(1)

    def scalar(self, x: RatLike) -> CycNum:
        return CycNum(self, (Fraction(x),) + (Fraction(0),) * (self.degree - 1))

    def root_power(self, e: int) -> CycNum:
        if self._powers is None:
            b = self.b
            self._powers = [self.element([0] * k + [1]) for k in range(b)]
        return self._powers[e % self.b]


@lru_cache(maxsize=None)
def cyc_field(b: int) -> CycField:
    if b < 1:
        raise ValueError("b must be positive")
    return CycField(b)


class CycNum:
    """An element of Q(xi_b), stored as its reduced coordinate vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycField, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != field.degree:
            raise ValueError("coefficient vector must have length deg(Phi_b)")
        self.field = field
        self.coeffs = coeffs

    def __repr__(self) -> str:
        return f"CycNum(b={self.field.b}, {self.to_json()})"

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other) -> CycNum:
        if isinstance(other, CycNum):
            if other.field.b != self.field.b:
                raise FieldMismatchError(
                    f"cannot combine elements of Q(xi_{self.field.b}) and Q(xi_{other.field.b})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.field.b == other.field.b and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.b, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_sub(other, self)

    def __neg__(self) -> CycNum:
        return CycNum(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.field, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(xi_b)")
            inv = Fraction(1) / other
            return CycNum(self.field, tuple(c * inv for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyc_mul(self, cyc_inv(other))

    def __pow__(self, e: int) -> CycNum:
        if e < 0:
            return cyc_inv(self) ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = cyc_mul(result, base)
            base = cyc_mul(base, base)
            e >>= 1
        return result


def _check_same(x: CycNum, y: CycNum) -> None:
    if x.field.b != y.field.b:
        raise FieldMismatchError(
            f"cannot combine elements of Q(xi_{x.field.b}) and Q(xi_{y.field.b})"
        )


def cyc_add(x: CycNum, y: CycNum) -> CycNum:
    _check_same(x, y)
    return CycNum(x.field, tuple(p + q for p, q in zip(x.coeffs, y.coeffs)))


def cyc_sub(x: CycNum, y: CycNum) -> CycNum:
    _check_same(x, y)
    return CycNum(x.field, tuple(p - q for p, q in zip(x.coeffs, y.coeffs)))


def cyc_mul(x: CycNum, y: CycNum) -> CycNum:
    _check_same(x, y)
    a, b = x.coeffs, y.coeffs
    prod = [Fraction(0)] * max(2 * len(a) - 1, 1)
    for i, p in enumerate(a):
        if p:
            for j, q in enumerate(b):
                if q:
                    prod[i + j] += p * q
    return CycNum(x.field, x.field.reduce(prod))


def cyc_root_power(field: CycField, e: int) -> CycNum:
    """xi_b^e with the exponent reduced into [0, b)."""
    return field.root_power(e)


# Rational polynomial helpers for the extended Euclidean algorithm.

def _rtrim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _rdivmod(p: list[Fraction], q: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(rem) - 1 < dq:
        return [], _rtrim(rem)
    quot = [Fraction(0)] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            t = c / lead
            quot[i - dq] = t
            for j in range(dq + 1):
                rem[i - dq + j] -= t * q[j]
    return _rtrim(quot), _rtrim(rem[:dq])


def _rsub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """a - q*b"""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] -= x * y
    return _rtrim(out)


def cyc_inv(x: CycNum) -> CycNum:
    """Multiplicative inverse via extended Euclid on (x, Phi_b) over Q."""
    if x.is_zero():
        raise ZeroDivisionError("division by zero in Q(xi_b)")
    field = x.field
    r0 = [Fraction(c) for c in field.phi]
    r1 = _rtrim(list(x.coeffs))
    s0: list[Fraction] = []
    s1: list[Fraction] = [Fraction(1)]
    while r1:
        q, r = _rdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _rsub_mul(s0, q, s1)
    # Phi_b is irreducible, so the gcd r0 is a nonzero constant.
    g = r0[0]
    return field.element(c / g for c in s0)


def rational_part(x: CycNum) -> Fraction:
    """Return ``x`` as a rational, raising :class:`NotRationalError` if it is not one."""
    if any(x.coeffs[1:]):
        raise NotRationalError(f"element {x.to_json()} of Q(xi_{x.field.b}) is not rational")
    return x.coeffs[0]
