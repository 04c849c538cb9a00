"""Exact integers, rationals and dense rational-coefficient polynomials.

Rationals are :class:`fractions.Fraction` throughout; a ``Fraction`` is always
stored in lowest terms with a positive denominator, which is exactly the
canonical form we need for structural equality.

Polynomials are immutable dense coefficient tuples in ascending degree with
trailing zeros trimmed, so the empty tuple is the zero polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvalidWeightsError

Rat = Fraction
RatLike = Union[int, Fraction]

__all__ = [
    "Rat",
    "RationalPoly",
    "binom_count",
    "binom_poly_shifted",
    "lcm_vec",
    "parse_rat",
    "rat_str",
    "int_poly_mul",
    "int_poly_divexact",
    "poly_add",
    "poly_scale",
    "poly_mul",
    "poly_eval",
]


def rat_str(x: RatLike) -> str:
    """Serialize a rational as ``"p/q"``, dropping ``/1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    # Fraction() also accepts decimals and exponents; the wire format does not.
    num, sep, den = s.strip().partition("/")
    if sep:
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def _trim(coeffs: Iterable[RatLike]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RationalPoly:
    """Univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def constant(cls, c: RatLike) -> RationalPoly:
        return cls((c,))

    @classmethod
    def linear(cls, c0: RatLike, c1: RatLike) -> RationalPoly:
        return cls((c0, c1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def __add__(self, other) -> RationalPoly:
        return poly_add(self, _as_poly(other))

    __radd__ = __add__

    def __neg__(self) -> RationalPoly:
        return poly_scale(self, -1)

    def __sub__(self, other) -> RationalPoly:
        return poly_add(self, -_as_poly(other))

    def __rsub__(self, other) -> RationalPoly:
        return poly_add(_as_poly(other), -self)

    def __mul__(self, other) -> RationalPoly:
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x: RatLike) -> Fraction:
        return poly_eval(self, x)

    def format(self, var: str = "n") -> str:
        """Human-readable form in ascending degree, e.g. ``5/12 + 1/6·n``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = rat_str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{rat_str(mag)}·{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> RationalPoly:
        return cls(parse_rat(s) for s in data)


def _as_poly(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPoly.constant(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


def poly_add(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return RationalPoly(out)


def poly_scale(p: RationalPoly, s: RatLike) -> RationalPoly:
    s = Fraction(s)
    if s == 0:
        return RationalPoly()
    return RationalPoly(c * s for c in p.coeffs)


def poly_mul(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return RationalPoly()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return RationalPoly(out)


def poly_eval(p: RationalPoly, x: RatLike) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def binom_count(m: int, k: int) -> int:
    """Binomial coefficient with the counting convention.

    Zero whenever ``m < k``, in particular for every negative ``m``; this is the
    convention that lets out-of-range terms drop out of box sums.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if m < k:
        return 0
    return math.comb(m, k)


def binom_poly_shifted(c: RatLike, D: int, k: int) -> RationalPoly:
    """The polynomial ``n -> C((n - c)/D + k, k)``.

    Uses the falling-factorial extension ``prod_{i=1..k} ((n - c)/D + i) / k!``,
    which agrees with :func:`binom_count` only on ``n = c + tD`` with ``t >= 0``
    and keeps going (nonzero) below that.
    """
    if D < 1 or k < 0:
        raise ValueError("need D >= 1 and k >= 0")
    c = Fraction(c)
    inv_d = Fraction(1, D)
    out = RationalPoly.constant(Fraction(1, math.factorial(k)))
    for i in range(1, k + 1):
        out = poly_mul(out, RationalPoly.linear(i - c * inv_d, inv_d))
    return out


def lcm_vec(a: Sequence[int]) -> int:
    if len(a) == 0:
        raise InvalidWeightsError("weight vector is empty")
    for x in a:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise InvalidWeightsError(f"weights must be positive integers, got {x!r}")
    return math.lcm(*a)


# Integer polynomials as plain tuples (ascending degree, trimmed).

def _itrim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def int_poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                if y:
                    out[i + j] += x * y
    return _itrim(out)


def int_poly_divexact(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Quotient ``p / q`` for monic ``q``; raises if the division leaves a remainder."""
    q = _itrim(list(q))
    if not q or q[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    dq = len(q) - 1
    if len(rem) - 1 < dq:
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return ()
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            quot[i - dq] = c
            for j in range(dq + 1):
                rem[i - dq + j] -= c * q[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _itrim(quot)
