"""Fourier-Dedekind sums computed exactly in Q(xi_b).

    s_n(a_1, ..., a_m; b) = (1/b) * sum_{j=1}^{b-1} xi^{jn} / prod_i (1 - xi^{j a_i})

Every sum is accumulated in the cyclotomic field and certified rational before
it is returned.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .cyclotomic import CycNum, cyc_field, cyc_inv, rational_part
from .errors import InternalConsistencyError, PreconditionError
from .exact import RationalPoly, rat_str
from .partition import WeightSystem, constituent, polynomial_part

__all__ = [
    "DecompositionResult",
    "FDSumSpec",
    "decomposition_check",
    "decomposition_table",
    "fd_residue_average",
    "fd_sum",
    "pairwise_coprime",
]


@dataclass(frozen=True)
class FDSumSpec:
    args: tuple[int, ...]
    b: int
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if self.b < 1:
            raise PreconditionError(f"modulus b must be positive, got {self.b}")
        for a in self.args:
            if a < 1:
                raise PreconditionError(f"arguments must be positive, got {a}")
            g = math.gcd(a, self.b)
            if g != 1:
                raise PreconditionError(f"gcd({a}, {self.b}) = {g}: argument {a} is not coprime to b={self.b}")

    def to_json(self, value: Fraction) -> dict:
        return {"n": self.n, "args": list(self.args), "b": self.b, "value": rat_str(value)}


@lru_cache(maxsize=4096)
def _inverted_denominators(args: tuple[int, ...], b: int) -> tuple[CycNum, ...]:
    # entry j-1 holds 1 / prod_i (1 - xi^{j a_i}); shared by every phase
    field = cyc_field(b)
    one = field.one()
    out = []
    for j in range(1, b):
        den = one
        for a in args:
            den = den * (one - field.root_power(j * a))
        out.append(cyc_inv(den))
    return tuple(out)


@lru_cache(maxsize=65536)
def _fd_sum_reduced(args: tuple[int, ...], b: int, phase: int) -> Fraction:
    if b == 1:
        return Fraction(0)
    field = cyc_field(b)
    dens = _inverted_denominators(args, b)
    total = field.zero()
    for j in range(1, b):
        total = total + field.root_power(j * phase) * dens[j - 1]
    return rational_part(total / b)


def fd_sum(spec: FDSumSpec) -> Fraction:
    """Exact value of the Fourier-Dedekind sum described by ``spec``."""
    return _fd_sum_reduced(spec.args, spec.b, spec.n % spec.b)


def fd_residue_average(args: Sequence[int], b: int, D: int) -> Fraction:
    """``(1/D) * sum_{k=0}^{D-1} s_{-k}(args; b)``; zero whenever ``b | D``."""
    if D < 1 or D % b:
        raise PreconditionError(f"b={b} must divide D={D}")
    total = sum((fd_sum(FDSumSpec(tuple(args), b, -k)) for k in range(D)), Fraction(0))
    return total / D


def pairwise_coprime(a: Sequence[int]) -> bool:
    return all(math.gcd(x, y) == 1 for x, y in itertools.combinations(a, 2))


class DecompositionResult(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def decomposition_check(
    ws: WeightSystem, k: int, poly_part: RationalPoly | None = None
) -> DecompositionResult:
    """Compare ``q_k - Poly`` against the sum of FD sums ``s_{-k}(a minus a_i; a_i)``.

    ``poly_part`` may be passed in to avoid rebuilding it for every residue.
    """
    if not pairwise_coprime(ws.a):
        raise PreconditionError(f"weights {list(ws.a)} are not pairwise coprime")
    if poly_part is None:
        poly_part = polynomial_part(ws)
    diff = constituent(ws, k) - poly_part
    if diff.degree > 0:
        raise InternalConsistencyError(
            f"q_{k} - Poly for weights {list(ws.a)} is not constant: {diff}"
        )
    lhs = diff[0]
    rhs = Fraction(0)
    for i, ai in enumerate(ws.a):
        rest = ws.a[:i] + ws.a[i + 1 :]
        rhs += fd_sum(FDSumSpec(rest, ai, -k))
    return DecompositionResult(lhs, rhs, lhs == rhs)


def decomposition_table(ws: WeightSystem) -> list[DecompositionResult]:
    """:func:`decomposition_check` for every residue ``k`` in ``[0, D)``."""
    poly_part = polynomial_part(ws)
    return [decomposition_check(ws, k, poly_part) for k in range(ws.D)]
