"""Self-check suite run by ``partikit verify``.

Each check returns a :class:`CheckResult`; a failing check carries the
smallest counterexample it found.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import int_poly_mul, rat_str
from .fdsums import decomposition_table, pairwise_coprime
from .partition import (
    WeightSystem,
    box_count,
    dp_table,
    numerator_poly,
    polynomial_part,
    polynomial_part_via_average,
    quasi_build,
    quasi_eval,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str
    counterexample: dict | None = field(default=None)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def check_evaluators(ws: WeightSystem, nmax: int) -> CheckResult:
    name = "evaluators"
    dp = dp_table(ws.a, nmax)
    qp = quasi_build(ws)
    for n in range(nmax + 1):
        box = box_count(ws, n)
        quasi = quasi_eval(qp, n)
        if not dp[n] == box == quasi:
            return CheckResult(
                name,
                FAIL,
                f"dp, box and quasi disagree at n={n}",
                {"weights": list(ws.a), "n": n, "dp": str(dp[n]), "box": str(box), "quasi": str(quasi)},
            )
    return CheckResult(name, PASS, f"dp = box = quasi for 0 <= n <= {nmax}")


def expected_numerator_product(ws: WeightSystem) -> tuple[int, ...]:
    """Coefficients of ``(1 - z^D)^r``."""
    out = [0] * (ws.r * ws.D + 1)
    for i in range(ws.r + 1):
        out[i * ws.D] = (-1) ** i * math.comb(ws.r, i)
    return tuple(out)


def numerator_product(ws: WeightSystem) -> tuple[int, ...]:
    """``numerator_poly(ws) * prod_k (1 - z^{a_k})`` by direct multiplication."""
    prod = numerator_poly(ws)
    for a in ws.a:
        factor = [0] * (a + 1)
        factor[0], factor[a] = 1, -1
        prod = int_poly_mul(prod, factor)
    return prod


def check_numerator_identity(ws: WeightSystem) -> CheckResult:
    name = "numerator-identity"
    got = numerator_product(ws)
    want = expected_numerator_product(ws)
    if got == want:
        return CheckResult(name, PASS, "sum_J z^(a.j) * prod(1 - z^a_k) = (1 - z^D)^r")
    size = max(len(got), len(want))
    got_l = list(got) + [0] * (size - len(got))
    want_l = list(want) + [0] * (size - len(want))
    d = next(i for i in range(size) if got_l[i] != want_l[i])
    return CheckResult(
        name,
        FAIL,
        f"coefficient of z^{d} differs",
        {"weights": list(ws.a), "degree": d, "lhs": str(got_l[d]), "rhs": str(want_l[d])},
    )


def check_average(ws: WeightSystem) -> CheckResult:
    name = "polynomial-part-average"
    direct = polynomial_part(ws)
    averaged = polynomial_part_via_average(ws)
    if direct == averaged:
        return CheckResult(name, PASS, f"Poly = average of constituents = {direct}")
    return CheckResult(
        name,
        FAIL,
        "box-sum polynomial part differs from the constituent average",
        {"weights": list(ws.a), "direct": direct.to_json(), "average": averaged.to_json()},
    )


def check_leading_coefficient(ws: WeightSystem) -> CheckResult:
    name = "leading-coefficient"
    poly = polynomial_part(ws)
    want = Fraction(1, math.factorial(ws.r - 1) * math.prod(ws.a))
    if poly.degree == ws.r - 1 and poly.leading == want:
        return CheckResult(name, PASS, f"degree {ws.r - 1}, leading coefficient {rat_str(want)}")
    return CheckResult(
        name,
        FAIL,
        "unexpected degree or leading coefficient",
        {"weights": list(ws.a), "degree": poly.degree, "leading": rat_str(poly.leading), "expected": rat_str(want)},
    )


def check_decomposition(ws: WeightSystem) -> CheckResult:
    name = "decomposition"
    if not pairwise_coprime(ws.a):
        return CheckResult(name, SKIP, "decomposition skipped: weights not pairwise coprime")
    for k, res in enumerate(decomposition_table(ws)):
        if not res.equal:
            return CheckResult(
                name,
                FAIL,
                f"q_{k} - Poly differs from the Fourier-Dedekind sum",
                {"weights": list(ws.a), "k": k, "lhs": rat_str(res.lhs), "rhs": rat_str(res.rhs)},
            )
    return CheckResult(name, PASS, f"q_k - Poly = sum of FD sums for all {ws.D} residues")


def run_checks(ws: WeightSystem, nmax: int) -> list[CheckResult]:
    return [
        check_evaluators(ws, nmax),
        check_numerator_identity(ws),
        check_average(ws),
        check_leading_coefficient(ws),
        check_decomposition(ws),
    ]


def all_ok(results: Sequence[CheckResult]) -> bool:
    return all(r.ok for r in results)
