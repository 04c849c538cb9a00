import cmath
import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from partikit.errors import PreconditionError
from partikit.fdsums import (
    FDSumSpec,
    decomposition_check,
    decomposition_table,
    fd_residue_average,
    fd_sum,
    pairwise_coprime,
)
from partikit.partition import constituent, new_weight_system, polynomial_part


def fd_float(args, b, n):
    """Floating-point evaluation of the defining character sum."""
    total = 0j
    for j in range(1, b):
        xi = lambda e: cmath.exp(2j * cmath.pi * e / b)
        term = xi(j * n)
        for a in args:
            term /= 1 - xi(j * a)
        total += term
    return total / b


def S(args, b, n=0):
    return fd_sum(FDSumSpec(tuple(args), b, n))


def test_examples():
    assert S((3,), 2) == F(1, 4)
    assert S((2,), 3) == F(1, 3)
    assert S((5,), 1) == 0
    assert S((3,), 2, -1) == F(-1, 4)
    assert S((2,), 3, -1) == F(-1, 3)


def coprime_specs():
    return st.integers(1, 13).flatmap(
        lambda b: st.tuples(
            st.lists(st.integers(1, 20).filter(lambda a: math.gcd(a, b) == 1), max_size=3),
            st.just(b),
            st.integers(-40, 40),
        )
    )


@settings(max_examples=300)
@given(coprime_specs())
def test_matches_floating_point_sum(spec):
    args, b, n = spec
    exact = S(args, b, n)
    approx = fd_float(args, b, n)
    assert abs(approx.imag) < 1e-7
    assert abs(approx.real - float(exact)) < 1e-7 * max(1.0, abs(float(exact)))


@settings(max_examples=300)
@given(coprime_specs())
def test_phase_periodicity(spec):
    args, b, n = spec
    assert S(args, b, n) == S(args, b, n + b) == S(args, b, n - 3 * b)


@settings(max_examples=300)
@given(coprime_specs(), st.randoms(use_true_random=False))
def test_argument_permutation(spec, rnd):
    args, b, n = spec
    shuffled = list(args)
    rnd.shuffle(shuffled)
    assert S(args, b, n) == S(shuffled, b, n)


def test_precondition_names_offending_pair():
    with pytest.raises(PreconditionError, match=r"gcd\(4, 2\)"):
        FDSumSpec((4,), 2, 0)
    with pytest.raises(PreconditionError):
        FDSumSpec((3,), 0, 0)


def test_spec_json():
    spec = FDSumSpec((3,), 2, 0)
    assert spec.to_json(fd_sum(spec)) == {"n": 0, "args": [3], "b": 2, "value": "1/4"}


@pytest.mark.parametrize("args,b,D", [((3,), 2, 6), ((2,), 3, 6), ((5, 7), 3, 105), ((), 4, 8), ((1, 2), 9, 18)])
def test_residue_average_vanishes(args, b, D):
    assert fd_residue_average(args, b, D) == 0


def test_residue_average_by_direct_sum():
    direct = sum(S((5, 7), 3, -k) for k in range(105))
    assert direct == 0


def test_residue_average_requires_divisibility():
    with pytest.raises(PreconditionError):
        fd_residue_average((3,), 2, 5)


def test_decomposition_2_3():
    ws = new_weight_system((2, 3))
    assert decomposition_check(ws, 0) == (F(7, 12), F(7, 12), True)
    assert decomposition_check(ws, 1) == (F(-7, 12), F(-7, 12), True)


def test_decomposition_trivial():
    assert decomposition_check(new_weight_system((1,)), 0) == (0, 0, True)


def test_decomposition_single_weight():
    # p_(3)(n) = [3 | n]; q_0 - Poly = 2/3 and the character sum agrees
    ws = new_weight_system((3,))
    assert [r.lhs for r in decomposition_table(ws)] == [F(2, 3), F(-1, 3), F(-1, 3)]
    assert all(r.equal for r in decomposition_table(ws))


def test_decomposition_rejects_non_coprime():
    with pytest.raises(PreconditionError):
        decomposition_check(new_weight_system((2, 4)), 0)


@pytest.mark.parametrize("a", [(3, 5, 7), (2, 5, 9), (4, 5), (1, 7), (1, 1, 3)])
def test_decomposition_all_residues(a):
    ws = new_weight_system(a)
    poly = polynomial_part(ws)
    for k, res in enumerate(decomposition_table(ws)):
        assert res.equal
        assert (constituent(ws, k) - poly).degree <= 0


def test_pairwise_coprime():
    assert pairwise_coprime((2, 3, 5))
    assert pairwise_coprime((1, 1))
    assert not pairwise_coprime((2, 3, 4))
    assert all(pairwise_coprime(c) for c in itertools.combinations((3, 7, 11, 13), 3))
