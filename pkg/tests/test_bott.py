import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleybott.bott import (
    Acyclic,
    NonZero,
    acyclic_twist_range,
    cohomology,
    cohomology_of_decomposition,
    decomposition_twist_range,
    full_dual,
    serre_check,
    serre_partner,
)
from cayleybott.parabolic import parse_space, twist
from cayleybott.reptheory import Decomposition, klimyk_tensor
from cayleybott.roots import DominanceError, add

S = (0, 0, 0, 0, 0, 1)
OMEGA1 = (1, 0, 0, 0, 0, 0)


def _inversions(P, lam):
    # oracle for the degree: positive roots alpha with <lam + rho, alpha^vee> < 0
    shifted = add(lam, P.root_system.rho)
    pairings = [sum(c * x for c, x in zip(r, shifted)) for r in P.root_system.positive_roots_root_coords]
    if 0 in pairings:
        return None
    return sum(1 for p in pairings if p < 0)


def test_flagship_top_degree(P):
    res = cohomology(P, twist(P, S, -13), trace=True)
    assert res == NonZero(16, OMEGA1, 27)
    # one trace entry per reflection plus the final weight
    assert len(res.trace) == 17
    assert res.trace[-1] == (add(OMEGA1, P.root_system.rho), 0)


def test_line_bundles_and_kodaira(P):
    assert cohomology(P, (0,) * 6) == NonZero(0, (0,) * 6, 1)
    assert cohomology(P, OMEGA1) == NonZero(0, OMEGA1, 27)
    for k in range(-11, 0):
        assert not cohomology(P, (k, 0, 0, 0, 0, 0)).nonzero
    assert cohomology(P, (-12, 0, 0, 0, 0, 0)) == NonZero(16, (0,) * 6, 1)


def test_boundary_of_the_s2_family(P):
    # E_{2 omega5}(-5): the inversion count is 4
    lam = (-5, 0, 0, 0, 2, 0)
    res = cohomology(P, lam)
    assert res.nonzero and res.dim == 1 and res.g_dominant == (0,) * 6
    assert res.degree == _inversions(P, lam) == 4


def test_acyclic_reports_a_wall(P):
    res = cohomology(P, (-1, 0, 0, 0, 0, 0))
    assert isinstance(res, Acyclic) and 1 <= res.wall <= 6


def test_rejects_non_levi_dominant(P):
    with pytest.raises(DominanceError):
        cohomology(P, (0, -1, 0, 0, 0, 0))


@settings(max_examples=300, deadline=None)
@given(st.tuples(st.integers(-15, 4), *[st.integers(0, 3) for _ in range(5)]))
def test_degree_is_inversion_count_and_bounded(lam):
    P = parse_space("E6/P1")
    res = cohomology(P, lam)
    inv = _inversions(P, lam)
    if inv is None:
        assert not res.nonzero
    else:
        assert res.nonzero and res.degree == inv
        assert 0 <= res.degree <= P.dimension


@settings(max_examples=300, deadline=None)
@given(st.tuples(st.integers(-20, 8), *[st.integers(0, 4) for _ in range(5)]))
def test_serre_duality(lam):
    P = parse_space("E6/P1")
    assert serre_check(P, lam)


def test_serre_partner_of_the_flagship(P):
    # S(-13)^vee = S(12), and K = O(-12)
    assert serre_partner(P, twist(P, S, -13)) == S
    assert cohomology(P, S) == NonZero(0, (0, 0, 0, 0, 0, 1), 27)
    assert full_dual(P, OMEGA1) == (0, 0, 0, 0, 0, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_space_line_bundles(n):
    P = parse_space(f"A{n}/P1")
    for k in range(-2 * n - 2, 2 * n + 3):
        res = cohomology(P, (k,) + (0,) * (n - 1))
        if k >= 0:
            assert (res.degree, res.dim) == (0, comb(n + k, n))
        elif k <= -n - 1:
            assert (res.degree, res.dim) == (n, comb(-k - 1, n))
        else:
            assert not res.nonzero


def _euler(P, k):
    res = cohomology(P, (k, 0, 0, 0, 0, 0))
    return (-1) ** res.degree * res.dim if res.nonzero else 0


def test_hilbert_polynomial_of_the_cayley_plane(P):
    # chi(O(k)) is a degree-16 polynomial in k: interpolate on 0..16, check elsewhere
    xs = list(range(17))
    ys = [_euler(P, k) for k in xs]

    def lagrange(x):
        total = Fraction(0)
        for i, xi in enumerate(xs):
            term = Fraction(ys[i])
            for j, xj in enumerate(xs):
                if j != i:
                    term *= Fraction(x - xj, xi - xj)
            total += term
        return total

    for k in itertools.chain(range(17, 22), range(-16, 0)):
        assert lagrange(k) == _euler(P, k)


def test_acyclic_twist_range(P):
    assert acyclic_twist_range(P, S, -12, -1) == []
    hits = acyclic_twist_range(P, S, -14, 0)
    assert [t for t, _ in hits] == [-14, -13, 0]
    assert hits[1][1] == NonZero(16, OMEGA1, 27)
    # inclusive on both ends
    assert [t for t, _ in acyclic_twist_range(P, S, -13, -13)] == [-13]
    assert [t for t, _ in acyclic_twist_range(P, (0, 0, 0, 0, 0, 4), -8, -2)] == [-8]


def test_cohomology_of_a_decomposition(P):
    end_s = klimyk_tensor(P, (-1, 0, 0, 0, 0, 1), S)
    graded = cohomology_of_decomposition(P, end_s)
    assert graded.dimensions() == {0: 1}
    assert graded.euler_characteristic() == 1
    assert graded.positive_part() == {}
    assert cohomology_of_decomposition(P, Decomposition()).is_empty()


def test_decomposition_twist_range_collects_every_summand(P):
    dec = Decomposition({S: 1, (0, 0, 0, 0, 0, 4): 1})
    hits = decomposition_twist_range(P, dec, -13, -8)
    assert [(t, w) for t, w, _ in hits] == [(-13, S), (-8, (0, 0, 0, 0, 0, 4))]
