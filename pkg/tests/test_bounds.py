import random
from math import comb, floor

import numpy as np
import pytest

from hkbetti.bounds import (Caps, FeasibleTuple, RootDescriptor, UnsupportedDimension, betti_bound,
                            bound_certificate, bound_polynomial, check_certificate, conjecture_check,
                            conjectured_root, dim4_identity, enumerate_feasible, evaluate_at,
                            feasibility_certificate, identity_check, iter_feasible, largest_root_bracket,
                            rhs_coefficients, rhs_value)
from hkbetti.diamond import BettiVector
from hkbetti.llv import sixfold_betti
from hkbetti.salamon import salamon_residual

# L_n(b2) is a fixed multiple of Salamon's residual on the Betti vector of the
# subring generated by H^2 alone (all multiplicities and odd Betti numbers zero).
SCALE = {2: 1, 3: 2, 4: 6}


def subring_betti(n, b2):
    even = [comb(b2 + k - 1, k) for k in range(n + 1)]
    b = [0] * (4 * n + 1)
    for k, v in enumerate(even):
        b[2 * k] = b[4 * n - 2 * k] = v
    return BettiVector(n, tuple(b))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bound_polynomial_from_salamon(n):
    L = bound_polynomial(n)
    for b2 in range(3, 200):
        assert L(b2) == SCALE[n] * salamon_residual(subring_betti(n, b2))


def test_coefficients():
    assert bound_polynomial(3).coefficients == (-1, 15, 196, 420)
    assert bound_polynomial(2).coefficients == (-1, 19, 92)
    assert bound_polynomial(4).coefficients == (-1, 10, 301, 1538, 2256)


def test_n4_values():
    L = bound_polynomial(4)
    assert (L(24), L(25)) == (19008, -5544)


@pytest.mark.parametrize("n", [1, 5, 0])
def test_unsupported(n):
    with pytest.raises(UnsupportedDimension):
        bound_polynomial(n)
    with pytest.raises(UnsupportedDimension):
        betti_bound(n)
    with pytest.raises(UnsupportedDimension):
        conjecture_check(n)


def test_n4_rhs_unavailable():
    with pytest.raises(ValueError):
        rhs_coefficients(4)


def test_rhs_examples():
    assert rhs_value(23, 1, 0, 0, 0) == 696 == bound_polynomial(3)(23)
    assert rhs_value(7, 1, 16, 240, 8) == 2184 == bound_polynomial(3)(7)
    assert rhs_value(31, 0, 0, 0, 0) == 0


def test_rhs_coefficients_from_salamon():
    # each unknown's coefficient is minus twice its Salamon contribution
    coeffs = rhs_coefficients(3)
    for b2 in range(3, 40):
        base = salamon_residual(sixfold_betti(b2, 0, 0, 0, 0))
        for name, kw in (("c", dict(c=1)), ("d", dict(d=1)), ("e", dict(e=1)), ("b3", dict(b3=1))):
            args = {**dict(b2=b2, b3=0, c=0, d=0, e=0), **kw}
            delta = salamon_residual(sixfold_betti(**args)) - base
            assert coeffs[name](b2) == -2 * delta


def test_identity_examples():
    assert identity_check(23, 1, 0, 0, 0)
    assert identity_check(8, 6, 115, 290, 0)
    assert identity_check(7, 1, 16, 240, 8)


def test_identity_routes_scale_exactly():
    rng = random.Random(7)
    for _ in range(500):
        b2 = rng.randint(3, 60)
        c, d, e, b3 = (rng.randint(0, 50) for _ in range(4))
        residual = salamon_residual(sixfold_betti(b2, b3, c, d, e))
        assert 2 * residual == bound_polynomial(3)(b2) - rhs_value(b2, c, d, e, b3)


@pytest.mark.parametrize("n,bound,at,above", [(2, 23, 0, -28), (3, 23, 696, -60), (4, 24, 19008, -5544)])
def test_betti_bound(n, bound, at, above):
    assert betti_bound(n) == bound
    L = bound_polynomial(n)
    assert (L(bound), L(bound + 1)) == (at, above)
    cert = bound_certificate(n)
    assert cert.ok and cert.b2 == bound
    assert check_certificate(cert)
    assert cert.evidence[0].line() == f"check=L({bound})>=0 value={at} verdict=pass"
    assert bool(cert.assumptions) == (n == 4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_root_bracket_against_numpy(n):
    L = bound_polynomial(n)
    floor_, root = largest_root_bracket(L)
    largest = max(r.real for r in np.roots(L.coefficients) if abs(r.imag) < 1e-9)
    assert floor_ == floor(largest + 1e-9)
    assert floor_ == betti_bound(n)
    num = root.center + root.disc ** 0.5
    assert abs(num / root.denom - largest) < 1e-9


def test_root_descriptors():
    assert largest_root_bracket(bound_polynomial(3))[1] == RootDescriptor(21, 721, 2)
    assert largest_root_bracket(bound_polynomial(4))[1] == RootDescriptor(21, 817, 2)
    assert largest_root_bracket(bound_polynomial(2))[1] == RootDescriptor(23, 0, 1)


def test_root_display():
    r = RootDescriptor(21, 721, 2)
    assert r.symbolic() == "(21+sqrt(721))/2"
    assert r.approx() == "23.9257" == f"{(21 + 721 ** 0.5) / 2:.4f}"
    assert RootDescriptor(21, 817, 2).approx() == "24.7916"
    assert RootDescriptor(21, 625, 2).reduced() == RootDescriptor(23, 0, 1)


@pytest.mark.parametrize("n,D", [(2, 625), (3, 721), (4, 817)])
def test_conjecture(n, D):
    root = conjectured_root(n)
    assert root.disc == D
    assert conjecture_check(n)
    assert evaluate_at(bound_polynomial(n).poly, root).is_zero()


def test_conjecture_discriminants_match_factors():
    for n, K in ((3, 70), (4, 94)):
        assert 441 + 4 * K == 433 + 96 * n


def test_wrong_root_is_rejected():
    L = bound_polynomial(3).poly
    assert not evaluate_at(L, RootDescriptor(21, 722, 2)).is_zero()
    assert not evaluate_at(L, RootDescriptor(21, 817, 2)).is_zero()


def test_dim4_identity():
    assert dim4_identity(23, 0, 0) == 0
    assert dim4_identity(7, 8, 80) == 0
    assert dim4_identity(24, 0, 0) == -28


def brute_force(b2, caps):
    L = bound_polynomial(3)(b2)
    out = []
    for c in range(caps.c + 1):
        for d in range(caps.d + 1):
            for e in range(caps.e + 1):
                for b3 in range(caps.b3 + 1):
                    if rhs_value(b2, c, d, e, b3) == L:
                        out.append(FeasibleTuple(b2, c, d, e, b3))
    return out


@pytest.mark.parametrize("b2", [3, 4, 5, 6, 7, 8, 12, 13, 14, 20, 23, 24, 25])
def test_enumeration_matches_brute_force(b2):
    caps = Caps(4, 12, 60, 6)
    assert enumerate_feasible(b2, caps) == brute_force(b2, caps)


def test_enumerate_23():
    sols = enumerate_feasible(23, Caps(200, 200, 200, 200))
    assert FeasibleTuple(23, 1, 0, 0, 0) in sols
    assert FeasibleTuple(23, 0, 0, 116, 0) in sols
    assert sols == sorted(sols)
    assert all(rhs_value(t.b2, t.c, t.d, t.e, t.b3) == 696 for t in sols)
    # caps above the natural bounds change nothing
    assert sols == enumerate_feasible(23)


def test_enumerate_kummer3_member():
    it = iter_feasible(7, Caps(300, 300, 300, 300))
    assert FeasibleTuple(7, 1, 16, 240, 8) in it


def test_caps_required_when_unbounded():
    with pytest.raises(ValueError, match="cap"):
        enumerate_feasible(7)


@pytest.mark.parametrize("b2", [24, 30, 1000])
def test_infeasible_certificates(b2):
    cert = feasibility_certificate(b2, Caps(1, 1, 1, 1))
    assert cert.verdict == "infeasible" and not cert.tuples
    assert cert.evidence[0].value == bound_polynomial(3)(b2) < 0
    assert check_certificate(cert)
    assert enumerate_feasible(b2) == []


def test_feasible_certificate():
    cert = feasibility_certificate(23)
    assert cert.verdict == "feasible"
    assert check_certificate(cert)
    forged = type(cert)(3, 23, "feasible", cert.evidence, (FeasibleTuple(23, 1, 0, 1, 0),))
    assert not check_certificate(forged)


def test_report_format():
    cert = feasibility_certificate(24)
    assert cert.report().splitlines()[0] == "check=L(24)<0 value=-60 verdict=pass"
