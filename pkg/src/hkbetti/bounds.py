"""Second Betti number bounds as exact integer computations.

Substituting the LLV decomposition into Salamon's relation gives, for
complex dimension ``2n``, an identity ``L_n(b2) = RHS`` where the right side
is a combination of multiplicities and odd Betti numbers with coefficients
that are nonnegative once ``b2`` is large. ``L_n`` is negative past its
largest root, so ``b2`` cannot exceed the floor of that root.

For sixfolds the identity reads::

    -b2^3 + 15 b2^2 + 196 b2 + 420 = 3c(b2^2 - 13 b2 + 2) + 6d(b2 - 6) + 6e + 96 b3
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import isqrt
from typing import Iterator, NamedTuple

from .llv import sixfold_betti
from .poly import IntPoly, QuadInt, cauchy_bound, nonnegative_from, tail_certificate, tail_certified
from .salamon import salamon_residual

SUPPORTED = (2, 3, 4)
# Offset and denominator in the conjectured largest root (21 + sqrt(433 + 96 n)) / 2.
_CONJ_CENTER = 21
_CONJ_DENOM = 2
_SWEEP = 100


class UnsupportedDimension(ValueError):
    pass


def _check_n(n: int):
    if n not in SUPPORTED:
        raise UnsupportedDimension(f"bound polynomials are only known for n in {SUPPORTED}, got {n!r}")


@dataclass(frozen=True)
class BoundPolynomial:
    n: int
    poly: IntPoly
    factors: tuple[IntPoly, ...]

    def __post_init__(self):
        product = reduce(lambda a, b: a * b, self.factors, IntPoly.constant(1))
        if product != self.poly:
            raise ValueError(f"factorization of L_{self.n} does not expand to {self.poly}")

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Highest degree first."""
        return self.poly.coeffs

    def __call__(self, b2: int) -> int:
        return self.poly(b2)


# Factored forms; n=2 and n=3 also carry the expanded coefficients so the
# factorization is checked against an independent statement.
_FACTORS = {
    2: ((-1,), (1, 4), (1, -23)),
    3: ((-1,), (1, 6), (1, -21, -70)),
    4: ((-1,), (1, 3), (1, 8), (1, -21, -94)),
}
_EXPANDED = {
    2: (-1, 19, 92),
    3: (-1, 15, 196, 420),
}


def bound_polynomial(n: int) -> BoundPolynomial:
    _check_n(n)
    factors = tuple(IntPoly(f) for f in _FACTORS[n])
    if n in _EXPANDED:
        poly = IntPoly(_EXPANDED[n])
    else:
        poly = reduce(lambda a, b: a * b, factors)
    return BoundPolynomial(n, poly, factors)


def rhs_coefficients(n: int) -> dict[str, IntPoly]:
    """Coefficient of each unknown on the right-hand side, as polynomials in b2.

    For ``n = 4`` these are not known and a ``ValueError`` is raised.
    """
    _check_n(n)
    if n == 2:
        return {"b4prime": IntPoly.constant(2), "b3": IntPoly.constant(2)}
    if n == 3:
        return {
            "c": IntPoly((3, -39, 6)),
            "d": IntPoly((6, -36)),
            "e": IntPoly.constant(6),
            "b3": IntPoly.constant(96),
        }
    raise ValueError("the n=4 right-hand side is not available")


def rhs_value(b2: int, c: int, d: int, e: int, b3: int) -> int:
    """Right side of the sixfold identity."""
    return 3 * c * (b2 * b2 - 13 * b2 + 2) + 6 * d * (b2 - 6) + 6 * e + 96 * b3


def dim4_identity(b2: int, b3: int, b4prime: int) -> int:
    """``L_2(b2) - (2 b4' + 2 b3)``; zero for hyperkahler fourfolds."""
    return bound_polynomial(2)(b2) - (2 * b4prime + 2 * b3)


def identity_check(b2: int, c: int, d: int, e: int, b3: int) -> bool:
    """Whether Salamon's relation and ``L_3 = RHS`` agree on this tuple.

    The first route builds the Betti vector from the module multiplicities
    and evaluates Salamon's relation; the second evaluates the polynomial
    identity directly. Returns ``True`` iff both routes give the same verdict.
    """
    residual = salamon_residual(sixfold_betti(b2, b3, c, d, e))
    gap = bound_polynomial(3)(b2) - rhs_value(b2, c, d, e, b3)
    return (residual == 0) == (gap == 0)


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class Evidence:
    check: str
    value: int
    passed: bool

    def line(self) -> str:
        return f"check={self.check} value={self.value} verdict={'pass' if self.passed else 'fail'}"

    def tsv(self) -> str:
        return f"{self.check}\t{self.value}\t{'pass' if self.passed else 'fail'}"


class FeasibleTuple(NamedTuple):
    b2: int
    c: int
    d: int
    e: int
    b3: int

    @property
    def key(self) -> tuple[int, int, int, int]:
        return self.c, self.d, self.e, self.b3


@dataclass(frozen=True)
class BoundCertificate:
    n: int
    b2: int
    verdict: str  # "infeasible" or "feasible" for per-b2 certificates, "bound" for betti_bound
    evidence: tuple[Evidence, ...]
    tuples: tuple[FeasibleTuple, ...] = ()
    assumptions: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(ev.passed for ev in self.evidence)

    def report(self) -> str:
        return "".join(ev.line() + "\n" for ev in self.evidence)


def _bound_evidence(n: int, bound: int) -> list[Evidence]:
    L = bound_polynomial(n)
    hi = bound + 1
    ev = [
        Evidence(f"L({bound})>=0", L(bound), L(bound) >= 0),
        Evidence(f"L({hi})<0", L(hi), L(hi) < 0),
    ]
    sweep = max(L(b) for b in range(hi, hi + _SWEEP))
    ev.append(Evidence(f"max_L[{hi}..{hi + _SWEEP - 1}]<0", sweep, sweep < 0))
    tail = tail_certificate(L.poly, hi)
    ev.append(Evidence(f"-L({hi}+t)_min_coeff>0", min(tail), tail_certified(L.poly, hi)))
    if n != 4:
        for name, coef in rhs_coefficients(n).items():
            shifted = coef.shift(hi).coeffs
            ev.append(Evidence(f"rhs_{name}({hi}+t)_min_coeff>=0", min(shifted),
                               nonnegative_from(coef, hi)))
    return ev


_N4_ASSUMPTION = ("right-hand side for n=4 taken to be a nonnegative combination of "
                  "nonnegative multiplicities when b2 >= 25 (not derived here)")


def bound_certificate(n: int) -> BoundCertificate:
    bound = betti_bound(n)
    return BoundCertificate(n, bound, "bound", tuple(_bound_evidence(n, bound)),
                            assumptions=(_N4_ASSUMPTION,) if n == 4 else ())


def betti_bound(n: int) -> int:
    """Largest ``b2`` not excluded by the sign argument in dimension ``2n``.

    Scans down from a root bound to the largest integer with ``L(b2) >= 0`` and
    then certifies that ``L`` stays negative above it and that every
    right-hand coefficient stays nonnegative.
    """
    L = bound_polynomial(n)
    b = cauchy_bound(L.poly)
    while L(b) < 0:
        b -= 1
    failed = [ev.check for ev in _bound_evidence(n, b) if not ev.passed]
    if failed:
        raise ArithmeticError(f"bound certificate for n={n} failed: {failed}")
    return b


# -- roots ----------------------------------------------------------------


@dataclass(frozen=True)
class RootDescriptor:
    """The real number ``(center + sqrt(disc)) / denom``."""

    center: int
    disc: int
    denom: int

    @property
    def is_rational(self) -> bool:
        r = isqrt(self.disc)
        return r * r == self.disc

    def reduced(self) -> "RootDescriptor":
        if self.is_rational:
            num = self.center + isqrt(self.disc)
            if num % self.denom == 0:
                return RootDescriptor(num // self.denom, 0, 1)
        return self

    def floor(self) -> int:
        # floor((c + sqrt(D)) / q) = floor((c + isqrt(D)) / q) for q > 0
        return (self.center + isqrt(self.disc)) // self.denom

    def numerator(self) -> QuadInt:
        return QuadInt(self.center, 1, self.disc)

    def symbolic(self) -> str:
        if self.disc == 0:
            return str(self.center) if self.denom == 1 else f"{self.center}/{self.denom}"
        return f"({self.center}+sqrt({self.disc}))/{self.denom}"

    def approx(self, places: int = 4) -> str:
        """Decimal rounding, computed with integers only."""
        scale = 10 ** (places + 2)
        num = self.center * scale + isqrt(self.disc * scale * scale)
        v = num // self.denom  # value * scale, floored
        v = (v + 50) // 100  # round to `places`
        whole, frac = divmod(v, 10 ** places)
        return f"{whole}.{frac:0{places}d}"

    def __str__(self):
        return self.symbolic()


def _largest_root(factor: IntPoly) -> RootDescriptor | None:
    if factor.degree == 1:
        a, b = factor.coeffs
        if a < 0:
            a, b = -a, -b
        return RootDescriptor(-b, 0, a).reduced()
    if factor.degree == 2:
        a, b, c = factor.coeffs
        disc = b * b - 4 * a * c
        if disc < 0:
            return None
        center = -b if a > 0 else b
        return RootDescriptor(center, disc, 2 * abs(a)).reduced()
    return None


def _in_unit_interval(root: RootDescriptor, m: int) -> bool:
    """``m <= root < m + 1``, decided exactly."""
    num = root.numerator()
    return (num - m * root.denom).sign() >= 0 and (num - (m + 1) * root.denom).sign() < 0


def largest_root_bracket(poly: BoundPolynomial | IntPoly) -> tuple[int, RootDescriptor | None]:
    """Floor of the largest real root, located by exact sign evaluation.

    The descriptor comes from whichever known factor vanishes in
    ``[floor, floor + 1)``; it is ``None`` when no factorization is known.
    """
    p = poly.poly if isinstance(poly, BoundPolynomial) else poly
    factors = poly.factors if isinstance(poly, BoundPolynomial) else (p,)
    lead_sign = 1 if p.lead > 0 else -1
    m = cauchy_bound(p)
    while m > -cauchy_bound(p) and p(m) * lead_sign > 0:
        m -= 1
    if not tail_certified(p, m + 1):
        raise ArithmeticError(f"could not certify that {p} has no root above {m + 1}")
    for f in factors:
        if f.degree < 1:
            continue
        root = _largest_root(f)
        if root is not None and _in_unit_interval(root, m):
            return m, root
    return m, None


# -- conjectured root pattern -----------------------------------------------


def conjectured_root(n: int) -> RootDescriptor:
    return RootDescriptor(_CONJ_CENTER, 433 + 96 * n, _CONJ_DENOM)


def evaluate_at(poly: IntPoly, root: RootDescriptor) -> QuadInt:
    """``denom^deg * poly(root)`` as an element of Z[sqrt(disc)]."""
    deg = poly.degree
    num = root.numerator()
    acc = QuadInt(0, 0, root.disc)
    for i, c in enumerate(poly.ascending()):
        acc = acc + (num ** i) * (c * root.denom ** (deg - i))
    return acc


def _minimal_polynomial(root: RootDescriptor) -> IntPoly:
    r = root.reduced()
    if r.disc == 0 and r.denom == 1:
        return IntPoly((1, -r.center))
    c, D, q = root.center, root.disc, root.denom
    # (q x - c)^2 = D, made monic when q = 2 and c, D have matching parity
    if q != 2 or (c * c - D) % 4:
        raise ValueError(f"no monic integer quadratic for {root}")
    return IntPoly((1, -c, (c * c - D) // 4))


def conjecture_check(n: int) -> bool:
    """Whether ``(21 + sqrt(433 + 96 n)) / 2`` is exactly the largest root of ``L_n``.

    The root test runs in Z[s] with ``s^2 = 433 + 96 n``. Largestness follows
    from exact division by the root's minimal polynomial and a sign
    certificate for the cofactor on ``[floor(root), oo)``.
    """
    L = bound_polynomial(n)
    root = conjectured_root(n)
    if not evaluate_at(L.poly, root).is_zero():
        return False
    minimal = _minimal_polynomial(root)
    cofactor, rem = L.poly.divmod_monic(minimal)
    if rem != IntPoly.constant(0):
        return False
    return tail_certified(cofactor, root.floor())


# -- feasibility enumeration --------------------------------------------------


@dataclass(frozen=True)
class Caps:
    c: int | None = None
    d: int | None = None
    e: int | None = None
    b3: int | None = None


def _resolve_caps(b2: int, caps: Caps, target: int) -> dict[str, int]:
    coeffs = {name: poly(b2) for name, poly in rhs_coefficients(3).items()}
    resolved = {}
    for name, coef in coeffs.items():
        cap = getattr(caps, name)
        if cap is not None and cap < 0:
            raise ValueError(f"cap for {name} must be nonnegative")
        if all(v > 0 for v in coeffs.values()):
            natural = max(target, -1) // coef
            cap = natural if cap is None else min(cap, natural)
        elif cap is None:
            raise ValueError(f"b2={b2}: coefficients are not all positive, an explicit cap for {name} is required")
        resolved[name] = cap
    return resolved


def iter_feasible(b2: int, caps: Caps | None = None) -> Iterator[FeasibleTuple]:
    """Nonnegative ``(c, d, e, b3)`` within ``caps`` solving the sixfold identity.

    Yields in lexicographic order of ``(c, d, e, b3)``.
    """
    if b2 < 3:
        raise ValueError(f"b2 must be at least 3, got {b2}")
    target = bound_polynomial(3)(b2)
    A = rhs_coefficients(3)["c"](b2)
    B = rhs_coefficients(3)["d"](b2)
    cap = _resolve_caps(b2, caps or Caps(), target)
    cap_c, cap_d, cap_e, cap_b3 = cap["c"], cap["d"], cap["e"], cap["b3"]
    if cap_c < 0 or cap_d < 0 or cap_e < 0 or cap_b3 < 0:
        return
    floor_d = min(0, B * cap_d)  # smallest value of B d + 6 e + 96 b3 in the box
    for c in range(cap_c + 1):
        r1 = target - A * c
        if r1 < floor_d:
            if A > 0:
                break
            continue
        for d in range(cap_d + 1):
            r2 = r1 - B * d
            if r2 < 0:
                if B > 0:
                    break
                continue
            if r2 % 6:
                continue
            # e + 16 b3 = t; ascending e is descending b3
            t = r2 // 6
            hi = min(cap_b3, t // 16)
            lo = max(0, -(-(t - cap_e) // 16))
            for b3 in range(hi, lo - 1, -1):
                yield FeasibleTuple(b2, c, d, t - 16 * b3, b3)


def enumerate_feasible(b2: int, caps: Caps | None = None) -> list[FeasibleTuple]:
    if _sign_infeasible(b2):
        return []
    return list(iter_feasible(b2, caps))


def _sign_infeasible(b2: int) -> bool:
    if b2 < 3:
        return False
    L = bound_polynomial(3)
    return L(b2) < 0 and all(p(b2) >= 0 for p in rhs_coefficients(3).values())


def feasibility_certificate(b2: int, caps: Caps | None = None) -> BoundCertificate:
    """Evidence that ``b2`` admits no sixfold, or the feasible tuples within ``caps``."""
    L = bound_polynomial(3)
    value = L(b2)
    coeffs = rhs_coefficients(3)
    if _sign_infeasible(b2):
        ev = [Evidence(f"L({b2})<0", value, True)]
        ev += [Evidence(f"rhs_{name}({b2})>=0", p(b2), True) for name, p in coeffs.items()]
        return BoundCertificate(3, b2, "infeasible", tuple(ev))
    tuples = tuple(enumerate_feasible(b2, caps))
    ev = [Evidence(f"L({b2})", value, True)]
    ev += [Evidence(f"rhs_{name}({b2})", p(b2), True) for name, p in coeffs.items()]
    ev.append(Evidence("solutions_within_caps", len(tuples), True))
    verdict = "feasible" if tuples else "infeasible"
    return BoundCertificate(3, b2, verdict, tuple(ev), tuples)


def check_certificate(cert: BoundCertificate) -> bool:
    """Re-check a certificate's arithmetic by plain integer evaluation."""
    if cert.verdict == "bound":
        return cert == bound_certificate(cert.n)
    L = bound_polynomial(3)
    if cert.verdict == "feasible":
        return bool(cert.tuples) and all(
            t.b2 == cert.b2 and min(t) >= 0 and rhs_value(t.b2, t.c, t.d, t.e, t.b3) == L(t.b2)
            for t in cert.tuples)
    if cert.tuples:
        return False
    if _sign_infeasible(cert.b2):
        return True
    return any(ev.check == "solutions_within_caps" and ev.value == 0 for ev in cert.evidence)
