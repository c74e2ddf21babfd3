"""Exact integer polynomials and arithmetic in Z[s]/(s^2 - D)."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients from highest degree down."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        i = 0
        while i < len(coeffs) - 1 and coeffs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", coeffs[i:] or (0,))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[0]

    def ascending(self) -> tuple[int, ...]:
        return self.coeffs[::-1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.ascending(), other.ascending()
        size = max(len(a), len(b))
        a += (0,) * (size - len(a))
        b += (0,) * (size - len(b))
        return IntPoly(reversed([x + y for x, y in zip(a, b)]))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, a: int) -> "IntPoly":
        """The polynomial ``t -> self(a + t)``."""
        out = IntPoly.constant(0)
        linear = IntPoly((1, a))
        for c in self.coeffs:
            out = out * linear + IntPoly.constant(c)
        return out

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        if divisor.lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        if self.degree < dd:
            return IntPoly.constant(0), self
        quot = []
        for i in range(len(rem) - dd):
            q = rem[i] * divisor.lead  # lead is its own inverse
            quot.append(q)
            for j, dc in enumerate(divisor.coeffs):
                rem[i + j] -= q * dc
        return IntPoly(quot), IntPoly(rem[len(rem) - dd:] if dd > 0 else (0,))

    def __str__(self):
        return self.format()

    def format(self, var: str = "x") -> str:
        terms = []
        deg = self.degree
        for i, c in enumerate(self.coeffs):
            k = deg - i
            if c == 0:
                continue
            mag = abs(c)
            body = (str(mag) if k == 0 or mag != 1 else "") + ("*" if k and mag != 1 else "")
            body += "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return first + "".join(f" {s} {b}" for s, b in terms[1:])


def tail_certificate(poly: IntPoly, start: int) -> tuple[int, ...]:
    """Coefficients of ``sign(lead) * poly(start + t)``.

    If all are >= 0 and the constant term is > 0, ``poly`` has no real root
    in ``[start, oo)`` and keeps the sign of its leading coefficient there.
    """
    shifted = poly.shift(start)
    if shifted.lead < 0:
        shifted = -shifted
    return shifted.coeffs


def tail_certified(poly: IntPoly, start: int) -> bool:
    coeffs = tail_certificate(poly, start)
    return all(c >= 0 for c in coeffs) and coeffs[-1] > 0


def nonnegative_from(poly: IntPoly, start: int) -> bool:
    """Sufficient test that ``poly(x) >= 0`` for all real ``x >= start``."""
    return all(c >= 0 for c in poly.shift(start).coeffs)


def cauchy_bound(poly: IntPoly) -> int:
    """Integer ``M`` with every real root of ``poly`` in ``(-M, M)``."""
    lead = abs(poly.lead)
    return 1 + max((-(-abs(c) // lead) for c in poly.coeffs[1:]), default=0)


@dataclass(frozen=True)
class QuadInt:
    """``x + y*s`` where ``s`` is the positive square root of ``D``."""

    x: int
    y: int
    D: int

    def _check(self, other):
        if isinstance(other, int):
            return QuadInt(other, 0, self.D)
        if other.D != self.D:
            raise ValueError("mismatched radicands")
        return other

    def __add__(self, other):
        o = self._check(other)
        return QuadInt(self.x + o.x, self.y + o.y, self.D)

    __radd__ = __add__

    def __mul__(self, other):
        o = self._check(other)
        return QuadInt(self.x * o.x + self.D * self.y * o.y, self.x * o.y + self.y * o.x, self.D)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadInt(-self.x, -self.y, self.D)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __pow__(self, k: int):
        out = QuadInt(1, 0, self.D)
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        """Sign of the real number ``x + y*sqrt(D)``."""
        r = isqrt(self.D)
        if r * r == self.D:
            v = self.x + self.y * r
            return (v > 0) - (v < 0)
        sx = (self.x > 0) - (self.x < 0)
        sy = (self.y > 0) - (self.y < 0)
        if sx == sy or sy == 0:
            return sx
        if sx == 0:
            return sy
        # opposite signs: compare x^2 against y^2 D
        diff = self.x * self.x - self.y * self.y * self.D
        return sx if diff > 0 else sy

    def is_zero(self) -> bool:
        return self.sign() == 0
