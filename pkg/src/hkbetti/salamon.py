"""Salamon's linear relation among the Betti numbers of a compact hyperkahler manifold.

For complex dimension ``2n``::

    2 * sum_{j=1}^{2n} (-1)^j (3 j^2 - n) b_{2n-j} = n b_{2n}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diamond import BettiVector


def coefficient(n: int, j: int) -> int:
    """Coefficient of ``b_{2n-j}`` on the left-hand side."""
    return 2 * (-1) ** j * (3 * j * j - n)


@dataclass(frozen=True)
class SalamonForm:
    n: int
    lhs: dict[int, int]  # j -> coefficient of b_{2n-j}
    rhs: int  # coefficient of b_{2n}

    def by_degree(self) -> dict[int, int]:
        """Left-hand coefficients keyed by Betti degree ``2n - j``."""
        return {2 * self.n - j: c for j, c in self.lhs.items()}

    def specialized(self) -> tuple[dict[int, int], int]:
        """Coefficients after substituting ``b_0 = 1`` and ``b_1 = 0``.

        Returns ``(terms, constant)`` where ``terms`` maps degree -> coefficient
        for ``2 <= degree < 2n`` and drops zero coefficients.
        """
        deg = self.by_degree()
        terms = {k: c for k, c in sorted(deg.items(), reverse=True) if k >= 2 and c != 0}
        return terms, deg[0]


def salamon_form(n: int) -> SalamonForm:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return SalamonForm(n, {j: coefficient(n, j) for j in range(1, 2 * n + 1)}, n)


def salamon_residual(betti: BettiVector | Sequence[int], n: int | None = None) -> int:
    """Left side minus right side of the relation; zero for hyperkahler Betti vectors.

    Accepts a :class:`BettiVector` or a plain sequence ``b_0..b_{4n}`` (entries
    may then be any integers, which keeps the map linear over Z).
    """
    if isinstance(betti, BettiVector):
        n, b = betti.n, betti.b
    else:
        b = tuple(betti)
        if n is None:
            if (len(b) - 1) % 4 or len(b) < 5:
                raise ValueError(f"length {len(b)} is not 4n+1")
            n = (len(b) - 1) // 4
        elif len(b) != 4 * n + 1:
            raise ValueError(f"expected {4 * n + 1} entries for n={n}, got {len(b)}")
    form = salamon_form(n)
    lhs = sum(c * b[2 * n - j] for j, c in form.lhs.items())
    return lhs - form.rhs * b[2 * n]


def _term(coef: int, name: str, first: bool) -> str:
    mag = abs(coef)
    body = f"{mag}*{name}" if name else str(mag)
    if first:
        return body if coef > 0 else f"-{body}"
    return f" + {body}" if coef > 0 else f" - {body}"


def specialized_relation_text(n: int) -> str:
    """E.g. ``'18*b4 - 48*b3 + 90*b2 + 210 = 3*b6'`` for ``n = 3``."""
    form = salamon_form(n)
    terms, const = form.specialized()
    parts = []
    for k, c in terms.items():
        parts.append(_term(c, f"b{k}", not parts))
    if const:
        parts.append(_term(const, "", not parts))
    lhs = "".join(parts) or "0"
    return f"{lhs} = {form.rhs}*b{2 * n}"
