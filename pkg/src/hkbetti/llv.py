"""Even cohomology of hyperkahler sixfolds as a sum of LLV modules.

The so(b2 + 2, C) action splits the cohomology into irreducibles. For the
even part of a sixfold the relevant pieces are

* the subring generated by H^2 (highest weight vector 1 in H^{0,0}),
* V2 = Lambda^2 C^{b2+2}, highest weight in H^{3,1},
* V3 = C^{b2+2}, highest weight in H^{2,2},
* V5 = trivial, highest weight in H^{3,3}.

The two spin modules carrying odd cohomology are not modelled; odd degrees
only enter through their totals ``b3`` and ``b5``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, NamedTuple

from .diamond import STRICT, BettiVector, BidegreeMap, HodgeDiamond, betti_from_diamond, validate

SIXFOLD = 3


class LlvInconsistencyError(ValueError):
    """Hodge data that cannot come from the LLV even-cohomology structure."""


class MultiplicityTuple(NamedTuple):
    c: int  # copies of V2
    d: int  # copies of V3
    e: int  # copies of V5


def _check_b2(b2: int):
    if b2 < 3:
        raise ValueError(f"b2 must be at least 3, got {b2}")


def sym_subring_dim(b2: int, k: int) -> int:
    """Dimension of Sym^k H^2, i.e. ``C(b2 + k - 1, k)``."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return comb(b2 + k - 1, k)


def sym_subring_hodge(b2: int, k: int, n: int = SIXFOLD) -> BidegreeMap:
    """Hodge numbers of Sym^k H^2 placed in a diamond of half dimension ``n``.

    H^2 has one class in each of H^{2,0}, H^{0,2} and ``b2 - 2`` classes in
    H^{1,1}. A monomial ``sigma^i sigmabar^j w`` with ``w`` of degree ``m`` in
    the (1,1) classes lies in bidegree ``(2i + m, 2j + m)``.
    """
    _check_b2(b2)
    if not 0 <= k <= 3:
        raise ValueError(f"only 0 <= k <= 3 is supported, got {k}")
    if k > n:
        raise ValueError(f"Sym^{k} does not fit in degree {2 * k} of a diamond with n={n}")
    entries: dict[tuple[int, int], int] = {}
    for m in range(k + 1):
        count = comb(b2 - 3 + m, m)
        for i in range(k - m + 1):
            j = k - m - i
            pq = (2 * i + m, 2 * j + m)
            entries[pq] = entries.get(pq, 0) + count
    return BidegreeMap.from_dict(n, entries)


def subring_layout(b2: int, n: int = SIXFOLD) -> BidegreeMap:
    """Full layout of the subring generated by H^2, for ``n <= 3``.

    Degrees ``2k <= 2n`` are Sym^k H^2; degrees above the middle are their
    Serre duals.
    """
    if not 1 <= n <= 3:
        raise ValueError(f"subring layout only available for n <= 3, got {n}")
    total = BidegreeMap.zeros(n)
    for k in range(n + 1):
        total = total + sym_subring_hodge(b2, k, n)
    top = 2 * n
    mirrored = {}
    for (p, q), v in total.items():
        if v and p + q < top:
            mirrored[top - p, top - q] = v
    return total + BidegreeMap.from_dict(n, mirrored)


def _v2_layout(b2: int) -> dict[tuple[int, int], int]:
    return {
        (3, 1): 1, (2, 2): b2 - 2, (1, 3): 1,
        (4, 2): b2 - 2, (3, 3): (b2 * b2 - 5 * b2 + 10) // 2, (2, 4): b2 - 2,
        (5, 3): 1, (4, 4): b2 - 2, (3, 5): 1,
    }


def _v3_layout(b2: int) -> dict[tuple[int, int], int]:
    return {
        (2, 2): 1,
        (4, 2): 1, (3, 3): b2 - 2, (2, 4): 1,
        (4, 4): 1,
    }


def _v5_layout(b2: int) -> dict[tuple[int, int], int]:
    return {(3, 3): 1}


@dataclass(frozen=True)
class LlvModuleSpec:
    id: str
    highest_weight: tuple[int, int]
    _total: Callable[[int], int]
    _degrees: Callable[[int], dict[int, int]]
    _layout: Callable[[int], dict[tuple[int, int], int]]

    def total_dim(self, b2: int) -> int:
        return self._total(b2)

    def degree_contribution(self, b2: int, k: int) -> int:
        return self._degrees(b2).get(k, 0)

    def layout(self, b2: int) -> BidegreeMap:
        _check_b2(b2)
        return BidegreeMap.from_dict(SIXFOLD, self._layout(b2))


MODULES = {
    "V2": LlvModuleSpec(
        "V2", (3, 1),
        lambda b: (b + 2) * (b + 1) // 2,
        lambda b: {4: b, 6: (b * b - b + 2) // 2, 8: b},
        _v2_layout,
    ),
    "V3": LlvModuleSpec(
        "V3", (2, 2),
        lambda b: b + 2,
        lambda b: {4: 1, 6: b, 8: 1},
        _v3_layout,
    ),
    "V5": LlvModuleSpec(
        "V5", (3, 3),
        lambda b: 1,
        lambda b: {6: 1},
        _v5_layout,
    ),
}


def module_layout(module_id: str, b2: int) -> BidegreeMap:
    try:
        spec = MODULES[module_id]
    except KeyError:
        raise ValueError(f"unknown module {module_id!r}; expected one of {sorted(MODULES)}") from None
    return spec.layout(b2)


def predicted_betti(b2: int, c: int, d: int, e: int) -> tuple[int, int]:
    """``(b4, b6)`` of a sixfold with the given multiplicities."""
    b4 = comb(b2 + 1, 2) + c * b2 + d
    b6 = comb(b2 + 2, 3) + c * (b2 * b2 - b2 + 2) // 2 + d * b2 + e
    return b4, b6


def extract_multiplicities(diamond: HodgeDiamond) -> MultiplicityTuple:
    """Read ``(c, d, e)`` off a sixfold's Hodge diamond.

    ``c`` comes from h^{3,1}, ``d`` from h^{2,2} and ``e`` from b6. ``d`` is
    recomputed from b4 and the two values must agree.
    """
    if diamond.n != SIXFOLD:
        raise ValueError(f"multiplicity extraction needs n=3, got n={diamond.n}")
    report = validate(diamond, STRICT)
    if not report.ok:
        failed = ", ".join(f.check for f in report.findings)
        raise LlvInconsistencyError(f"diamond fails strict validation: {failed}")

    betti = betti_from_diamond(diamond)
    b2 = betti.b2
    c = diamond[3, 1] - (b2 - 2)
    d = diamond[2, 2] - (comb(b2 - 1, 2) + 1) - c * (b2 - 2)
    d_from_b4 = betti[4] - comb(b2 + 1, 2) - c * b2
    e = betti[6] - comb(b2 + 2, 3) - c * (b2 * b2 - b2 + 2) // 2 - d * b2
    problems = []
    if d != d_from_b4:
        problems.append(f"d from h22 is {d} but d from b4 is {d_from_b4}")
    problems += [f"{name}={v} < 0" for name, v in (("c", c), ("d", d), ("e", e)) if v < 0]
    if problems:
        raise LlvInconsistencyError(
            "diamond inconsistent with LLV even-cohomology structure: " + "; ".join(problems))
    return MultiplicityTuple(c, d, e)


def even_layout(b2: int, mult: MultiplicityTuple) -> BidegreeMap:
    """Even cohomology predicted by the subring plus ``c V2 + d V3 + e V5``."""
    c, d, e = mult
    return (subring_layout(b2, SIXFOLD)
            + module_layout("V2", b2).scale(c)
            + module_layout("V3", b2).scale(d)
            + module_layout("V5", b2).scale(e))


def verify_even_decomposition(diamond: HodgeDiamond,
                              mult: MultiplicityTuple | None = None) -> BidegreeMap:
    """Per-bidegree residual of the even cohomology; all zero certifies the split.

    ``mult`` defaults to :func:`extract_multiplicities`. Odd-degree entries of
    the residual are set to zero.
    """
    if mult is None:
        mult = extract_multiplicities(diamond)
    elif diamond.n != SIXFOLD:
        raise ValueError(f"even decomposition needs n=3, got n={diamond.n}")
    residual = diamond - even_layout(diamond.b2, MultiplicityTuple(*mult))
    return BidegreeMap.from_dict(SIXFOLD, {
        (p, q): v for (p, q), v in residual.items() if (p + q) % 2 == 0})


def extract_primitive_b4(b2: int, b4: int) -> int:
    """``b4' = b4 - C(b2 + 1, 2)``, the part of H^4 outside Sym^2 H^2."""
    _check_b2(b2)
    prim = b4 - comb(b2 + 1, 2)
    if prim < 0:
        raise LlvInconsistencyError(
            f"b4={b4} is below dim Sym^2 H^2 = {comb(b2 + 1, 2)}; Sym^2 H^2 cannot inject")
    return prim


def sixfold_betti(b2: int, b3: int, c: int, d: int, e: int, b5: int = 0) -> BettiVector:
    """Betti vector of a sixfold with the given multiplicities, laid out by duality."""
    b4, b6 = predicted_betti(b2, c, d, e)
    return BettiVector(3, (1, 0, b2, b3, b4, b5, b6, b5, b4, b3, b2, 0, 1))
