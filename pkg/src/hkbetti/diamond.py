"""Hodge diamonds and Betti vectors of compact complex manifolds of dimension 2n.

A diamond is stored as a square table ``h[p][q]`` with ``0 <= p, q <= 2n``.
The text format is line based::

    # comment
    n 1
    1
    0 0
    1 20 1
    0 0
    1

After the ``n <int>`` header come ``4n + 1`` rows; row ``r`` lists
``h^{p, r-p}`` for ``p`` running from ``min(r, 2n)`` down to ``max(0, r - 2n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator

STRUCTURAL = "structural"
STRICT = "strict"
MODES = (STRUCTURAL, STRICT)


class DiamondFormatError(ValueError):
    """Malformed diamond document; carries the 1-based line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def row_bidegrees(n: int, r: int) -> list[tuple[int, int]]:
    """Bidegrees of row ``r`` in file order."""
    top = 2 * n
    return [(p, r - p) for p in range(min(r, top), max(0, r - top) - 1, -1)]


@dataclass(frozen=True)
class BidegreeMap:
    """Integer-valued table on bidegrees ``(p, q)``, ``0 <= p, q <= 2n``.

    Entries may be negative (residuals); :class:`HodgeDiamond` forbids that.
    """

    n: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"half dimension must be a positive integer, got {self.n!r}")
        size = 2 * self.n + 1
        table = tuple(tuple(row) for row in self.table)
        if len(table) != size or any(len(row) != size for row in table):
            raise ValueError(f"table must be {size}x{size} for n={self.n}")
        for row in table:
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise TypeError(f"entries must be integers, got {v!r}")
        object.__setattr__(self, "table", table)

    @classmethod
    def zeros(cls, n: int) -> "BidegreeMap":
        size = 2 * n + 1
        return cls(n, tuple((0,) * size for _ in range(size)))

    @classmethod
    def from_dict(cls, n: int, entries: dict[tuple[int, int], int]) -> "BidegreeMap":
        size = 2 * n + 1
        rows = [[0] * size for _ in range(size)]
        for (p, q), v in entries.items():
            rows[p][q] += v
        return cls(n, tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return 2 * self.n

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if not (0 <= p <= self.dim and 0 <= q <= self.dim):
            return 0
        return self.table[p][q]

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for p, row in enumerate(self.table):
            for q, v in enumerate(row):
                yield (p, q), v

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {pq: v for pq, v in self.items() if v}

    def degree_sum(self, k: int) -> int:
        return sum(self[p, k - p] for p in range(0, k + 1))

    def degree_sums(self) -> tuple[int, ...]:
        return tuple(self.degree_sum(k) for k in range(2 * self.dim + 1))

    def total(self) -> int:
        return sum(v for _, v in self.items())

    def rows(self) -> list[list[int]]:
        """Entries grouped by total degree, in file order."""
        return [[self[pq] for pq in row_bidegrees(self.n, r)] for r in range(2 * self.dim + 1)]

    def hodge_asymmetries(self) -> list[tuple[int, int]]:
        return [(p, q) for (p, q), v in self.items() if p < q and v != self[q, p]]

    def serre_asymmetries(self) -> list[tuple[int, int]]:
        top = self.dim
        out = []
        for (p, q), v in self.items():
            pd, qd = top - p, top - q
            if (p, q) < (pd, qd) and v != self[pd, qd]:
                out.append((p, q))
        return out

    def is_symmetric(self) -> bool:
        return not self.hodge_asymmetries() and not self.serre_asymmetries()

    def __add__(self, other: "BidegreeMap") -> "BidegreeMap":
        self._check_same_n(other)
        return BidegreeMap(self.n, tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.table, other.table)))

    def __sub__(self, other: "BidegreeMap") -> "BidegreeMap":
        return self + other.scale(-1)

    def scale(self, k: int) -> "BidegreeMap":
        return BidegreeMap(self.n, tuple(tuple(k * v for v in row) for row in self.table))

    def _check_same_n(self, other):
        if self.n != other.n:
            raise ValueError(f"half dimensions differ: {self.n} != {other.n}")


@dataclass(frozen=True)
class HodgeDiamond(BidegreeMap):
    """Hodge numbers ``h^{p,q}`` of a manifold of complex dimension ``2n``.

    Construction checks shape and nonnegativity only. Symmetry is left to
    :func:`validate` so that perturbed diamonds can still be loaded.
    """

    def __post_init__(self):
        super().__post_init__()
        for (p, q), v in self.items():
            if v < 0:
                raise ValueError(f"negative Hodge number h^{{{p},{q}}} = {v}")

    @classmethod
    def from_rows(cls, n: int, rows) -> "HodgeDiamond":
        """Build from rows in file order (row ``r`` = total degree ``r``)."""
        rows = [list(r) for r in rows]
        if len(rows) != 4 * n + 1:
            raise ValueError(f"expected {4 * n + 1} rows for n={n}, got {len(rows)}")
        size = 2 * n + 1
        table = [[0] * size for _ in range(size)]
        for r, row in enumerate(rows):
            slots = row_bidegrees(n, r)
            if len(row) != len(slots):
                raise ValueError(f"row {r} must have {len(slots)} entries, got {len(row)}")
            for (p, q), v in zip(slots, row):
                table[p][q] = v
        return cls(n, tuple(tuple(t) for t in table))

    def with_entry(self, p: int, q: int, value: int) -> "HodgeDiamond":
        rows = [list(r) for r in self.table]
        rows[p][q] = value
        return HodgeDiamond(self.n, tuple(tuple(r) for r in rows))

    @property
    def b2(self) -> int:
        return self.degree_sum(2)


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers ``b_0, ..., b_{4n}``."""

    n: int
    b: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"half dimension must be a positive integer, got {self.n!r}")
        b = tuple(self.b)
        if len(b) != 4 * self.n + 1:
            raise ValueError(f"expected {4 * self.n + 1} Betti numbers for n={self.n}, got {len(b)}")
        if any(not isinstance(x, int) or x < 0 for x in b):
            raise ValueError(f"Betti numbers must be nonnegative integers: {b}")
        object.__setattr__(self, "b", b)

    def __getitem__(self, k: int) -> int:
        return self.b[k]

    def __len__(self):
        return len(self.b)

    @property
    def b2(self) -> int:
        return self.b[2]

    @property
    def b4prime(self) -> int:
        """Primitive part of ``b_4``: ``b_4 - C(b_2 + 1, 2)``. May be negative."""
        return self.b[4] - comb(self.b[2] + 1, 2)

    def duality_failures(self) -> list[int]:
        top = 4 * self.n
        return [k for k in range(2 * self.n) if self.b[k] != self.b[top - k]]


@dataclass(frozen=True)
class Finding:
    check: str
    passed: bool
    indices: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`.

    ``findings`` holds the failed checks only; ``checks`` records every
    check that ran, passed or not.
    """

    mode: str
    checks: tuple[Finding, ...] = field(default=())

    @property
    def findings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.checks if not f.passed)

    @property
    def ok(self) -> bool:
        return not self.findings

    def __bool__(self):
        return self.ok


def betti_from_diamond(diamond: BidegreeMap) -> BettiVector:
    return BettiVector(diamond.n, diamond.degree_sums())


def validate(diamond: HodgeDiamond, mode: str = STRUCTURAL) -> ValidationReport:
    if mode not in MODES:
        raise ValueError(f"unknown validation mode {mode!r}")
    n = diamond.n
    checks = []

    def add(name, bad):
        checks.append(Finding(name, not bad, tuple(bad)))

    add("hodge_symmetry", diamond.hodge_asymmetries())
    add("serre_duality", diamond.serre_asymmetries())
    add("h00_is_one", [] if diamond[0, 0] == 1 else [(0, 0)])
    betti = betti_from_diamond(diamond)
    add("poincare_duality", betti.duality_failures())

    if mode == STRICT:
        add("h10_vanishes", [(p, q) for p, q in ((1, 0), (0, 1)) if diamond[p, q] != 0])
        add("h20_is_one", [(p, q) for p, q in ((2, 0), (0, 2)) if diamond[p, q] != 1])
        add("b1_vanishes", [] if betti[1] == 0 else [1])
        add("b2_at_least_3", [] if betti.b2 >= 3 else [2])
        # Sym^k H^2 injects into H^{2k} for k <= n.
        add("verbitsky_injection",
            [2 * k for k in range(1, n + 1) if betti[2 * k] < comb(betti.b2 + k - 1, k)])
    return ValidationReport(mode, tuple(checks))


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise DiamondFormatError(f"not an integer: {token!r}", lineno) from None


def parse_diamond(text: str) -> HodgeDiamond:
    lines = list(_significant_lines(text))
    if not lines:
        raise DiamondFormatError("empty document: missing 'n <integer>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise DiamondFormatError(f"malformed header {header!r}, expected 'n <integer>'", lineno)
    n = _parse_int(parts[1], lineno)
    if n < 1:
        raise DiamondFormatError(f"half dimension must be positive, got {n}", lineno)

    body = lines[1:]
    expected = 4 * n + 1
    if len(body) != expected:
        where = body[expected][0] if len(body) > expected else (body[-1][0] if body else lineno)
        raise DiamondFormatError(f"expected {expected} rows for n={n}, got {len(body)}", where)

    rows = []
    for r, (lineno, line) in enumerate(body):
        tokens = line.split()
        want = len(row_bidegrees(n, r))
        if len(tokens) != want:
            raise DiamondFormatError(f"row {r} must have {want} entries, got {len(tokens)}", lineno)
        values = [_parse_int(t, lineno) for t in tokens]
        for v in values:
            if v < 0:
                raise DiamondFormatError(f"negative entry {v}", lineno)
        rows.append(values)
    return HodgeDiamond.from_rows(n, rows)


def serialize_diamond(diamond: BidegreeMap) -> str:
    lines = [f"n {diamond.n}"]
    lines += [" ".join(str(v) for v in row) for row in diamond.rows()]
    return "\n".join(lines) + "\n"


def load_diamond(path) -> HodgeDiamond:
    with open(path, encoding="utf-8") as fh:
        return parse_diamond(fh.read())


def format_diamond(diamond: BidegreeMap) -> str:
    """Centred, human-readable rendering (top row is ``h^{0,0}``)."""
    rows = diamond.rows()
    width = max(len(str(v)) for row in rows for v in row) + 1
    span = len(rows[len(rows) // 2])
    out = []
    for row in rows:
        pad = (span - len(row)) * width // 2
        out.append(" " * pad + "".join(str(v).center(width) for v in row).rstrip())
    return "\n".join(out)
