"""The five known deformation classes in dimensions four and six.

Diamonds live in ``data/<name>.hodge``; the statistics they are expected to
produce live separately in ``data/expected.tsv`` so that a bug in extraction
cannot quietly rewrite the expectations.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import bounds, llv
from .diamond import STRICT, HodgeDiamond, betti_from_diamond, parse_diamond, validate
from .salamon import salamon_residual

NAMES = ("Hilb2-K3", "Kummer-2", "Hilb3-K3", "Kummer-3", "OGrady-6")


@dataclass(frozen=True)
class ExampleRecord:
    name: str
    n: int
    diamond: HodgeDiamond
    expected: dict[str, int]  # n=2: b2, b3, b4prime; n=3: b2, b3, c, d, e


@dataclass(frozen=True)
class SubCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CertificateReport:
    name: str
    checks: tuple[SubCheck, ...]
    extracted: dict[str, int]

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def summary(self) -> str:
        stats = " ".join(f"{k}={v}" for k, v in self.extracted.items())
        status = "PASS" if self.passed else "FAIL"
        failed = [ch.name for ch in self.checks if not ch.passed]
        tail = f" failed={','.join(failed)}" if failed else ""
        return f"{status} {self.name} {stats}{tail}".rstrip()


def data_file(name: str):
    return resources.files("hkbetti").joinpath("data", name)


def list_examples() -> list[str]:
    return list(NAMES)


def _check_name(name: str):
    if name not in NAMES:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(NAMES)}")


def load_diamond(name: str) -> HodgeDiamond:
    _check_name(name)
    return parse_diamond(data_file(f"{name}.hodge").read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def _expected_table() -> dict[str, dict[str, int]]:
    text = data_file("expected.tsv").read_text(encoding="utf-8")
    table = {}
    for row in csv.DictReader(text.splitlines(), delimiter="\t"):
        n = int(row["n"])
        out = {"b2": int(row["b2"]), "b3": int(row["b3"])}
        if n == 2:
            out["b4prime"] = int(row["b4prime_or_c"])
        else:
            out.update(c=int(row["b4prime_or_c"]), d=int(row["d"]), e=int(row["e"]))
        table[row["name"]] = {"n": n, **out}
    return table


def load_example(name: str) -> ExampleRecord:
    _check_name(name)
    expected = dict(_expected_table()[name])
    n = expected.pop("n")
    return ExampleRecord(name, n, load_diamond(name), expected)


def verify_diamond(name: str, diamond: HodgeDiamond, expected: dict[str, int]) -> CertificateReport:
    """Run the full check list on ``diamond`` against ``expected``."""
    checks = []
    extracted: dict[str, int] = {}

    report = validate(diamond, STRICT)
    checks.append(SubCheck("strict_validation", report.ok,
                           ",".join(f.check for f in report.findings)))
    betti = betti_from_diamond(diamond)
    residual = salamon_residual(betti)
    checks.append(SubCheck("salamon_residual", residual == 0, str(residual)))
    extracted.update(b2=betti.b2, b3=betti[3])
    checks.append(SubCheck("b2_b3", (betti.b2, betti[3]) == (expected["b2"], expected["b3"])))

    if diamond.n == 2:
        try:
            prim = llv.extract_primitive_b4(betti.b2, betti[4])
        except ValueError as exc:
            checks.append(SubCheck("primitive_b4", False, str(exc)))
        else:
            extracted["b4prime"] = prim
            checks.append(SubCheck("primitive_b4", prim == expected["b4prime"], str(prim)))
            gap = bounds.dim4_identity(betti.b2, betti[3], prim)
            checks.append(SubCheck("dim4_identity", gap == 0, str(gap)))
    elif diamond.n == 3:
        try:
            mult = llv.extract_multiplicities(diamond)
        except ValueError as exc:
            checks.append(SubCheck("multiplicities", False, str(exc)))
        else:
            extracted.update(c=mult.c, d=mult.d, e=mult.e)
            want = (expected["c"], expected["d"], expected["e"])
            checks.append(SubCheck("multiplicities", tuple(mult) == want, str(tuple(mult))))
            residual_map = llv.verify_even_decomposition(diamond, mult)
            bad = residual_map.nonzero()
            extracted["residual"] = sum(abs(v) for v in bad.values())
            checks.append(SubCheck("even_decomposition", not bad, str(sorted(bad))))
    else:
        checks.append(SubCheck("dimension_supported", False, f"n={diamond.n}"))
    return CertificateReport(name, tuple(checks), extracted)


def verify_example(name: str) -> CertificateReport:
    rec = load_example(name)
    return verify_diamond(rec.name, rec.diamond, rec.expected)


def verify_all() -> list[CertificateReport]:
    return [verify_example(name) for name in NAMES]
