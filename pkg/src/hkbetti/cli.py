"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on usage errors or unreadable/malformed input. Results go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds, examples, llv
from .diamond import (STRICT, STRUCTURAL, DiamondFormatError, betti_from_diamond, format_diamond,
                      load_diamond, validate)
from .salamon import salamon_form, salamon_residual, specialized_relation_text

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(out, rows, tsv: bool):
    """Print ``(key, value)`` pairs as ``key=value`` words or one TSV row."""
    if tsv:
        print("\t".join(str(v) for _, v in rows), file=out)
    else:
        print(" ".join(f"{k}={v}" for k, v in rows), file=out)


def _emit_evidence(out, evidence, tsv: bool):
    for ev in evidence:
        print(ev.tsv() if tsv else ev.line(), file=out)


def _read_diamond(path):
    try:
        return load_diamond(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except DiamondFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_validate(args, out):
    diamond = _read_diamond(args.file)
    mode = STRICT if args.strict else STRUCTURAL
    report = validate(diamond, mode)
    if args.tsv:
        for f in report.checks:
            idx = ";".join(",".join(map(str, i)) if isinstance(i, tuple) else str(i) for i in f.indices)
            print(f"{f.check}\t{'pass' if f.passed else 'fail'}\t{idx}", file=out)
    else:
        print(f"{'PASS' if report.ok else 'FAIL'} mode={mode}", file=out)
        for f in report.findings:
            idx = " ".join(str(i).replace(" ", "") for i in f.indices)
            print(f"check={f.check} verdict=fail at={idx}", file=out)
    return OK if report.ok else FAILED


def _parse_betti(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"--betti must be comma-separated integers, got {text!r}") from None


def cmd_salamon(args, out):
    if args.file is not None and args.n is not None:
        raise UsageError("give either --n or a diamond file, not both")
    if args.file is not None:
        if args.betti is not None:
            raise UsageError("--betti cannot be combined with a diamond file")
        betti = betti_from_diamond(_read_diamond(args.file))
        n, b = betti.n, betti.b
    elif args.n is not None:
        n = args.n
        if n < 1:
            raise UsageError("--n must be positive")
        if args.betti is None:
            form = salamon_form(n)
            print(specialized_relation_text(n), file=out)
            for j, c in form.lhs.items():
                _emit(out, [("j", j), ("b", f"b{2 * n - j}"), ("coeff", c)], args.tsv)
            _emit(out, [("rhs", f"{form.rhs}*b{2 * n}")], args.tsv)
            return OK
        b = _parse_betti(args.betti)
        if len(b) != 4 * n + 1:
            raise UsageError(f"--betti needs {4 * n + 1} values for n={n}, got {len(b)}")
    else:
        raise UsageError("salamon needs --n or a diamond file")
    residual = salamon_residual(b, n)
    _emit(out, [("n", n), ("residual", residual)], args.tsv)
    return OK if residual == 0 else FAILED


def cmd_decompose(args, out):
    diamond = _read_diamond(args.file)
    betti = betti_from_diamond(diamond)
    if diamond.n == 2:
        try:
            prim = llv.extract_primitive_b4(betti.b2, betti[4])
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return FAILED
        gap = bounds.dim4_identity(betti.b2, betti[3], prim)
        _emit(out, [("b2", betti.b2), ("b3", betti[3]), ("b4prime", prim), ("identity", gap)], args.tsv)
        return OK if gap == 0 else FAILED
    if diamond.n != 3:
        raise UsageError(f"decompose supports n=2 and n=3 diamonds, got n={diamond.n}")
    try:
        mult = llv.extract_multiplicities(diamond)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    residual = llv.verify_even_decomposition(diamond, mult).nonzero()
    size = sum(abs(v) for v in residual.values())
    _emit(out, [("c", mult.c), ("d", mult.d), ("e", mult.e), ("residual", size)], args.tsv)
    return OK if not residual else FAILED


def cmd_bound(args, out):
    cert = bounds.bound_certificate(args.n)
    L = bounds.bound_polynomial(args.n)
    if not args.tsv:
        print(f"b2 <= {cert.b2}", file=out)
        for b in (cert.b2, cert.b2 + 1):
            print(f"L({b})={L(b)}", file=out)
    else:
        print(f"bound\t{cert.b2}\tpass", file=out)
    _emit_evidence(out, cert.evidence, args.tsv)
    for note in cert.assumptions:
        print(f"assumption\t{note}" if args.tsv else f"assumption: {note}", file=out)
    return OK if cert.ok else FAILED


def cmd_enumerate(args, out):
    if args.b2 < 3:
        raise UsageError("--b2 must be at least 3")
    caps = bounds.Caps(args.max_c, args.max_d, args.max_e, args.max_b3)
    for name in ("c", "d", "e", "b3"):
        if (getattr(caps, name) or 0) < 0:
            raise UsageError(f"--max-{name} must be nonnegative")
    try:
        cert = bounds.feasibility_certificate(args.b2, caps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for t in cert.tuples:
        _emit(out, [("c", t.c), ("d", t.d), ("e", t.e), ("b3", t.b3)], args.tsv)
    _emit(out, [("verdict", cert.verdict), ("count", len(cert.tuples))], args.tsv)
    _emit_evidence(out, cert.evidence, args.tsv)
    return OK if cert.ok else FAILED


def cmd_conjecture(args, out):
    root = bounds.conjectured_root(args.n)
    verified = bounds.conjecture_check(args.n)
    flag = str(verified).lower()
    if args.tsv:
        print(f"{root.symbolic()}\t{root.approx()}\t{flag}", file=out)
    else:
        print(f"root={root.symbolic()} ~{root.approx()} verified={flag}", file=out)
    return OK if verified else FAILED


def cmd_examples(args, out):
    if args.verify_all:
        reports = examples.verify_all()
        for rep in reports:
            if args.tsv:
                print(f"{rep.name}\t{'pass' if rep.passed else 'fail'}\t"
                      + "\t".join(f"{k}={v}" for k, v in rep.extracted.items()), file=out)
            else:
                print(rep.summary(), file=out)
        return OK if all(r.passed for r in reports) else FAILED
    if args.show:
        try:
            rec = examples.load_example(args.show)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        print(f"{rec.name} n={rec.n}", file=out)
        print(format_diamond(rec.diamond), file=out)
        _emit(out, list(rec.expected.items()), args.tsv)
        return OK
    for name in examples.list_examples():
        print(name, file=out)
    return OK


def cmd_relation(args, out):
    if args.n < 1:
        raise UsageError("--n must be positive")
    print(specialized_relation_text(args.n), file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tsv", action="store_true", help="tab-separated output")

    parser = argparse.ArgumentParser(prog="hkbetti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("validate", parents=[common], help="check a diamond file")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="irreducible hyperkahler checks")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("salamon", parents=[common], help="Salamon relation coefficients or residual")
    p.add_argument("file", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--betti", help="comma-separated b0,...,b4n")
    p.set_defaults(func=cmd_salamon)

    p = sub.add_parser("decompose", parents=[common], help="LLV multiplicities of a diamond")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("bound", parents=[common], help="certified bound on b2")
    p.add_argument("--n", type=int, required=True, choices=bounds.SUPPORTED)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("enumerate", parents=[common], help="feasible (c,d,e,b3) for a given b2")
    p.add_argument("--n", type=int, required=True, choices=(3,))
    p.add_argument("--b2", type=int, required=True)
    for name in ("c", "d", "e", "b3"):
        p.add_argument(f"--max-{name}", type=int, dest=f"max_{name}")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("conjecture", parents=[common], help="check the conjectured largest root")
    p.add_argument("--n", type=int, required=True, choices=bounds.SUPPORTED)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("examples", parents=[common], help="bundled example manifolds")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--verify-all", action="store_true")
    g.add_argument("--show", metavar="NAME")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("relation", parents=[common], help="print Salamon's relation with b0=1, b1=0")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_relation)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"hkbetti {args.command}: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
