"""Command-line driver.

    holoprove derive SPEC            print the algebraic equation
    holoprove prove SPEC [--out F]   find and certify the ODE + recurrence
    holoprove verify CERT            recheck a certificate end to end

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 search
exhausted without finding an ODE.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .algebraic import AlgebraicEq, derive_algebraic, spec_from_algebraic
from .certfile import (
    CertificateDocument,
    CertificateFormatError,
    read_certificate,
    write_certificate,
)
from .extract import extract_recurrence, format_recurrence, verify_recurrence
from .ode import DegenerateOdeError, find_first_order_ode, verify_certificate
from .polytext import PolyParseError, format_bipoly
from .sequences import BFileError, ChouletSpec, conv_terms, crosscheck, parse_bfile
from .series import newton_lift

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_NOT_FOUND = 3

_SPEC_KEYS = ("a0", "a1", "k", "l")


class SpecFormatError(ValueError):
    pass


def parse_spec_text(text: str) -> ChouletSpec:
    """Line-oriented 'key = value' with keys a0, a1, k, l."""
    values: dict[str, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in _SPEC_KEYS:
            raise SpecFormatError(
                f"line {lineno}: expected '<key> = <rational>' with key in "
                f"{', '.join(_SPEC_KEYS)}"
            )
        if key in values:
            raise SpecFormatError(f"line {lineno}: duplicate key {key!r}")
        try:
            values[key] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise SpecFormatError(
                f"line {lineno}: bad rational {value.strip()!r}"
            ) from None
    missing = [key for key in _SPEC_KEYS if key not in values]
    if missing:
        raise SpecFormatError(f"missing keys: {', '.join(missing)}")
    return ChouletSpec(**values)


def _read_spec(path: str) -> ChouletSpec:
    return parse_spec_text(Path(path).read_text())


def _cmd_derive(args: argparse.Namespace) -> int:
    spec = _read_spec(args.spec)
    eq = derive_algebraic(spec)
    print(format_bipoly(eq.p))
    print("self-check: series residual zero through order 30", file=sys.stderr)
    if args.out:
        doc = CertificateDocument(p=eq.p, branch=eq.branch_value)
        Path(args.out).write_text(write_certificate(doc))
    return EXIT_OK


def _cmd_prove(args: argparse.Namespace) -> int:
    spec = _read_spec(args.spec)
    eq = derive_algebraic(spec)
    try:
        cert = find_first_order_ode(eq, args.max_degree)
    except DegenerateOdeError as exc:
        print(f"no usable ODE: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    if cert is None:
        print(
            f"no first-order ODE within degree schedule 0..{args.max_degree}",
            file=sys.stderr,
        )
        return EXIT_NOT_FOUND
    recurrence = extract_recurrence(cert.ode)
    print(format_recurrence(recurrence))
    if args.out:
        doc = CertificateDocument(
            p=eq.p,
            branch=eq.branch_value,
            ode=cert.ode,
            cofactor=cert.cofactor,
        )
        Path(args.out).write_text(write_certificate(doc))
    return EXIT_OK


def _digits_note(value: Fraction, index: int) -> str:
    if value.denominator == 1:
        return f"a({index}) digits: {len(str(abs(value.numerator)))}"
    return f"a({index}) = {value}"


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = read_certificate(Path(args.cert).read_text())
    cert = doc.certificate()
    machine = args.machine
    lines: list[str] = []
    keyvals: list[str] = []
    failed = False

    def section(name: str, ok: bool, note: str) -> None:
        nonlocal failed
        failed = failed or not ok
        status = "PASS" if ok else "FAIL"
        lines.append(f"  {name:<12} {status}  {note}")
        keyvals.append(f"{name}={'pass' if ok else 'fail'}")

    lines.append(f"certificate: {args.cert}")

    identity_ok = verify_certificate(cert)
    section("identity", identity_ok, "q0*w*Pw - q1*Pz - R*Pw - q*P == 0")

    branch_ok = True
    branch_note = ""
    eq = None
    try:
        eq = AlgebraicEq(p=doc.p, branch_value=doc.branch)
    except ValueError as exc:
        branch_ok, branch_note = False, str(exc)
    if eq is not None:
        unit = doc.p.partial_w().evaluate(0, doc.branch)
        root = doc.p.evaluate(0, doc.branch)
        branch_ok = root == 0 and unit != 0
        branch_note = f"P(0, {doc.branch}) = {root}, dP/dw(0, {doc.branch}) = {unit}"
        keyvals.append(f"unit_value={unit}")
    section("branch", branch_ok, branch_note)

    terms = None
    if branch_ok and eq is not None:
        try:
            spec = spec_from_algebraic(eq)
        except ValueError as exc:
            section("terms", False, str(exc))
        else:
            terms = conv_terms(spec, args.terms)
            lifted = newton_lift(doc.p, doc.branch, args.terms)
            agree = terms == list(lifted.coeffs)
            last = args.terms - 1
            note = (
                f"newton == convolution on 0..{last}; "
                f"{_digits_note(terms[last], last)}"
            )
            section("terms", agree, note)
            keyvals.append(f"terms_count={args.terms}")
            if terms[last].denominator == 1:
                keyvals.append(
                    f"last_term_digits={len(str(abs(terms[last].numerator)))}"
                )
            if args.verbose:
                lines.append("  terms:")
                lines.extend(f"    {c}" for c in terms)
    else:
        section("terms", False, "skipped: branch check failed")

    recurrence = extract_recurrence(cert.ode)
    if terms is not None and len(terms) > recurrence.valid_from:
        report = verify_recurrence(recurrence, terms)
        section("recurrence", report.ok, report.describe())
        keyvals.append(f"recurrence_from={report.first_n}")
        keyvals.append(f"recurrence_to={report.last_n}")
    else:
        section("recurrence", False, "skipped: no terms to check against")

    if args.bfile:
        try:
            reference = parse_bfile(Path(args.bfile).read_text())
        except BFileError as exc:
            section("bfile", False, str(exc))
        else:
            if terms is not None:
                report = crosscheck(terms, reference, offset=0)
                section("bfile", report.ok, report.describe())
                keyvals.append(f"bfile_compared={report.compared}")
            else:
                section("bfile", False, "skipped: no terms to check against")
    else:
        lines.append("  bfile        SKIP  no reference file given")
        keyvals.append("bfile=skip")

    result = "FAIL" if failed else "PASS"
    lines.append(f"result: {result}")
    keyvals.append(f"result={'fail' if failed else 'pass'}")

    print("\n".join(keyvals if machine else lines))
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holoprove",
        description=(
            "Derive the algebraic equation of a quadratic convolution "
            "sequence, certify a first-order ODE for it, and extract and "
            "verify the induced recurrence."
        ),
        epilog=(
            "exit codes: 0 success, 1 verification failure, 2 bad input, "
            "3 search exhausted"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    derive = sub.add_parser(
        "derive", help="print the algebraic equation of the generating function"
    )
    derive.add_argument("spec", help="spec file with a0, a1, k, l")
    derive.add_argument(
        "--out", metavar="FILE", help="also write a certificate stub"
    )
    derive.set_defaults(func=_cmd_derive)

    prove = sub.add_parser(
        "prove", help="search for a first-order ODE and print its recurrence"
    )
    prove.add_argument("spec", help="spec file with a0, a1, k, l")
    prove.add_argument(
        "--max-degree",
        type=int,
        default=8,
        metavar="D",
        help="largest degree level to try (default 8)",
    )
    prove.add_argument(
        "--out", metavar="FILE", help="write the certificate here"
    )
    prove.set_defaults(func=_cmd_prove)

    verify = sub.add_parser("verify", help="recheck a certificate end to end")
    verify.add_argument("cert", help="certificate file")
    verify.add_argument(
        "--terms",
        type=int,
        default=251,
        metavar="N",
        help="how many terms to expand and compare (default 251)",
    )
    verify.add_argument(
        "--bfile", metavar="FILE", help="crosscheck terms against a b-file"
    )
    verify.add_argument(
        "--machine",
        action="store_true",
        help="print key=value lines instead of the report",
    )
    verify.add_argument(
        "--verbose", action="store_true", help="also list the expanded terms"
    )
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "terms", 2) < 2:
        print("error: --terms must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "max_degree", 0) < 0:
        print("error: --max-degree must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (
        SpecFormatError,
        CertificateFormatError,
        PolyParseError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
