"""Certificate files: a one-line header, then labelled polynomial
sections in canonical text form.

    holoprove-certificate v1
    P: (z - z^2)*w^2 + (-1 + z)*w + (1 - z - z^2)
    q0: ...
    q1: ...
    R: ...
    q: ...
    branch: 1

'#' comments and blank lines are ignored on input.  A stub carries only
P and branch (the output of a derivation without a proof); the four ODE
sections appear together or not at all.  Canonical files round-trip
byte-for-byte through read and write.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ode import Certificate, LinearOde
from .polynomials import BiPoly, UPoly
from .polytext import (
    PolyParseError,
    format_bipoly,
    format_upoly,
    parse_bipoly,
    parse_rational,
    parse_upoly,
)

HEADER = "holoprove-certificate v1"

_LABELS = ("P", "q0", "q1", "R", "q", "branch")


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class CertificateDocument:
    """Everything a certificate file stores.  ``ode`` and ``cofactor``
    are None for stubs."""

    p: BiPoly
    branch: Fraction
    ode: LinearOde | None = None
    cofactor: UPoly | None = None

    def certificate(self) -> Certificate:
        """The unverified in-memory certificate; stubs have none."""
        if self.ode is None or self.cofactor is None:
            raise CertificateFormatError(
                "certificate file is a stub: no ODE sections"
            )
        return Certificate(
            p=self.p,
            ode=self.ode,
            cofactor=self.cofactor,
            identity_residual_checked=False,
        )


def write_certificate(doc: CertificateDocument) -> str:
    lines = [HEADER, f"P: {format_bipoly(doc.p)}"]
    if doc.ode is not None and doc.cofactor is not None:
        lines.append(f"q0: {format_upoly(doc.ode.q0)}")
        lines.append(f"q1: {format_upoly(doc.ode.q1)}")
        lines.append(f"R: {format_upoly(doc.ode.rhs)}")
        lines.append(f"q: {format_upoly(doc.cofactor)}")
    lines.append(f"branch: {doc.branch}")
    return "\n".join(lines) + "\n"


def read_certificate(text: str) -> CertificateDocument:
    sections: dict[str, str] = {}
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not seen_header:
            if line != HEADER:
                raise CertificateFormatError(
                    f"line {lineno}: expected header {HEADER!r}"
                )
            seen_header = True
            continue
        label, sep, value = line.partition(":")
        label = label.strip()
        if not sep or label not in _LABELS:
            raise CertificateFormatError(
                f"line {lineno}: expected one of {', '.join(_LABELS)}"
            )
        if label in sections:
            raise CertificateFormatError(f"line {lineno}: duplicate {label!r}")
        sections[label] = value.strip()
    if not seen_header:
        raise CertificateFormatError("empty file: missing header")
    for required in ("P", "branch"):
        if required not in sections:
            raise CertificateFormatError(f"missing section {required!r}")
    ode_labels = ("q0", "q1", "R", "q")
    present = [label for label in ode_labels if label in sections]
    if present and len(present) != len(ode_labels):
        missing = sorted(set(ode_labels) - set(present))
        raise CertificateFormatError(
            f"incomplete ODE sections: missing {', '.join(missing)}"
        )
    try:
        p = parse_bipoly(sections["P"])
        branch = parse_rational(sections["branch"])
        ode = None
        cofactor = None
        if present:
            ode = LinearOde(
                q0=parse_upoly(sections["q0"]),
                q1=parse_upoly(sections["q1"]),
                rhs=parse_upoly(sections["R"]),
            )
            cofactor = parse_upoly(sections["q"])
    except (PolyParseError, ValueError) as exc:
        raise CertificateFormatError(str(exc)) from exc
    return CertificateDocument(p=p, branch=branch, ode=ode, cofactor=cofactor)
