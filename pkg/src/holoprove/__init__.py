"""holoprove: exact ODE certificates for quadratic convolution sequences.

The pipeline: derive the quadratic equation P(z, G) = 0 of the
generating function of a convolution-defined sequence, search for a
first-order linear ODE q0 G + q1 G' = R certified by a polynomial
identity, extract the induced recurrence with polynomial coefficients,
and cross-verify everything against independent exact term generators.
All arithmetic is exact rational arithmetic; nothing is floating point
except the final decimal approximations in singularity reports.
"""

from .algebraic import (
    AlgebraicEq,
    BranchReport,
    branch_check,
    derive_algebraic,
    normalize_bipoly,
    spec_from_algebraic,
)
from .certfile import (
    CertificateDocument,
    CertificateFormatError,
    read_certificate,
    write_certificate,
)
from .extract import (
    RecurrenceReport,
    extract_recurrence,
    format_recurrence,
    parse_recurrence,
    verify_recurrence,
)
from .ode import (
    Certificate,
    DegenerateOdeError,
    LinearOde,
    SingularityReport,
    UnitReport,
    find_first_order_ode,
    ode_series_check,
    singularity_report,
    smallest_positive_root_interval,
    unit_check,
    verify_certificate,
)
from .polynomials import (
    BiPoly,
    Rational,
    UPoly,
    discriminant_w,
    rational_roots,
    resultant_w,
    squarefree_part,
    upoly_gcd,
)
from .polytext import (
    PolyParseError,
    format_bipoly,
    format_upoly,
    parse_bipoly,
    parse_rational,
    parse_upoly,
)
from .sequences import (
    BFileError,
    ChouletSpec,
    CrosscheckReport,
    IntegralityError,
    PRecurrence,
    SingularRecurrenceError,
    conv_terms,
    crosscheck,
    parse_bfile,
    prec_eval,
)
from .series import (
    NonUnitSeriesError,
    NotARootError,
    RamifiedBranchError,
    Series,
    SqrtBranchError,
    bipoly_series,
    closed_form_series,
    newton_lift,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicEq",
    "BFileError",
    "BiPoly",
    "BranchReport",
    "Certificate",
    "CertificateDocument",
    "CertificateFormatError",
    "ChouletSpec",
    "CrosscheckReport",
    "DegenerateOdeError",
    "IntegralityError",
    "LinearOde",
    "NonUnitSeriesError",
    "NotARootError",
    "PolyParseError",
    "PRecurrence",
    "RamifiedBranchError",
    "Rational",
    "RecurrenceReport",
    "Series",
    "SingularRecurrenceError",
    "SingularityReport",
    "SqrtBranchError",
    "UnitReport",
    "UPoly",
    "branch_check",
    "bipoly_series",
    "closed_form_series",
    "conv_terms",
    "crosscheck",
    "derive_algebraic",
    "discriminant_w",
    "extract_recurrence",
    "find_first_order_ode",
    "format_bipoly",
    "format_recurrence",
    "format_upoly",
    "newton_lift",
    "normalize_bipoly",
    "ode_series_check",
    "parse_bfile",
    "parse_bipoly",
    "parse_rational",
    "parse_recurrence",
    "parse_upoly",
    "prec_eval",
    "rational_roots",
    "read_certificate",
    "resultant_w",
    "singularity_report",
    "smallest_positive_root_interval",
    "spec_from_algebraic",
    "squarefree_part",
    "unit_check",
    "upoly_gcd",
    "verify_certificate",
    "verify_recurrence",
    "write_certificate",
]
