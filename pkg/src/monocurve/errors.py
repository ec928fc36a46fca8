"""Exception hierarchy shared by the library, the service and the CLI.

Every domain error carries a stable ``code`` used on the wire and a process
exit code used by the CLI (0 success, 2 input error, 3 command precondition
unmet, 4 internal consistency check failed).
"""


class MonocurveError(Exception):
    code = "error"
    exit_code = 2


class ZeroOrNegativeEntryError(MonocurveError):
    code = "zero_or_negative_entry"


class NotCoprimeError(MonocurveError):
    """Sequence entries share a common factor; carries the offending gcd."""

    code = "not_coprime"

    def __init__(self, gcd, message=None):
        self.gcd = gcd
        super().__init__(message or f"entries are not coprime (gcd={gcd})")


class NegativeQueryError(MonocurveError):
    code = "negative_query"


class AllocationCapError(MonocurveError):
    """A membership table would exceed the configured cell cap."""

    code = "allocation_cap"


class WrongShapeError(MonocurveError):
    code = "wrong_shape"


class NotCoprimeAdjointError(MonocurveError):
    """Adjugate column of a candidate matrix has a common factor."""

    code = "not_coprime_adjoint"

    def __init__(self, gcd, message=None):
        self.gcd = gcd
        super().__init__(message or f"adjugate column entries share gcd {gcd}")


class DegenerateAdjugateError(MonocurveError):
    code = "degenerate_adjugate"


class ZeroVectorError(MonocurveError):
    code = "zero_vector"


class NotBinomialError(MonocurveError):
    code = "not_binomial"


class NotApplicableError(MonocurveError):
    """The homogeneous-rows period construction does not apply."""

    code = "not_applicable"
    exit_code = 3


class PreconditionError(MonocurveError):
    """A command-level precondition is unmet (e.g. family base not GNCI)."""

    code = "precondition_failed"
    exit_code = 3


class InternalCheckError(MonocurveError):
    """An invariant the theory guarantees failed; always a bug signal."""

    code = "internal_check"
    exit_code = 4


class IdentityAssertionError(InternalCheckError):
    code = "identity_assertion"


class InconsistentClassificationError(InternalCheckError):
    code = "inconsistent_classification"


CODE_TO_EXIT = {
    cls.code: cls.exit_code
    for cls in (
        MonocurveError,
        ZeroOrNegativeEntryError,
        NotCoprimeError,
        NegativeQueryError,
        AllocationCapError,
        WrongShapeError,
        NotCoprimeAdjointError,
        DegenerateAdjugateError,
        ZeroVectorError,
        NotBinomialError,
        NotApplicableError,
        PreconditionError,
        InternalCheckError,
        IdentityAssertionError,
        InconsistentClassificationError,
    )
}
