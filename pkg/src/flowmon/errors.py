"""Exception types shared across the package.

The CLI maps these onto process exit codes: 2 for parse/validation
problems, 3 for size-guard refusals, 4 for inconsistent measurements
(handled in the CLI itself, not via an exception).
"""


class FlowmonError(Exception):
    exit_code = 1


class ParseError(FlowmonError):
    exit_code = 2


class ValidationError(FlowmonError):
    exit_code = 2


class WeightOverflowError(ValidationError):
    pass


class SizeGuardError(FlowmonError):
    exit_code = 3


class CandidateBudgetError(SizeGuardError):
    pass
