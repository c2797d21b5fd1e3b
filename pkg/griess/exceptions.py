from core.exceptions import AlgebraError, VerificationError


class InsufficientRulesError(AlgebraError):
    """No rule applies to a term that is not yet in normal form."""

    exit_status = 1


class UncitedRuleError(AlgebraError):
    pass


class InconsistentSystemError(VerificationError):
    pass
