from core.exceptions import AlgebraError


class ParamsMismatchError(AlgebraError):
    """The element lives in a different Verma module than the reducer."""


class SingularVectorNotFoundError(AlgebraError):
    pass


class PreconditionError(AlgebraError):
    pass


class FusionCriterionMismatchError(AlgebraError):
    """The interval rule and the generator's zero locus disagree."""

    exit_status = 1
