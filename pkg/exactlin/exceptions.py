from core.exceptions import AlgebraError


class SingularMatrixError(AlgebraError):
    pass


class DimensionMismatchError(AlgebraError):
    pass
