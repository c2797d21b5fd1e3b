from core.exceptions import AlgebraError


class UnsupportedWeightError(AlgebraError):
    """h = m^2/4 with m odd: no submodule generator is available."""


class SeriesMismatchError(AlgebraError):
    """Offsets of two series do not differ by an integer."""


class SeriesOrderError(AlgebraError):
    """A request reaches past the order a series was truncated at."""


class InvalidWeightError(AlgebraError):
    pass
