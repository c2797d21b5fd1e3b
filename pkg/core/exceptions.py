# core/exceptions.py


class AlgebraError(Exception):
    """
    Base class for every error raised by the c1_fusion apps.

    `exit_status` is the process status a management command reports when the
    error escapes: 2 for usage or precondition problems, 1 for a failed
    verification.
    """

    exit_status = 2


class ConfigError(AlgebraError):
    pass


class VerificationError(AlgebraError):
    """A computed value does not reproduce the expected one."""

    exit_status = 1
