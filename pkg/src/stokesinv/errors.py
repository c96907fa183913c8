"""Exception hierarchy. Each class carries the process exit code the CLI maps it to."""

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_NUMERIC = 4


class StokesInvError(Exception):
    exit_code = EXIT_DOMAIN


class ParseError(StokesInvError):
    exit_code = EXIT_PARSE


class BadStateName(ParseError):
    pass


class BadSubsystem(StokesInvError):
    pass


class BadRank(StokesInvError):
    pass


class BadLength(StokesInvError):
    pass


class DimensionMismatch(StokesInvError):
    pass


class WrongQubitCount(StokesInvError):
    pass


class OutOfRange(StokesInvError):
    pass


class ZeroShots(StokesInvError):
    pass


class NotUnimodular(StokesInvError):
    pass


class EnsembleAnnihilated(StokesInvError):
    pass


class NonHermitianInput(StokesInvError):
    exit_code = EXIT_NUMERIC


class NotPositiveSemidefinite(StokesInvError):
    exit_code = EXIT_NUMERIC


class NegativeTangle(StokesInvError):
    exit_code = EXIT_NUMERIC


class IdentityViolation(StokesInvError):
    exit_code = EXIT_NUMERIC
