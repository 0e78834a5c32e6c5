"""Exception types raised across the package.

Everything derives from SatgeomError so callers (and the CLI) can catch
one base class; the concrete classes match the failure modes named in the
individual operations' contracts.
"""


class SatgeomError(Exception):
    pass


# field tower construction
class NotPrime(SatgeomError):
    pass


class NoModulus(SatgeomError):
    pass


class NotASubfieldPower(SatgeomError):
    pass


# projective geometry
class SizeLimit(SatgeomError):
    pass


class WrongCount(SatgeomError):
    pass


class NotAFrame(SatgeomError):
    pass


# subgeometries and point-line geometry
class BadConfiguration(SatgeomError):
    pass


class BadIncidence(SatgeomError):
    pass


class PointOnHyperplane(SatgeomError):
    pass


class BadDirection(SatgeomError):
    pass


class ConfigMismatch(SatgeomError):
    pass


class NotConcurrent(SatgeomError):
    pass


class DegenerateConfig(SatgeomError):
    pass


# constructions
class OutOfDomain(SatgeomError):
    pass


class BadParams(SatgeomError):
    pass


class SelectionFailed(SatgeomError):
    pass


class NotDivisible(SatgeomError):
    pass


# verification / codes
class NotSaturating(SatgeomError):
    pass


class RankDeficient(SatgeomError):
    pass


class UnsupportedFormat(SatgeomError):
    pass
