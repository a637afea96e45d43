"""Exception hierarchy shared by every module.

Each exception carries a stable ``code`` string that the command-line
front end turns into an exit status.
"""


class OrbitCalcError(Exception):
    code = "E_INTERNAL"


class IllegalWeights(OrbitCalcError, ValueError):
    """A weight system breaks one of the local or global legality rules."""

    code = "E_LEGALITY"


class InvariantRange(IllegalWeights):
    """A Seifert pair or orbit-data field is outside its allowed range."""


class IncompatibleWeights(OrbitCalcError, ValueError):
    """Two bundle blocks cannot be plumbed together."""

    code = "E_INCOMPATIBLE"


class UnsupportedConfiguration(OrbitCalcError, ValueError):
    code = "E_UNSUPPORTED"


class FixedPointFree(UnsupportedConfiguration):
    """Orbit data without fixed points (h_bar = 0)."""


class NotUnimodular(OrbitCalcError, ValueError):
    code = "E_NOT_UNIMODULAR"


class NoSuchSum(OrbitCalcError, ValueError):
    """Unimodular form not realised by a sum of S4, +-CP2 and S2xS2."""

    code = "E_NO_SUCH_SUM"


class NoSuchCase(OrbitCalcError, LookupError):
    code = "E_NO_SUCH_CASE"


class InternalInvariantError(OrbitCalcError, AssertionError):
    code = "E_INTERNAL"
