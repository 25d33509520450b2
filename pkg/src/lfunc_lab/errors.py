"""Exception hierarchy shared by every module."""


class LFuncError(Exception):
    """Base class for all toolkit errors."""


class InvalidInput(LFuncError, ValueError):
    """Malformed descriptor, table or argument."""


class NotPrimitive(LFuncError):
    pass


class NonConvergence(LFuncError):
    pass


class NotCoprime(LFuncError):
    pass


class NotMonic(InvalidInput):
    pass


class NotSquareFree(LFuncError):
    """f is not squarefree modulo p; p is treated as ramified."""


class Excluded(LFuncError):
    """A prime for which no Euler factor is defined (carries a reason)."""


class Ramified(Excluded):
    pass


class UnsupportedModel(InvalidInput):
    pass


class MissingClass(InvalidInput):
    pass


class MissingPrime(LFuncError):
    pass


class NotFound(LFuncError):
    pass


class NormalFormMismatch(LFuncError):
    """det(xI - B^m) does not have constant term -1."""


class OrderMismatch(InvalidInput):
    pass


class DomainError(LFuncError, ValueError):
    pass


class PoleWarning(UserWarning):
    pass
