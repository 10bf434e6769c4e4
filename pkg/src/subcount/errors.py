"""Exception types raised across the package."""


class GroupError(Exception):
    """Base class for everything this package raises on bad input or caps."""


class InvalidPermutation(GroupError):
    pass


class OrderCapExceeded(GroupError):
    def __init__(self, cap, reached=None):
        self.cap = cap
        self.reached = reached
        msg = f"group order exceeds cap {cap}"
        if reached is not None:
            msg += f" (reached at least {reached})"
        super().__init__(msg)


class LatticeCapExceeded(GroupError):
    def __init__(self, message, partial_count=None):
        self.partial_count = partial_count
        super().__init__(message)


class IsomorphismCapExceeded(GroupError):
    pass


class InvalidAction(GroupError):
    pass


class NotPrimePower(GroupError):
    pass


class NotSquarefree(GroupError):
    pass


class EvenCharacteristic(GroupError):
    pass


class SizeMismatch(GroupError):
    pass


class InternalInconsistency(GroupError):
    pass


class FormatError(GroupError):
    pass


class ParseError(GroupError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")
