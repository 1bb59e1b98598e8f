from typing import Optional, Tuple


class SkewLogicError(Exception):
    pass


class ParseError(SkewLogicError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ProfileError(SkewLogicError):
    pass


class DerivationError(SkewLogicError):
    """A derivation does not prove the sequent it is checked against.

    `path` lists premise indices from the root down to the offending node.
    """

    def __init__(self, message: str, path: Tuple[int, ...] = ()):
        where = "/".join(str(i) for i in path) or "root"
        super().__init__(f"{message} (at {where})")
        self.reason = message
        self.path = path

    def under(self, index: int) -> "DerivationError":
        return type(self)(self.reason, (index,) + self.path)


class FocusedDerivationError(DerivationError):
    pass


class CutError(SkewLogicError):
    pass


class RewriteError(SkewLogicError):
    pass


class FocusError(SkewLogicError):
    pass


class BudgetExceeded(SkewLogicError):
    def __init__(self, message: str, limit: Optional[int] = None):
        super().__init__(message)
        self.limit = limit
