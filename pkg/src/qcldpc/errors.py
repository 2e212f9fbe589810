"""Exception hierarchy shared by the library and the CLI."""


class ValidationError(ValueError):
    """Base class for every invalid-input condition raised by the library."""


class InvalidEntries(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class SumMismatch(ValidationError):
    def __init__(self, cell, expected, got):
        self.cell = cell
        super().__init__(
            f"parts sum to {got} at cell (row {cell[0] + 1}, col {cell[1] + 1}), base has {expected}"
        )


class NotACover(ValidationError):
    def __init__(self, part, cell, detail=""):
        self.part = part
        self.cell = cell
        msg = f"part {part}: block at (row {cell[0] + 1}, col {cell[1] + 1}) is not a valid cover block"
        super().__init__(msg + (f" ({detail})" if detail else ""))


class MultiplicityMismatch(ValidationError):
    pass


class ExponentOutOfRange(ValidationError):
    pass


class DuplicateExponent(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class NotSquare(ValidationError):
    pass


class SideTooLarge(ValidationError):
    pass


class NotApplicable(ValidationError):
    pass


class NoNonzeroBound(ValidationError):
    pass


class WrongSubsetSize(ValidationError):
    pass


class DimensionTooLarge(ValidationError):
    pass


class NoNonzeroCodeword(ValidationError):
    pass


class ZeroDimension(ValidationError):
    pass
