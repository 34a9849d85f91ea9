class BrickworkError(ValueError):
    """Root of every error the engine raises; exit_code is the CLI status."""
    exit_code = 2


class InvalidInputError(BrickworkError):
    exit_code = 2


class IncompatibleWeightsError(BrickworkError):
    exit_code = 2

    def __init__(self, detail: str = ""):
        message = "incompatible weights"
        super().__init__(f"{message}: {detail}" if detail else message)


class EnumerationCapError(BrickworkError):
    exit_code = 3

    def __init__(self, degree: int, cap: int):
        super().__init__(f"degree too large for enumeration: {degree} > cap {cap}")
        self.degree = degree
        self.cap = cap


class ValidityWindowError(BrickworkError):
    """Raised when 2k > N, where the series carries the O_N(p) remainder."""
    exit_code = 3


class WeingartenDomainError(BrickworkError):
    exit_code = 3


class CalibrationError(BrickworkError):
    exit_code = 4

    def __init__(self, message: str, table=None):
        super().__init__(message)
        self.table = table or []
