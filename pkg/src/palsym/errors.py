"""Exception types shared across the package."""


class InvalidLetterError(ValueError):
    """A character outside the two-letter alphabet was encountered."""

    def __init__(self, position: int, char: str):
        super().__init__(f"invalid letter {char!r} at position {position}")
        self.position = position
        self.char = char


class LengthBudgetExceeded(ValueError):
    """An input is longer than the guard for the requested computation."""


class InvalidPairError(ValueError):
    """An (alpha, beta) pair outside the supported seven-pair set."""


class TerminalStateError(RuntimeError):
    """A move was requested although the game is already over."""
