"""Exception types shared across the package."""


class InvalidSource(ValueError):
    """The integer(s) handed to a builder cannot drive the construction."""


class PreconditionViolated(InvalidSource):
    """A divisor-range instance failed its arithmetic precondition."""


class ReductionViolated(RuntimeError):
    """A solver answer breaks a guarantee the construction relies on."""


class BudgetExceeded(RuntimeError):
    """A scan was stopped after exhausting its evaluation budget."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


class SamplingFailure(RuntimeError):
    """No prime was found in an interval within the allowed tries."""

    def __init__(self, lo: int, hi: int, tries: int, index=None):
        msg = f"no prime found in [{lo}, {hi}] after {tries} tries"
        if index is not None:
            msg += f" (item index {index})"
        super().__init__(msg)
        self.lo = lo
        self.hi = hi
        self.tries = tries
        self.index = index
