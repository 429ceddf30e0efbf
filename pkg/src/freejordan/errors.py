"""Shared exception types."""


class InfeasibleError(RuntimeError):
    """Raised when a computation would exceed the configured size caps.

    Carries a human-readable estimate of the work that was refused, so the
    command line can report it and exit with the dedicated status code.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class UnluckyPrimeError(ArithmeticError):
    """Modular ranks disagreed across primes; names the suspect prime(s)."""

    def __init__(self, ranks):
        self.ranks = dict(ranks)
        best = max(self.ranks.values())
        self.outliers = sorted(p for p, r in self.ranks.items() if r < best)
        super().__init__(
            "rank disagreement across primes %s; suspect prime(s): %s"
            % (self.ranks, self.outliers)
        )
