import time

from .errors import BudgetExceeded

DEFAULT_NODES = 10**7
DEFAULT_SECONDS = 600.0


class Budget:
    """Node and wall-clock allowance for an exponential search."""

    def __init__(self, nodes=DEFAULT_NODES, seconds=DEFAULT_SECONDS):
        if nodes is not None and nodes <= 0:
            raise ValueError("node budget must be positive")
        if seconds is not None and seconds <= 0:
            raise ValueError("time budget must be positive")
        self.nodes = nodes
        self.seconds = seconds
        self.used = 0
        self._start = time.monotonic()

    def tick(self, what="search"):
        self.used += 1
        if self.nodes is not None and self.used > self.nodes:
            raise BudgetExceeded(
                f"{what} exceeded {self.nodes} nodes", nodes=self.used
            )
        # clock reads are cheap but not free
        if self.seconds is not None and self.used & 0x3FF == 0:
            elapsed = time.monotonic() - self._start
            if elapsed > self.seconds:
                raise BudgetExceeded(
                    f"{what} exceeded {self.seconds}s", nodes=self.used, seconds=elapsed
                )


def as_budget(budget):
    if budget is None:
        return Budget()
    if isinstance(budget, Budget):
        return budget
    if isinstance(budget, int):
        return Budget(nodes=budget)
    raise TypeError(f"cannot interpret {budget!r} as a budget")
