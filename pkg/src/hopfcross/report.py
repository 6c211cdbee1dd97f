"""Check modes and reports shared by every verification routine.

A CheckReport carries a pass/fail flag plus the first violation found
(axiom name, witness indices, both sides of the failed identity) and a
count of checked items, so callers can print e.g. "pass (256 pairs)".
Checks stop at the first violation; reports are deterministic for a
fixed seed because every iteration order is fixed.
"""

from dataclasses import dataclass, field


EXHAUSTIVE_DIM_CAP = 32      # algebras larger than this default to random mode
MORPHISM_DIM_CAP = 81        # morphism/pair checks larger than this go random
DEFAULT_TRIALS = 20
RANDOM_COORD_BOUND = 10**6   # random test vectors draw integer coords in [-bound, bound]


@dataclass(frozen=True)
class CheckMode:
    """Exhaustive basis enumeration or seeded random exact evaluation."""

    kind: str  # "exhaustive" | "random"
    trials: int = DEFAULT_TRIALS
    seed: int = 0

    @staticmethod
    def exhaustive():
        return CheckMode("exhaustive")

    @staticmethod
    def random(trials=DEFAULT_TRIALS, seed=0):
        return CheckMode("random", trials=trials, seed=seed)

    @staticmethod
    def auto(dim, cap=EXHAUSTIVE_DIM_CAP, trials=DEFAULT_TRIALS, seed=0):
        """Exhaustive up to `cap`, else `trials` seeded random exact trials."""
        if dim <= cap:
            return CheckMode("exhaustive")
        return CheckMode("random", trials=trials, seed=seed)


@dataclass
class Violation:
    axiom: str
    witness: tuple
    lhs: object
    rhs: object

    def describe(self, fmt=str):
        return (f"{self.axiom} at {self.witness}: "
                f"lhs={_show(self.lhs, fmt)} rhs={_show(self.rhs, fmt)}")


def _show(value, fmt):
    if isinstance(value, dict):
        items = ", ".join(f"{k}: {fmt(v)}" for k, v in sorted(value.items()))
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(fmt(v) for v in value) + "]"
    return fmt(value)


@dataclass
class CheckReport:
    passed: bool = True
    violations: list = field(default_factory=list)
    checked: int = 0

    def fail(self, axiom, witness, lhs, rhs):
        self.passed = False
        self.violations.append(Violation(axiom, tuple(witness), lhs, rhs))

    def absorb(self, other):
        """Merge another report in; keeps the earliest violations first."""
        self.checked += other.checked
        if not other.passed:
            self.passed = False
            self.violations.extend(other.violations)
        return self

    def first(self):
        return self.violations[0] if self.violations else None
