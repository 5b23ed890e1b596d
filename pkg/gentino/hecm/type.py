from enum import Enum


class TrialOutcome(Enum):
    """
    How a factoring attempt ended. SCREEN is the trial-division and perfect-power check run before any curve.
    """
    SCREEN = "screen"
    SETUP = "setup"
    STAGE1 = "stage1"
    STAGE2 = "stage2"
    CONTINUE = "continue"
    CANCELLED = "cancelled"

    @property
    def found_factor(self) -> bool:
        return self in (TrialOutcome.SCREEN, TrialOutcome.SETUP, TrialOutcome.STAGE1, TrialOutcome.STAGE2)

    @property
    def stage(self) -> int:
        """Stage reported with a factor: 0 for the screens, 1 when met while building the curve or in stage 1."""
        if self is TrialOutcome.SCREEN:
            return 0
        return 2 if self is TrialOutcome.STAGE2 else 1

    def __str__(self):
        return self.value


__all__ = ['TrialOutcome']
