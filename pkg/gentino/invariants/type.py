import enum


class ModuliCase(enum.Enum):
    """Which invariants vanish, selecting the coordinates of a moduli point."""
    ABSOLUTE = "i1,i2,i3"
    ALPHA = "a1,a2"
    J6_RATIO = "J6^5/J10^3"
    J4_RATIO = "J4^5/J10^2"
    J10_ONLY = "J10"


__all__ = ['ModuliCase']
